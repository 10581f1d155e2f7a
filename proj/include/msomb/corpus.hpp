#pragma once

#include <cstdint>
#include <vector>

#include "msomb/graph.hpp"

namespace msomb {

/// The fixed verification corpus: the 18 octane skeletons, all trees on
/// 1..7 vertices, K_n (n <= 6), K_{a,b} (1 <= a <= b <= 4), paths, cycles and
/// stars up to 10 vertices, and K_3 + K_4 as a disconnected example.
std::vector<NamedGraph> default_corpus();

constexpr std::uint64_t kDefaultRandomSeed = 20220613;

/// `count` connected G(n, p) graphs with n uniform in [2, max_vertices] and
/// p uniform in [0.15, 0.85]. Names record the seed and index.
std::vector<NamedGraph> random_corpus(std::uint64_t seed, std::size_t count, Vertex max_vertices = 12);

}  // namespace msomb
