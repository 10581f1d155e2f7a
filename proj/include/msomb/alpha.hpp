#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace msomb {

/// Exponent of the power mean on the extended real line.
///
/// The limits alpha -> 0 and alpha -> +-inf are separate tags; a Finite
/// value is never 0, NaN or infinite.
class Alpha {
public:
  enum class Kind { Finite, ZeroLimit, PlusInf, MinusInf };

  /// Throws DomainError for 0, NaN or +-inf.
  static Alpha finite(double value);
  static constexpr Alpha zero_limit() noexcept { return Alpha(Kind::ZeroLimit, 0.0); }
  static constexpr Alpha plus_inf() noexcept { return Alpha(Kind::PlusInf, 0.0); }
  static constexpr Alpha minus_inf() noexcept { return Alpha(Kind::MinusInf, 0.0); }
  /// 0 maps to ZeroLimit and +-inf to the infinite tags.
  static Alpha from_real(double value);

  /// Decimal literal, or one of "0", "inf", "+inf", "-inf", "0-limit".
  static Alpha parse(std::string_view text);

  constexpr Kind kind() const noexcept { return kind_; }
  constexpr bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  /// Value of a Finite alpha. Throws std::logic_error for the tags.
  double value() const;

  /// Position on the extended real line: -inf, the value, 0 or +inf.
  double order_key() const noexcept;

  friend std::partial_ordering operator<=>(const Alpha& a, const Alpha& b) noexcept {
    return a.order_key() <=> b.order_key();
  }
  friend bool operator==(const Alpha& a, const Alpha& b) noexcept {
    return a.kind_ == b.kind_ && a.value_ == b.value_;
  }

private:
  constexpr Alpha(Kind kind, double value) noexcept : kind_(kind), value_(value) {}

  Kind kind_;
  double value_;
};

/// Shortest round-trip decimal for Finite, "0-limit", "+inf", "-inf" otherwise.
std::string to_string(const Alpha& a);

}  // namespace msomb
