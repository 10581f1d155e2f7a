#include "msomb/alpha.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "msomb/errors.hpp"

namespace msomb {

Alpha Alpha::finite(double value) {
  if (std::isnan(value) || std::isinf(value) || value == 0.0)
    throw DomainError("finite alpha must be a nonzero real number");
  return Alpha(Kind::Finite, value);
}

Alpha Alpha::from_real(double value) {
  if (std::isnan(value)) throw DomainError("alpha is NaN");
  if (value == 0.0) return zero_limit();
  if (std::isinf(value)) return value > 0 ? plus_inf() : minus_inf();
  return Alpha(Kind::Finite, value);
}

Alpha Alpha::parse(std::string_view text) {
  if (text == "inf" || text == "+inf") return plus_inf();
  if (text == "-inf") return minus_inf();
  if (text == "0-limit") return zero_limit();

  double value = 0.0;
  const char* first = text.data();
  if (!text.empty() && text.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw ArgumentError("cannot parse alpha '" + std::string(text) + "'");
  if (std::isnan(value) || std::isinf(value))
    throw ArgumentError("spell infinite alpha as 'inf' or '-inf', got '" + std::string(text) + "'");
  return from_real(value);
}

double Alpha::value() const {
  if (kind_ != Kind::Finite) throw std::logic_error("value() on a limit alpha " + to_string(*this));
  return value_;
}

double Alpha::order_key() const noexcept {
  switch (kind_) {
    case Kind::Finite: return value_;
    case Kind::ZeroLimit: return 0.0;
    case Kind::PlusInf: return std::numeric_limits<double>::infinity();
    case Kind::MinusInf: return -std::numeric_limits<double>::infinity();
  }
  return 0.0;
}

std::string to_string(const Alpha& a) {
  switch (a.kind()) {
    case Alpha::Kind::ZeroLimit: return "0-limit";
    case Alpha::Kind::PlusInf: return "+inf";
    case Alpha::Kind::MinusInf: return "-inf";
    case Alpha::Kind::Finite: break;
  }
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, a.value());
  return std::string(buf, ptr);
}

}  // namespace msomb
