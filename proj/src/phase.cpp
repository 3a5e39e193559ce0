#include "catmode/phase.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <cmath>
#include <numbers>
#include <string>

namespace catmode {

std::complex<double> unit_phase(double phi) {
  const double quarters = phi / (std::numbers::pi / 2.0);
  const double nearest = std::round(quarters);
  if (std::abs(quarters - nearest) <= 4.0 * std::numeric_limits<double>::epsilon() *
                                            std::max(1.0, std::abs(quarters))) {
    switch (((static_cast<long long>(nearest) % 4) + 4) % 4) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  return std::polar(1.0, phi);
}

namespace {

std::optional<double> parse_number(std::string_view s) {
  if (s.empty()) return std::nullopt;
  // std::from_chars<double> is available in libstdc++ 11.
  double v = 0.0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return v;
}

}  // namespace

std::optional<double> parse_phase(std::string_view text) {
  const auto pos = text.find("pi");
  if (pos == std::string_view::npos) return parse_number(text);

  double sign = 1.0;
  std::string_view head = text.substr(0, pos);
  if (!head.empty() && head.front() == '-') {
    sign = -1.0;
    head.remove_prefix(1);
  }
  double numerator = 1.0;
  if (!head.empty()) {
    if (head.back() == '*') head.remove_suffix(1);
    auto k = parse_number(head);
    if (!k) return std::nullopt;
    numerator = *k;
  }
  std::string_view tail = text.substr(pos + 2);
  double denominator = 1.0;
  if (!tail.empty()) {
    if (tail.front() != '/') return std::nullopt;
    auto d = parse_number(tail.substr(1));
    if (!d || *d == 0.0) return std::nullopt;
    denominator = *d;
  }
  return sign * numerator * std::numbers::pi / denominator;
}

}  // namespace catmode
