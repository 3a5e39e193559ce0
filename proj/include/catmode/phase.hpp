#pragma once

#include <complex>
#include <optional>
#include <string_view>

namespace catmode {

// e^{i phi}, exact at integer multiples of pi/2 so that parity factors such as
// 1 + e^{i pi} vanish bitwise rather than leaving a 1e-16 residue.
std::complex<double> unit_phase(double phi);

// Parses radians or the literals `0`, `pi`, `pi/2`, `pi/4`, `3pi/4`, `2pi/3`, ...
// (general form [k]pi[/d], optional leading '-'). Returns nullopt on bad input.
std::optional<double> parse_phase(std::string_view text);

}  // namespace catmode
