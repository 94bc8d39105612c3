#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cosineq {

// Parses an angle literal: a plain real ("0.25", "1e-1"), a rational
// ("3/4"), or a rational multiple of pi ("pi", "pi/5", "2pi/7", "3*pi/4").
// Multiples of pi are evaluated as coefficient * pi / denominator so that
// five "pi/5" entries sum to pi exactly in binary-64.
double parse_angle(std::string_view text);

// Comma-separated list of angle literals.
std::vector<double> parse_angle_list(std::string_view text);

// Comma-separated list of plain reals.
std::vector<double> parse_number_list(std::string_view text);

}  // namespace cosineq
