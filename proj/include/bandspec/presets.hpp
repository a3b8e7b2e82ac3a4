#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bandspec/operator.hpp"

namespace bandspec {

/// Complex literal: `[-]a[(+|-)bi]`, plus the pure-imaginary shorthands
/// "i", "-i", "2i", "1+i".  Throws std::invalid_argument on anything else.
Complex parse_complex(std::string_view text);

/// Comma-separated list of exactly n complex literals.
std::vector<Complex> parse_complex_list(std::string_view text, std::size_t n);

/// "r1,r2,s1,s2,t1,t2" -> validated parameters.
OperatorParams params_from_literal(std::string_view text);

/// Named operators.  Fixed names: paper-ex1, paper-ex2, delta.
/// Parameterized families take complex arguments in parentheses:
/// brst(r,s,t), brs(r,s), zweier(s).
OperatorParams preset(std::string_view name);

const std::vector<std::string>& preset_names();

/// "re_min,re_max,im_min,im_max" as four real literals.
std::array<double, 4> parse_extents(std::string_view text);

/// "nx,ny" as two positive integers.
std::pair<int, int> parse_resolution(std::string_view text);

}  // namespace bandspec
