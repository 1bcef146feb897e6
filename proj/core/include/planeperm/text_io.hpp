#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "planeperm/permutation.hpp"

namespace planeperm {

// Whitespace-separated decimal integers, optional leading '-'.
std::vector<int> parse_int_sequence(std::string_view text);

// One-line form: the i-th token is the image of the i-th ground element.
// Tokens must be exactly the ground set, each element once.
Permutation parse_one_line(std::string_view text, const GroundSet& g);

// Images in canonical ground order, single spaces.
std::string format_one_line(const Permutation& pi);
std::string format_int_sequence(const std::vector<int>& values);

// "(0,-4,3,-1,2,4,-3)(1)(-2)" style, in canonical cycle order.
std::string format_cycles(const CycleStats& stats);
std::string format_cycles(const Permutation& pi);

}  // namespace planeperm
