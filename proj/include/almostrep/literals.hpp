#pragma once

#include <string>

#include "almostrep/groups.hpp"

namespace ar::literals {

// Text form of group elements:
//   Z^d        "(3,-1)"  (or "5" for d = 1)
//   H3         "a^2 b^-1 c^3", "e" for the identity; letters multiply left to right
//   products   "((1,0,0),(2))" with one literal per factor
std::string format_element(const groups::GroupElement& g);
groups::GroupElement parse_element(const groups::GroupId& g, const std::string& text);

} // namespace ar::literals
