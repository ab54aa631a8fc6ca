#pragma once

#include "pln/graph.hpp"

#include <string>
#include <string_view>

namespace pln {

// Line-oriented graph document:
//   even a b c
//   odd s
//   edge a s
//   spin s = 3^(1/4)
//   spin a = 1.25
// '#' starts a comment. Missing spins default to 1. Spins of the form n^(p/4)
// with a common n (or plain integers) stay exact; any decimal literal or a
// second radicand switches every spin to float mode.
SpinGraph parse_graph(std::string_view text);
std::string format_graph(const SpinGraph& sg);

}  // namespace pln
