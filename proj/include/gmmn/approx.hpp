#pragma once

#include <vector>

#include "gmmn/instance_graph.hpp"
#include "gmmn/network.hpp"

namespace gmmn {

struct Coloring {
  int k = 0;
  std::vector<int> color;                 // per pair
  std::vector<std::vector<int>> classes;  // pair ids per colour
};

// Saturation-degree greedy (DSATUR). Uses at most max degree + 1 colours.
Coloring greedy_color(const IntersectionGraph& g);
bool is_proper(const IntersectionGraph& g, const Coloring& c);

// Every pair routed along its L-path, horizontal leg first from s.
// The solution ratio is the colour count, which bounds the length against the optimum.
Solution approx_solve(const Instance& instance);

}  // namespace gmmn
