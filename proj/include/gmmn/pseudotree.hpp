#pragma once

#include <optional>
#include <vector>

#include "gmmn/instance_graph.hpp"
#include "gmmn/network.hpp"

namespace gmmn {

// Transpose first, then negate the requested axes.
struct CoordTransform {
  bool transpose = false;
  bool negate_x = false;
  bool negate_y = false;
  Point apply(Point p) const;
  Point invert(Point p) const;
  TerminalPair apply(const TerminalPair& pair) const { return {apply(pair.s), apply(pair.t)}; }
};

enum class PassageAxis { Hor, Vert };

// The cycle pair's path crosses the edge {q, q_plus} after arriving over {q_minus, q};
// q_minus == q when it starts at q. Vertices are on the transformed grid.
struct PassageTriple {
  GridVertex q_minus;
  GridVertex q;
  GridVertex q_plus;
  PassageAxis axis = PassageAxis::Hor;
  friend bool operator==(const PassageTriple&, const PassageTriple&) = default;
};

struct ReductionPlan {
  // True when the graph has no cycle and nothing needs splitting.
  bool pass_through = false;
  int v = -1;
  int u1 = -1;
  int u2 = -1;
  CoordTransform transform;
  // Transformed copy of the instance, v stored with s at its lower-left corner.
  std::vector<TerminalPair> pairs;
  HananGrid grid;
  GridVertex corner;  // (beta, alpha) on the transformed grid
  std::vector<GridVertex> x_hor;
  std::vector<GridVertex> x_vert;
  std::vector<PassageTriple> triples;
};

// Splits the first degenerate cycle pair between its two cycle neighbours. The split
// pieces are appended as the last two pairs and the original pair is removed; the
// returned index map gives, for every new pair, the original pair it came from.
struct CutResult {
  std::vector<TerminalPair> pairs;
  std::vector<int> origin;
};
std::optional<CutResult> cut_degenerate_cycle(const std::vector<TerminalPair>& pairs,
                                              const IntersectionGraph& ig, const std::vector<int>& cycle);

// Plan for the first cyclic component. With several candidate cycle pairs the one with
// the fewest triples is chosen. Throws TriangleFound or NotAPseudotree.
ReductionPlan build_reduction_plan(const std::vector<TerminalPair>& pairs, const IntersectionGraph& ig);

// (P - v) followed by v1..v4, in transformed coordinates.
std::vector<TerminalPair> derived_instance(const ReductionPlan& plan, const PassageTriple& triple);

// m - n + components; zero exactly for forests.
long long cycle_rank(const IntersectionGraph& g);

Solution solve_pseudotree(const Instance& instance);

}  // namespace gmmn
