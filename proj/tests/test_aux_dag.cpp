#include <doctest.h>

#include "gmmn/aux_dag.hpp"
#include "gmmn/generate.hpp"
#include "gmmn/instance_graph.hpp"
#include "gmmn/star.hpp"
#include "support.hpp"

using namespace gmmn;

namespace {

// Longest-path value of the DAG for pair 0 as center. The frame points into the grid,
// so the value is taken while the grid is alive.
Length center_value(const std::vector<TerminalPair>& raw, bool reference = false) {
  const auto pairs = normalized(raw);
  const HananGrid grid = build_hanan_grid(pairs);
  const auto ig = build_intersection_graph(pairs);
  const AuxDag dag = reference ? build_reference_dag(grid, pairs, 0, ig.adjacency[0])
                               : build_simplified_dag(grid, pairs, 0, ig.adjacency[0]);
  CHECK(is_acyclic(dag));
  return longest_path(dag).value;
}

}  // namespace

TEST_SUITE("aux_dag") {
  TEST_CASE("boundary sets of small windows") {
    const BoundarySets b33 = boundary_sets(3, 3, {0, 2, 0, 2});
    CHECK(b33.lower_left.size() == 5);
    CHECK(b33.upper_right.size() == 5);
    CHECK(b33.corner.size() == 2);
    CHECK(b33.interior.size() == 1);
    CHECK(boundary_sets(2, 2, {0, 1, 0, 1}).interior.empty());
    CHECK(boundary_sets(2, 3, {0, 1, 0, 2}).corner.size() == 2);
    // A window inside a larger frame keeps its own counts.
    CHECK(boundary_sets(6, 5, {1, 3, 2, 4}).lower_left.size() == 5);
  }

  TEST_CASE("longest path on tiny frames") {
    const HananGrid point({0}, {0});
    const LocalFrame one(point, {0, 0, 0, 0}, false);
    const LongestPath lp = longest_path(AuxDag(one, {}));
    CHECK(lp.value == 0);
    CHECK(lp.arcs.empty());

    // Two routes from the lower-left to the upper-right corner: along the bottom row
    // (weighted 3) or up the left column (weighted 5).
    const HananGrid g({0, 3}, {0, 5});
    const LocalFrame f(g, {0, 1, 0, 1}, false);
    std::vector<WindowSpec> windows(2);
    windows[0].box = {0, 1, 0, 0};
    windows[1].box = {0, 0, 0, 1};
    const AuxDag dag(f, windows);
    CHECK(is_acyclic(dag));
    CHECK(longest_path(dag).value == 5);
    std::vector<WindowSpec> bottom_only{windows[0]};
    CHECK(longest_path(AuxDag(f, bottom_only)).value == 3);
  }

  TEST_CASE("star dag values") {
    CHECK(center_value({{{0, 0}, {10, 10}}}) == 0);
    CHECK(center_value(test::kNested.pairs) == 8);
    CHECK(center_value(test::kCrossed.pairs) == 4);
  }

  TEST_CASE("simplified and reference dags agree on small windows") {
    int compared = 0;
    for (int seed = 0; seed < 200; ++seed) {
      const Instance inst = generate_instance(GenClass::Star, 2 + seed % 5, 10, seed);
      auto pairs = normalized(inst.pairs);
      const auto ig = build_intersection_graph(pairs);
      int center = 0;
      for (int v = 0; v < ig.size(); ++v)
        if (ig.degree(v) > ig.degree(center)) center = v;
      std::swap(pairs[0], pairs[center]);
      CHECK(center_value(pairs) == center_value(pairs, true));
      ++compared;
    }
    CHECK(compared == 200);
  }

  TEST_CASE("simplified dag size stays within six times the center grid") {
    for (int seed = 0; seed < 20; ++seed) {
      const int n = 10 + 20 * seed;
      const Instance inst = generate_instance(GenClass::Star, n, minimum_coord_range(GenClass::Star, n), seed);
      auto pairs = normalized(inst.pairs);
      const auto ig = build_intersection_graph(pairs);
      int center = 0;
      for (int v = 0; v < ig.size(); ++v)
        if (ig.degree(v) > ig.degree(center)) center = v;
      const HananGrid grid = build_hanan_grid(pairs);
      const AuxDag dag = build_simplified_dag(grid, pairs, center, ig.adjacency[center]);
      const Subgrid box = subgrid(grid, pairs[center]);
      CHECK(dag.node_count() <= 6 * box.cols() * box.rows());
      CHECK(is_acyclic(dag));
    }
  }
}
