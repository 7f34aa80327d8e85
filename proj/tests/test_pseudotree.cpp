#include <doctest.h>

#include <map>

#include "gmmn/errors.hpp"
#include "gmmn/generate.hpp"
#include "gmmn/oracle.hpp"
#include "gmmn/pseudotree.hpp"
#include "gmmn/tree_dp_fast.hpp"
#include "support.hpp"

using namespace gmmn;

namespace {

// Degenerate pair 0 on x = 0, closed into a 4-cycle through pairs 1, 2 and 3.
const std::vector<TerminalPair> kDegenerateCycle{
    {{0, 0}, {0, 6}}, {{-4, 0}, {0, 3}}, {{-6, 1}, {-3, 5}}, {{-4, 4}, {0, 6}}};

const std::vector<TerminalPair> kFourCycle{{{0, 0}, {4, 2}}, {{3, 0}, {5, 6}}, {{1, 4}, {5, 6}}, {{0, 1}, {2, 6}}};

}  // namespace

TEST_SUITE("pseudotree") {
  TEST_CASE("degenerate cycle pair is split between its neighbours") {
    const auto ig = build_intersection_graph(kDegenerateCycle);
    const auto cut = cut_degenerate_cycle(kDegenerateCycle, ig, unique_cycle(ig, connected_components(ig)[0]));
    REQUIRE(cut.has_value());
    REQUIRE(cut->pairs.size() == 5);
    CHECK(cut->pairs[3] == TerminalPair{{0, 0}, {0, 3}});
    CHECK(cut->pairs[4] == TerminalPair{{0, 3}, {0, 6}});
    CHECK(cut->origin == std::vector<int>{1, 2, 3, 0, 0});
    Length before = 0, after = 0;
    for (const auto& p : kDegenerateCycle) before += distance(p);
    for (const auto& p : cut->pairs) after += distance(p);
    CHECK(before == after);
    CHECK(cycle_rank(build_intersection_graph(cut->pairs)) == 0);
  }

  TEST_CASE("cycles without degenerate pairs are left alone") {
    const auto ig = build_intersection_graph(kFourCycle);
    CHECK_FALSE(cut_degenerate_cycle(kFourCycle, ig, unique_cycle(ig, connected_components(ig)[0])).has_value());
  }

  TEST_CASE("trees pass through") {
    const auto plan = build_reduction_plan(test::kThreePath.pairs, build_intersection_graph(test::kThreePath.pairs));
    CHECK(plan.pass_through);
    CHECK(plan.triples.empty());
    CHECK(solve_pseudotree(test::kThreePath).network.total_length() ==
          solve_tree_fast(test::kThreePath).network.total_length());
  }

  TEST_CASE("reduction plan structure") {
    const auto ig = build_intersection_graph(kFourCycle);
    const auto plan = build_reduction_plan(kFourCycle, ig);
    REQUIRE_FALSE(plan.pass_through);
    REQUIRE_FALSE(plan.triples.empty());
    const TerminalPair& v = plan.pairs[plan.v];
    CHECK(v.s.x < v.t.x);
    CHECK(v.s.y < v.t.y);
    for (const auto& tr : plan.triples) {
      const auto derived = derived_instance(plan, tr);
      CHECK(derived.size() == kFourCycle.size() + 3);
      CHECK(cycle_rank(build_intersection_graph(derived)) == 0);
      CHECK(plan.grid.point(tr.q_minus) <= plan.grid.point(tr.q));
    }
    CHECK(solve_pseudotree(test::make_instance({kFourCycle[0], kFourCycle[1], kFourCycle[2], kFourCycle[3]}))
              .network.total_length() ==
          solve_bruteforce(test::make_instance({kFourCycle[0], kFourCycle[1], kFourCycle[2], kFourCycle[3]}))
              .network.total_length());
  }

  TEST_CASE("triples per passage vertex") {
    int start_pairs = 0, interior_hor = 0;
    for (int seed = 0; seed < 80; ++seed) {
      const Instance inst = generate_instance(GenClass::Cycle, 4 + seed % 5, 60, seed);
      auto pairs = inst.pairs;
      auto ig = build_intersection_graph(pairs);
      if (auto cut = cut_degenerate_cycle(pairs, ig, unique_cycle(ig, connected_components(ig)[0]))) {
        pairs = cut->pairs;
        ig = build_intersection_graph(pairs);
      }
      const auto plan = build_reduction_plan(pairs, ig);
      if (plan.pass_through) continue;
      const GridVertex sv = plan.grid.vertex_at(plan.pairs[plan.v].s);
      const GridVertex tv = plan.grid.vertex_at(plan.pairs[plan.v].t);
      std::map<std::pair<GridVertex, PassageAxis>, int> per_vertex;
      for (const auto& tr : plan.triples) ++per_vertex[{tr.q, tr.axis}];
      int at_start = 0;
      for (const auto& tr : plan.triples)
        if (tr.q == sv) {
          ++at_start;
          CHECK(tr.q_minus == sv);
        }
      CHECK(at_start <= 2);
      if (at_start == 2) ++start_pairs;
      for (const auto& [key, count] : per_vertex) {
        CHECK(count <= 2);
        const GridVertex q = key.first;
        if (key.second == PassageAxis::Hor && q.col > sv.col && q.row > sv.row && q.row < tv.row && count == 2)
          ++interior_hor;
      }
    }
    CHECK(start_pairs > 0);
    CHECK(interior_hor > 0);
  }

  TEST_CASE("matches the oracle on small cycles and pseudotrees") {
    for (int seed = 0; seed < 60; ++seed) {
      const GenClass cls = seed % 2 ? GenClass::Cycle : GenClass::Pseudotree;
      const Instance inst = generate_instance(cls, 4 + seed % 2, 7, 400 + seed);
      const Solution s = solve_pseudotree(inst);
      CHECK(validate_network(inst.pairs, s.network));
      CHECK(s.network.total_length() == solve_bruteforce(inst).network.total_length());
    }
  }

  TEST_CASE("degenerate cycle pair end to end") {
    const Instance inst = test::make_instance(
        {kDegenerateCycle[0], kDegenerateCycle[1], kDegenerateCycle[2], kDegenerateCycle[3]});
    CHECK(solve_pseudotree(inst).network.total_length() == solve_bruteforce(inst).network.total_length());
  }

  TEST_CASE("triangles are rejected") {
    const Instance tri = test::make_instance({{{0, 0}, {4, 4}}, {{1, 1}, {5, 5}}, {{2, 2}, {6, 6}}});
    CHECK_THROWS_AS(solve_pseudotree(tri), WrongClass);
  }
}
