#include <doctest.h>

#include "gmmn/errors.hpp"
#include "gmmn/generate.hpp"
#include "gmmn/instance_graph.hpp"
#include "gmmn/oracle.hpp"
#include "gmmn/pseudotree.hpp"
#include "gmmn/tree_dp_fast.hpp"
#include "gmmn/twdp.hpp"
#include "support.hpp"

using namespace gmmn;

namespace {

std::vector<MPath> candidates_of(const std::vector<TerminalPair>& raw, int v) {
  const auto pairs = normalized(raw);
  const HananGrid grid = build_hanan_grid(pairs);
  return candidate_mpaths(grid, pairs, build_intersection_graph(pairs), v, 10'000);
}

}  // namespace

TEST_SUITE("twdp") {
  TEST_CASE("candidate sets") {
    // Isolated pair: its two L-paths, even inside a larger grid.
    CHECK(candidates_of({{{0, 0}, {4, 4}}, {{10, 1}, {12, 3}}}, 0).size() == 2);
    CHECK(candidates_of({{{0, 0}, {0, 4}}, {{10, 1}, {12, 3}}}, 0).size() == 1);
    // One neighbour with a 2x2 window: at most C(8, 4) = 70 by the general bound,
    // and at most C(6, 3) = 20 for this nested layout.
    const auto c = candidates_of(test::kNested.pairs, 0);
    CHECK(c.size() >= 2);
    CHECK(c.size() <= 20);
  }

  TEST_CASE("node recursions") {
    const Instance inst = test::make_instance({{{0, 0}, {3, 4}}, {{10, 10}, {12, 11}}});
    const TwdpContext ctx = make_twdp_context(inst, 1000, 1000);
    std::vector<NiceNode> nodes(3);
    nodes[0] = {NiceNode::Kind::Leaf, -1, {}, {}};
    const TwdpTable leaf = twdp_node(ctx, nodes[0], nodes, {});
    REQUIRE(leaf.size() == 1);
    CHECK(leaf.begin()->first.empty());
    CHECK(leaf.begin()->second.value == 0);

    nodes[1] = {NiceNode::Kind::Introduce, 0, {0}, {0}};
    const TwdpTable one = twdp_node(ctx, nodes[1], nodes, {&leaf});
    CHECK(one.size() == ctx.candidates[0].size());
    for (const auto& [key, e] : one) CHECK(e.value == 7);

    nodes[2] = {NiceNode::Kind::Introduce, 1, {0, 1}, {1}};
    const TwdpTable two = twdp_node(ctx, nodes[2], nodes, {&one});
    for (const auto& [key, e] : two) CHECK(e.value == 10);

    // Join of two copies: V1 + V2 minus the bag union.
    const NiceNode join{NiceNode::Kind::Join, -1, {0, 1}, {2, 2}};
    const TwdpTable joined = twdp_node(ctx, join, nodes, {&two, &two});
    for (const auto& [key, e] : joined) CHECK(e.value == 10);

    const NiceNode forget{NiceNode::Kind::Forget, 1, {0}, {2}};
    const TwdpTable fewer = twdp_node(ctx, forget, nodes, {&two});
    CHECK(fewer.size() == one.size());
  }

  TEST_CASE("small instances") {
    CHECK(solve_twdp(test::make_instance({{{0, 0}, {3, 4}}})).network.total_length() == 7);
    const Instance edgeless = test::make_instance({{{0, 0}, {3, 4}}, {{10, 10}, {12, 11}}, {{20, 0}, {25, 1}}});
    CHECK(solve_twdp(edgeless).network.total_length() == test::sum_of_distances(edgeless));
    CHECK(solve_twdp(test::kNested).network.total_length() == 20);
    CHECK(solve_twdp(test::kCrossed).network.total_length() == 24);
    CHECK(solve_twdp(test::kThreePath).network.total_length() == 28);
  }

  TEST_CASE("agrees with the exact class solvers") {
    for (int seed = 0; seed < 40; ++seed) {
      const Instance tree = generate_instance(GenClass::Tree, 3 + seed % 4, 12, 600 + seed);
      CHECK(solve_twdp(tree).network.total_length() == solve_tree_fast(tree).network.total_length());
      const Instance cyc = generate_instance(GenClass::Pseudotree, 4 + seed % 3, 14, 700 + seed);
      CHECK(solve_twdp(cyc).network.total_length() == solve_pseudotree(cyc).network.total_length());
    }
  }

  TEST_CASE("agrees with the oracle on general instances") {
    int checked = 0;
    for (int seed = 0; seed < 80; ++seed) {
      const Instance inst = generate_instance(GenClass::General, 3 + seed % 3, 6, 800 + seed);
      try {
        const Solution s = solve_twdp(inst);
        CHECK(s.network.total_length() == solve_bruteforce(inst).network.total_length());
        ++checked;
      } catch (const CapExceeded&) {
      }
    }
    CHECK(checked > 40);
  }

  TEST_CASE("caps") {
    const Instance k5 = test::make_instance(
        {{{0, 0}, {10, 10}}, {{1, 1}, {11, 11}}, {{2, 2}, {12, 12}}, {{3, 3}, {13, 13}}, {{4, 4}, {14, 14}}});
    CHECK_THROWS_AS(solve_twdp(k5), WidthCapExceeded);
    TwdpOptions tight;
    tight.candidate_cap = 1;
    CHECK_THROWS_AS(solve_twdp(test::kNested, tight), CapExceeded);
  }
}
