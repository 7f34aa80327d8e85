#include <doctest.h>

#include <map>
#include <set>

#include "gmmn/errors.hpp"
#include "gmmn/generate.hpp"
#include "gmmn/oracle.hpp"
#include "gmmn/star.hpp"
#include "gmmn/tree_dp.hpp"
#include "gmmn/tree_dp_fast.hpp"
#include "support.hpp"

using namespace gmmn;

TEST_SUITE("tree_dp_fast") {
  TEST_CASE("fixed instances") {
    CHECK(solve_tree_fast(test::kThreePath).network.total_length() == 28);
    CHECK(solve_tree_fast(test::kNested).network.total_length() == solve_star(test::kNested).network.total_length());
    CHECK(solve_tree_fast(test::kCrossed).network.total_length() == 24);
    CHECK(solve_tree_fast(test::make_instance({{{0, 0}, {3, 4}}})).network.total_length() == 7);
  }

  TEST_CASE("case descriptors") {
    WindowContext ctx;
    ctx.window = {1, 3, 1, 3};
    ctx.parent_up = true;
    ctx.source_inside = true;
    ctx.extends_right = true;
    auto d = classify_inout_case(ctx);
    REQUIRE(d.size() == 1);
    CHECK(d[0].tag == CaseTag::Ra);

    ctx = {};
    ctx.window = {0, 2, 0, 2};
    ctx.extends_left = ctx.extends_below = ctx.extends_right = ctx.extends_above = true;
    std::multiset<CaseTag> tags;
    for (const auto& c : classify_inout_case(ctx)) tags.insert(c.tag);
    CHECK(tags.count(CaseTag::Rb) == 2);
    CHECK(tags.count(CaseTag::Rc) == 2);

    ctx.parent_up = false;
    tags.clear();
    for (const auto& c : classify_inout_case(ctx)) tags.insert(c.tag);
    CHECK(tags.count(CaseTag::Fb) == 2);
    CHECK(tags.count(CaseTag::Fc) == 2);

    ctx = {};
    ctx.window = {0, 2, 0, 2};
    ctx.extends_left = ctx.extends_right = true;
    d = classify_inout_case(ctx);
    REQUIRE(d.size() == 1);
    CHECK(d[0].tag == CaseTag::Rc);

    ctx.window = {0, 2, 1, 1};
    CHECK(classify_inout_case(ctx).empty());
  }

  TEST_CASE("leaf lambda tables") {
    const HananGrid g({0, 4}, {0, 4});
    const LocalFrame f(g, {0, 1, 0, 1}, false);
    const LambdaTables lam = precompute_lambda_kappa(AuxDag(f, {}), 0);
    CHECK(lam.longest == 0);
    CHECK(lam.kappa == 0);
    for (Length v : lam.into) CHECK(v == 0);
  }

  TEST_CASE("one regular child fully inside") {
    const auto pairs = normalized(test::kNested.pairs);
    const HananGrid grid = build_hanan_grid(pairs);
    const auto ig = build_intersection_graph(pairs);
    const RootedTree tree = root_tree(ig);
    TreeEngine fast(grid, pairs, tree, {true, false});
    fast.run();
    // Either root shares the whole inner path.
    CHECK(fast.dp_epsilon(tree.root) == 8);
    const LambdaTables lam = precompute_lambda_kappa(fast.build_dag(tree.root, std::nullopt), 0);
    CHECK(lam.longest == 8);
    CHECK(fast.shared_length() == 8);
  }

  TEST_CASE("fast cells equal the slow recomputation") {
    std::map<CaseTag, int> seen;
    for (int seed = 0; seed < 150; ++seed) {
      const Instance inst = generate_instance(GenClass::Tree, 2 + seed % 4, 8, 900 + seed);
      const auto pairs = normalized(inst.pairs);
      const HananGrid grid = build_hanan_grid(pairs);
      const auto ig = build_intersection_graph(pairs);
      for (const auto& comp : connected_components(ig)) {
        if (comp.size() < 2) continue;
        const RootedTree tree = root_tree(ig, comp);
        TreeEngine fast(grid, pairs, tree, {true, false});
        fast.run();
        for (int v : comp) {
          CHECK(fast.compute_dp_cell(v, std::nullopt) == fast.dp_epsilon(v));
          if (!fast.has_table(v)) continue;
          for (std::size_t c = 0; c < fast.cells(v).size(); ++c) {
            ++seen[fast.cell_tag(v, c)];
            CHECK(fast.dp_value(v, c) == fast.compute_dp_cell(v, fast.cells(v)[c]));
          }
        }
      }
    }
    for (CaseTag t : {CaseTag::Ra, CaseTag::Rb, CaseTag::Rc, CaseTag::Fa, CaseTag::Fb, CaseTag::Fc})
      CHECK(seen[t] > 0);
  }

  TEST_CASE("same totals as the baseline tree solver") {
    for (int seed = 0; seed < 40; ++seed) {
      const int n = 2 + seed;
      const Instance inst = generate_instance(GenClass::Tree, n, std::max<Coord>(30, minimum_coord_range(GenClass::Tree, n)), seed);
      const Solution a = solve_tree(inst), b = solve_tree_fast(inst);
      CHECK(a.network.total_length() == b.network.total_length());
      CHECK(validate_network(inst.pairs, b.network));
    }
  }

  TEST_CASE("rejects cycles") {
    const Instance cyc = test::make_instance({{{0, 0}, {4, 2}}, {{3, 0}, {5, 6}}, {{1, 4}, {5, 6}}, {{0, 1}, {2, 6}}});
    CHECK_THROWS_AS(solve_tree_fast(cyc), WrongClass);
  }
}
