#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "gmmn/errors.hpp"
#include "gmmn/generate.hpp"
#include "gmmn/instance_graph.hpp"
#include "support.hpp"

using namespace gmmn;

namespace {

// Every edge in a bag, every vertex's bags connected, every vertex forgotten once.
void check_decomposition(const IntersectionGraph& g, const NiceTreeDecomposition& td) {
  CHECK(check_nice_decomposition(g, td).empty());
  std::vector<int> forgotten(g.size(), 0);
  for (const auto& node : td.nodes)
    if (node.kind == NiceNode::Kind::Forget) ++forgotten[node.vertex];
  for (int v = 0; v < g.size(); ++v) CHECK(forgotten[v] == 1);
}

}  // namespace

TEST_SUITE("instance_graph") {
  TEST_CASE("edges need a shared segment") {
    CHECK(build_intersection_graph({{{0, 0}, {2, 2}}, {{2, 2}, {4, 4}}}).degree(0) == 0);
    CHECK(build_intersection_graph(test::kNested.pairs).degree(0) == 1);
    CHECK(build_intersection_graph({{{0, 0}, {1, 1}}, {{5, 5}, {6, 6}}}).degree(0) == 0);
    // Touching along a side counts.
    CHECK(build_intersection_graph({{{0, 0}, {2, 2}}, {{2, 0}, {4, 2}}}).degree(0) == 1);
    CHECK(build_intersection_graph({{{0, 0}, {2, 2}}, {{2, 2}, {4, 0}}}).degree(0) == 1);
    // Degenerate pairs on a box side.
    CHECK(build_intersection_graph({{{0, 0}, {2, 2}}, {{0, 1}, {0, 5}}}).degree(0) == 1);
    CHECK(build_intersection_graph({{{0, 0}, {2, 2}}, {{0, 2}, {0, 5}}}).degree(0) == 0);
  }

  TEST_CASE("classification") {
    const auto star = build_intersection_graph(
        {{{0, 0}, {10, 10}}, {{1, 1}, {2, 2}}, {{4, 4}, {5, 5}}, {{7, 7}, {8, 8}}});
    CHECK(classify(star).cls == GraphClass::Star);
    CHECK(classify(star).max_degree == 3);

    const auto path = build_intersection_graph(test::kThreePath.pairs);
    CHECK(classify(path).cls == GraphClass::Tree);

    const auto cycle = build_intersection_graph(
        {{{0, 0}, {4, 2}}, {{3, 0}, {5, 6}}, {{1, 4}, {5, 6}}, {{0, 1}, {2, 6}}});
    CHECK(classify(cycle).cls == GraphClass::Cycle);
    CHECK(classify(cycle).triangle_free);

    const auto triangle = build_intersection_graph({{{0, 0}, {4, 4}}, {{1, 1}, {5, 5}}, {{2, 2}, {6, 6}}});
    CHECK(classify(triangle).cls == GraphClass::General);
    CHECK_FALSE(classify(triangle).triangle_free);

    CHECK(classify(build_intersection_graph({{{0, 0}, {1, 1}}, {{5, 5}, {6, 6}}})).cls == GraphClass::Edgeless);
    const auto forest = build_intersection_graph(
        {{{0, 0}, {2, 2}}, {{1, 1}, {3, 3}}, {{10, 10}, {12, 12}}, {{11, 11}, {13, 13}}});
    CHECK(classify(forest).cls == GraphClass::Forest);
    CHECK(classify(forest).components == 2);
  }

  TEST_CASE("classification is stable under reordering") {
    std::mt19937_64 rng(5);
    for (GenClass cls : {GenClass::Star, GenClass::Tree, GenClass::Cycle, GenClass::Pseudotree, GenClass::General}) {
      for (int seed = 0; seed < 10; ++seed) {
        Instance inst = generate_instance(cls, 7, 30, seed);
        const ClassInfo before = classify(build_intersection_graph(inst.pairs));
        std::shuffle(inst.pairs.begin(), inst.pairs.end(), rng);
        const ClassInfo after = classify(build_intersection_graph(inst.pairs));
        CHECK(before.cls == after.cls);
        CHECK(before.max_degree == after.max_degree);
        CHECK(before.components == after.components);
      }
    }
  }

  TEST_CASE("rooting") {
    const auto star = build_intersection_graph(
        {{{1, 1}, {2, 2}}, {{0, 0}, {10, 10}}, {{4, 4}, {5, 5}}, {{7, 7}, {8, 8}}});
    CHECK(root_tree(star).root == 1);

    const auto two = build_intersection_graph(test::kNested.pairs);
    const RootedTree t2 = root_tree(two);
    CHECK((t2.root == 0 || t2.root == 1));
    CHECK(t2.parent[1 - t2.root] == t2.root);

    const RootedTree t3 = root_tree(build_intersection_graph(test::kThreePath.pairs));
    CHECK(t3.root == 1);
    CHECK(t3.children[1].size() == 2);
    CHECK(t3.postorder.back() == 1);
    CHECK(t3.preorder.front() == 1);
  }

  TEST_CASE("root is never a leaf for n >= 3") {
    for (int seed = 0; seed < 30; ++seed) {
      const Instance inst = generate_instance(GenClass::Tree, 3 + seed % 8, 40, seed);
      const auto g = build_intersection_graph(inst.pairs);
      CHECK(g.degree(root_tree(g).root) >= 2);
    }
  }

  TEST_CASE("nice decompositions") {
    const auto tree = build_intersection_graph(test::kThreePath.pairs);
    const auto td_tree = nice_tree_decomposition(tree, 3);
    CHECK(td_tree.width == 1);
    check_decomposition(tree, td_tree);

    const auto cycle = build_intersection_graph(
        {{{0, 0}, {4, 2}}, {{3, 0}, {5, 6}}, {{1, 4}, {5, 6}}, {{0, 1}, {2, 6}}});
    const auto td_cycle = nice_tree_decomposition(cycle, 3);
    CHECK(td_cycle.width == 2);
    check_decomposition(cycle, td_cycle);

    const auto edgeless = build_intersection_graph({{{0, 0}, {1, 1}}, {{3, 3}, {4, 4}}, {{6, 6}, {7, 7}}});
    const auto td_none = nice_tree_decomposition(edgeless, 3);
    CHECK(td_none.width == 0);
    check_decomposition(edgeless, td_none);

    CHECK_THROWS_AS(nice_tree_decomposition(cycle, 1), CapExceeded);
  }

  TEST_CASE("decompositions of generated instances are valid") {
    for (GenClass cls : {GenClass::Tree, GenClass::Cycle, GenClass::Pseudotree, GenClass::General})
      for (int seed = 0; seed < 15; ++seed) {
        const auto g = build_intersection_graph(generate_instance(cls, 8, 30, seed).pairs);
        const auto order = elimination_order(g);
        if (order.width > 4) continue;
        check_decomposition(g, nice_tree_decomposition(g, 4));
      }
  }

  TEST_CASE("unique cycle and components") {
    const auto g = build_intersection_graph(
        {{{0, 0}, {4, 2}}, {{3, 0}, {5, 6}}, {{1, 4}, {5, 6}}, {{0, 1}, {2, 6}}, {{20, 20}, {21, 21}}});
    const auto comps = connected_components(g);
    REQUIRE(comps.size() == 2);
    auto cyc = unique_cycle(g, comps[0]);
    std::sort(cyc.begin(), cyc.end());
    CHECK(cyc == std::vector<int>{0, 1, 2, 3});
    CHECK(unique_cycle(g, comps[1]).empty());
  }
}
