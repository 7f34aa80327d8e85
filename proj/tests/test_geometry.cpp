#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "gmmn/geometry.hpp"
#include "gmmn/network.hpp"
#include "support.hpp"

using namespace gmmn;

namespace {

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("manhattan distance") {
    CHECK(manhattan_distance({0, 0}, {3, 4}) == 7);
    CHECK(manhattan_distance({2, 5}, {2, 5}) == 0);
    CHECK(manhattan_distance({-3, 1}, {1, -2}) == 7);
  }

  TEST_CASE("orientation and normalization") {
    CHECK(orientation({{0, 0}, {2, 2}}) == Orientation::Regular);
    CHECK(orientation({{2, 2}, {0, 0}}) == Orientation::Regular);
    CHECK(orientation({{0, 2}, {2, 0}}) == Orientation::Flipped);
    CHECK(orientation({{0, 0}, {0, 5}}) == Orientation::Degenerate);
    const TerminalPair n = normalized(TerminalPair{{4, 1}, {0, 3}});
    CHECK(n.s == Point{0, 3});
    CHECK(n.t == Point{4, 1});
    CHECK(normalized(TerminalPair{{0, 5}, {0, 1}}).s == Point{0, 1});
  }

  TEST_CASE("hanan grid sizes") {
    const HananGrid g = build_hanan_grid({{{0, 0}, {2, 2}}, {{1, 1}, {3, 3}}});
    CHECK(g.cols() == 4);
    CHECK(g.rows() == 4);
    CHECK(g.vertex_count() == 16);
    CHECK(g.edge_count() == 24);

    const HananGrid single = build_hanan_grid({{{0, 0}, {5, 7}}});
    CHECK(single.vertex_count() == 4);

    const HananGrid shared = build_hanan_grid({{{0, 0}, {4, 4}}, {{0, 4}, {4, 0}}});
    CHECK(shared.cols() == 2);
    CHECK(shared.rows() == 2);
  }

  TEST_CASE("hanan grid is order insensitive and idempotent") {
    std::vector<TerminalPair> pairs{{{5, 1}, {2, 9}}, {{0, 3}, {7, 3}}, {{4, 4}, {1, 0}}};
    const HananGrid a = build_hanan_grid(pairs);
    std::reverse(pairs.begin(), pairs.end());
    const HananGrid b = build_hanan_grid(pairs);
    CHECK(a.xs() == b.xs());
    CHECK(a.ys() == b.ys());
    pairs.insert(pairs.end(), pairs.begin(), pairs.end());
    CHECK(build_hanan_grid(pairs).xs() == a.xs());
  }

  TEST_CASE("edge ids round trip") {
    const HananGrid g({0, 2, 5}, {1, 4});
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e) {
      const auto [a, b] = g.edge_endpoints(e);
      CHECK(g.edge_between(a, b) == e);
      CHECK(g.edge_between(b, a) == e);
      CHECK(g.edge_length(e) == manhattan_distance(g.point(a), g.point(b)));
    }
  }

  TEST_CASE("subgrid windows") {
    const HananGrid g = build_hanan_grid(test::kNested.pairs);
    CHECK(subgrid(g, test::kNested.pairs[0]) == Subgrid{0, 3, 0, 3});
    const Subgrid inner = subgrid(g, test::kNested.pairs[1]);
    CHECK(inner.cols() == 2);
    CHECK(inner.rows() == 2);
    CHECK(g.point({inner.col_lo, inner.row_lo}) == Point{2, 2});
    CHECK(g.point({inner.col_hi, inner.row_hi}) == Point{6, 6});

    const HananGrid h = build_hanan_grid({{{0, 0}, {0, 6}}, {{-2, 1}, {3, 5}}});
    const Subgrid thin = subgrid(h, TerminalPair{{0, 0}, {0, 6}});
    CHECK(thin.cols() == 1);
    CHECK(thin.rows() == 4);
    CHECK(thin.degenerate());
  }

  TEST_CASE("staircase enumeration") {
    const HananGrid g({0, 1, 2}, {0, 1, 2});
    const auto regular = enumerate_m_paths(g, {{0, 0}, {2, 2}}, 100);
    CHECK(regular.size() == 6);
    const auto flipped = enumerate_m_paths(g, {{0, 2}, {2, 0}}, 100);
    CHECK(flipped.size() == 6);
    for (const auto& p : flipped) {
      CHECK(check_m_path(g, {{0, 2}, {2, 0}}, p).empty());
      for (std::size_t i = 1; i < p.size(); ++i) CHECK(g.point(p[i]).y <= g.point(p[i - 1]).y);
    }
    const HananGrid line({0}, {0, 5});
    CHECK(enumerate_m_paths(line, {{0, 0}, {0, 5}}, 100).size() == 1);
  }

  TEST_CASE("staircase counts match the binomial formula up to 6x6") {
    for (int a = 1; a <= 6; ++a)
      for (int b = 1; b <= 6; ++b) {
        std::vector<Coord> xs(a), ys(b);
        for (int i = 0; i < a; ++i) xs[i] = 3 * i;
        for (int j = 0; j < b; ++j) ys[j] = 2 * j;
        const HananGrid g(xs, ys);
        const TerminalPair pair{{0, 0}, {xs.back(), ys.back()}};
        const auto paths = enumerate_m_paths(g, pair, 1'000'000);
        const std::uint64_t expect = binomial(a - 1 + b - 1, a - 1);
        CHECK(paths.size() == expect);
        CHECK(m_path_count(g, pair) == expect);
        CHECK(std::set<MPath>(paths.begin(), paths.end()).size() == paths.size());
        for (const auto& p : paths) CHECK(check_m_path(g, pair, p).empty());
      }
  }

  TEST_CASE("enumeration respects its cap") {
    const HananGrid g({0, 1, 2, 3}, {0, 1, 2, 3});
    CHECK_THROWS(enumerate_m_paths(g, {{0, 0}, {3, 3}}, 19));
    CHECK(enumerate_m_paths(g, {{0, 0}, {3, 3}}, 20).size() == 20);
  }

  TEST_CASE("shared length gamma") {
    CHECK(gamma(Orientation::Regular, {0, 0}, {2, 3}) == 5);
    CHECK(gamma(Orientation::Flipped, {0, 0}, {2, 3}) == 3);
    CHECK(gamma(Orientation::Regular, {1, 1}, {1, 1}) == 0);
    CHECK(gamma(Orientation::Flipped, {1, 1}, {1, 1}) == 0);
  }

  TEST_CASE("m-path validator rejects bad paths") {
    const HananGrid g({0, 1, 2}, {0, 1, 2});
    const TerminalPair pair{{0, 0}, {2, 2}};
    CHECK_FALSE(check_m_path(g, pair, {{0, 0}, {1, 0}, {1, 1}, {2, 1}}).empty());         // stops short
    CHECK_FALSE(check_m_path(g, pair, {{0, 0}, {1, 0}, {0, 0}, {0, 1}}).empty());         // backtracks
    CHECK_FALSE(check_m_path(g, pair, {{0, 0}, {2, 0}, {2, 2}}).empty());                 // skips a vertex
    CHECK(check_m_path(g, pair, l_path(g, {0, 0}, {2, 2})).empty());
    CHECK(path_length(g, l_path(g, {0, 0}, {2, 2})) == 4);
  }

  TEST_CASE("union length counts shared edges once") {
    const HananGrid g({0, 1, 2}, {0, 1, 2});
    const MPath a = l_path(g, {0, 0}, {2, 2});
    const MPath b = l_path(g, {0, 0}, {2, 1});
    CHECK(union_length(g, {a, b}) == 4);
    const GridNetwork net(g, {a, b});
    CHECK(net.total_length() == 4);
    CHECK(validate_network({{{0, 0}, {2, 2}}, {{0, 0}, {2, 1}}}, net));
    CHECK_FALSE(validate_network({{{0, 0}, {2, 2}}, {{0, 2}, {2, 1}}}, net));
  }
}
