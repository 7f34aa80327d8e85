#include <doctest.h>

#include <algorithm>
#include <random>

#include "gmmn/errors.hpp"
#include "gmmn/generate.hpp"
#include "gmmn/oracle.hpp"
#include "support.hpp"

using namespace gmmn;

TEST_SUITE("oracle") {
  TEST_CASE("fixed instances") {
    CHECK(solve_bruteforce(test::make_instance({{{0, 0}, {3, 4}}})).network.total_length() == 7);
    CHECK(solve_bruteforce(test::make_instance({{{0, 0}, {3, 4}}, {{10, 10}, {12, 11}}})).network.total_length() == 10);
    CHECK(solve_bruteforce(test::kNested).network.total_length() == 20);
    CHECK(solve_bruteforce(test::kCrossed).network.total_length() == 24);
    CHECK(solve_bruteforce(test::kThreePath).network.total_length() == 28);
  }

  TEST_CASE("never beaten by random path choices") {
    std::mt19937_64 rng(11);
    for (int seed = 0; seed < 30; ++seed) {
      const Instance inst = generate_instance(GenClass::General, 3, 6, seed);
      const Solution best = solve_bruteforce(inst);
      CHECK(validate_network(inst.pairs, best.network));
      const HananGrid grid = build_hanan_grid(inst.pairs);
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<MPath> paths;
        for (const auto& p : inst.pairs) {
          const auto all = enumerate_m_paths(grid, p, 100000);
          paths.push_back(all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)]);
        }
        CHECK(best.network.total_length() <= union_length(grid, paths));
      }
      Length lo = 0;
      for (const auto& p : inst.pairs) lo = std::max(lo, distance(p));
      CHECK(best.network.total_length() >= lo);
      CHECK(best.network.total_length() <= test::sum_of_distances(inst));
    }
  }

  TEST_CASE("cap") {
    const Instance big = generate_instance(GenClass::General, 8, 60, 1);
    CHECK_THROWS_AS(solve_bruteforce(big, 10), CapExceeded);
  }
}
