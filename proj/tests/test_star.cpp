#include <doctest.h>

#include "gmmn/errors.hpp"
#include "gmmn/generate.hpp"
#include "gmmn/oracle.hpp"
#include "gmmn/star.hpp"
#include "gmmn/tree_dp.hpp"
#include "support.hpp"

using namespace gmmn;

TEST_SUITE("star") {
  TEST_CASE("fixed instances") {
    CHECK(solve_star(test::kNested).network.total_length() == 20);
    CHECK(solve_star(test::kCrossed).network.total_length() == 24);
    CHECK(solve_star(test::make_instance({{{0, 0}, {3, 4}}})).network.total_length() == 7);
  }

  TEST_CASE("witness networks are valid") {
    for (const Instance* inst : {&test::kNested, &test::kCrossed}) {
      const Solution s = solve_star(*inst);
      CHECK(validate_network(inst->pairs, s.network));
      CHECK(s.solver == "star");
      CHECK(s.ratio == 1);
    }
  }

  TEST_CASE("flipped center") {
    // Mirror image of the crossed fixture.
    const Instance inst = test::make_instance({{{0, 10}, {10, 0}}, {{2, 4}, {6, 8}}});
    CHECK(solve_star(inst).network.total_length() == 24);
  }

  TEST_CASE("rejects non-stars") {
    CHECK_THROWS_AS(solve_star(test::make_instance({{{0, 0}, {4, 4}}, {{1, 1}, {5, 5}}, {{2, 2}, {6, 6}}})),
                    WrongClass);
    CHECK_THROWS_AS(solve_star(test::kFourPath), WrongClass);
    // A path of three pairs is a center with two leaves.
    CHECK(solve_star(test::kThreePath).network.total_length() == 28);
  }

  TEST_CASE("agrees with the oracle and tree solver on small stars") {
    for (int seed = 0; seed < 60; ++seed) {
      const Instance inst = generate_instance(GenClass::Star, 1 + seed % 5, 8, seed);
      const Length star = solve_star(inst).network.total_length();
      CHECK(star == solve_bruteforce(inst).network.total_length());
      CHECK(star == solve_tree(inst).network.total_length());
    }
  }
}
