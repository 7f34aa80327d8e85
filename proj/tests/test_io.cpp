#include <doctest.h>

#include "gmmn/errors.hpp"
#include "gmmn/generate.hpp"
#include "gmmn/io.hpp"
#include "gmmn/star.hpp"
#include "gmmn/tree_dp_fast.hpp"
#include "support.hpp"

using namespace gmmn;

TEST_SUITE("io") {
  TEST_CASE("instance round trip") {
    for (GenClass cls : {GenClass::Star, GenClass::Tree, GenClass::Cycle, GenClass::Pseudotree, GenClass::General}) {
      for (int seed = 0; seed < 5; ++seed) {
        const Instance inst = generate_instance(cls, 6, 40, seed);
        const Instance back = parse_instance_text(serialize_instance(inst));
        CHECK(back == inst);
      }
    }
  }

  TEST_CASE("decimals are scaled exactly") {
    const std::string text =
        "{\"schema\":\"gmmn-instance/1\",\"name\":\"d\",\"scale\":0}\n"
        "{\"s\":[0.5,1],\"t\":[2.25,-3]}\n"
        "{\"s\":[1e1,0],\"t\":[0.1,0.3]}\n";
    const Instance inst = parse_instance_text(text);
    CHECK(inst.scale == 2);
    CHECK(inst.pairs[0].s == Point{50, 100});
    CHECK(inst.pairs[0].t == Point{225, -300});
    CHECK(inst.pairs[1].s == Point{1000, 0});
    CHECK(inst.pairs[1].t == Point{10, 30});
    const Instance back = parse_instance_text(serialize_instance(inst));
    CHECK(back.pairs == inst.pairs);
    CHECK(back.scale == 2);
    CHECK(format_decimal(225, 2) == "2.25");
    CHECK(format_decimal(-300, 2) == "-3");
    CHECK(format_decimal(-5, 3) == "-0.005");
  }

  TEST_CASE("bad input") {
    CHECK_THROWS_AS(parse_instance_text(""), ParseError);
    CHECK_THROWS_AS(parse_instance_text("{\"schema\":\"other\"}\n{\"s\":[0,0],\"t\":[1,1]}\n"), ParseError);
    CHECK_THROWS_AS(parse_instance_text("{\"schema\":\"gmmn-instance/1\"}\n"), ParseError);
    CHECK_THROWS_AS(parse_instance_text("{\"schema\":\"gmmn-instance/1\"}\n{\"s\":[0,0]}\n"), ParseError);
    CHECK_THROWS_AS(parse_instance_text("{\"schema\":\"gmmn-instance/1\"}\n{\"s\":[0,\"a\"],\"t\":[1,1]}\n"), ParseError);
    CHECK_THROWS_AS(parse_instance_text("{\"schema\":\"gmmn-instance/1\"}\n{\"s\":[0,0],\"t\":[1,1]\n"), ParseError);
    CHECK_THROWS_AS(parse_instance_text("{\"schema\":\"gmmn-instance/1\",\"pairs\":2}\n{\"s\":[0,0],\"t\":[1,1]}\n"),
                    ParseError);
    CHECK_THROWS_AS(
        parse_instance_text("{\"schema\":\"gmmn-instance/1\"}\n{\"s\":[0,0],\"t\":[0.0000000000001,1]}\n"),
        OverflowRisk);
    CHECK_THROWS_AS(
        parse_instance_text("{\"schema\":\"gmmn-instance/1\"}\n{\"s\":[0,0],\"t\":[9223372036854775807,1]}\n"),
        OverflowRisk);
    CHECK_THROWS_AS(read_instance_file("/nonexistent/instance.jsonl"), ParseError);
  }

  TEST_CASE("solution round trip and checks") {
    const Instance inst = generate_instance(GenClass::Tree, 8, 30, 3);
    const Solution s = solve_tree_fast(inst);
    const std::string text = serialize_solution(s, inst.scale);
    const SolutionRecord rec = parse_solution_text(text);
    CHECK(rec.solver == "tree-fast");
    CHECK(rec.total_length == s.network.total_length());
    CHECK(rec.paths.size() == inst.pairs.size());
    CHECK(check_solution_record(inst, rec));
    CHECK(network_from_record(inst, rec).total_length() == s.network.total_length());
    CHECK(serialize_solution(s, inst.scale) == text);

    SolutionRecord wrong = rec;
    wrong.total_length += 1;
    CHECK_FALSE(check_solution_record(inst, wrong));
    SolutionRecord no_edge = rec;
    no_edge.edges.pop_back();
    CHECK_FALSE(check_solution_record(inst, no_edge));
  }

  TEST_CASE("solution lengths in user units") {
    const Instance inst = parse_instance_text(
        "{\"schema\":\"gmmn-instance/1\"}\n{\"s\":[0,0],\"t\":[1.5,2]}\n{\"s\":[0.5,0.5],\"t\":[1,1]}\n");
    const Solution s = solve_star(inst);
    CHECK(s.network.total_length() == 35);
    const SolutionRecord rec = parse_solution_text(serialize_solution(s, inst.scale));
    CHECK(rec.scale == 1);
    CHECK(rec.total_length == 35);
    CHECK(check_solution_record(inst, rec));
  }
}
