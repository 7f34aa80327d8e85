#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gmmn/bench.hpp"
#include "gmmn/dispatch.hpp"
#include "gmmn/errors.hpp"
#include "gmmn/generate.hpp"
#include "gmmn/io.hpp"
#include "gmmn/svg.hpp"

namespace {

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") std::cout << text;
  else gmmn::write_text_file(path, text);
}

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::size_t start = 0;
    while (start <= item.size()) {
      const std::size_t comma = item.find(',', start);
      const std::string part = item.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (!part.empty()) out.push_back(part);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and approximate solvers for the generalized minimum Manhattan network problem"};
  app.require_subcommand(1);

  std::string input, output, algorithm = "auto", cls = "tree", svg, solution_path;
  int n = 5;
  long long coord_range = 0;
  std::uint64_t seed = 1, cap = 0;

  auto* gen = app.add_subcommand("generate", "Write a random instance of the given intersection-graph class");
  gen->add_option("--class", cls, "star, tree, cycle, pseudotree or general")->capture_default_str();
  gen->add_option("--n", n, "Number of pairs")->capture_default_str();
  gen->add_option("--coord-range", coord_range, "Coordinates lie in [0, range]; 0 picks the smallest valid range");
  gen->add_option("--seed", seed)->capture_default_str();
  gen->add_option("--output", output, "Instance file (stdout when omitted)");

  auto* sol = app.add_subcommand("solve", "Solve an instance file");
  sol->add_option("--input", input, "Instance file")->required();
  sol->add_option("--algorithm", algorithm, "auto, star, tree, tree-fast, pseudotree, twdp, oracle or approx")
      ->capture_default_str();
  sol->add_option("--output", output, "Solution file (stdout when omitted)");
  sol->add_option("--svg", svg, "Also write an SVG drawing here");
  sol->add_option("--cap", cap, std::string("Oracle product cap; default from ") + gmmn::kCapEnvVar + " or 1e12");

  auto* ren = app.add_subcommand("render", "Draw an instance, optionally with a solution, as SVG");
  ren->add_option("--input", input, "Instance file")->required();
  ren->add_option("--solution", solution_path, "Solution file to overlay");
  ren->add_option("--svg,--output", svg, "SVG file (stdout when omitted)");

  std::vector<std::string> classes{"star"}, algos{"auto"};
  std::vector<int> sizes{10, 20, 40};
  int seeds = 3, repeats = 1;
  auto* ben = app.add_subcommand("bench", "Time solvers on generated instances");
  ben->add_option("--class", classes, "Classes, comma separated or repeated")->capture_default_str();
  ben->add_option("--n", sizes, "Sizes")->capture_default_str();
  ben->add_option("--algorithm", algos, "Solvers, comma separated or repeated")->capture_default_str();
  ben->add_option("--seed", seed, "First seed")->capture_default_str();
  ben->add_option("--seeds", seeds, "Number of consecutive seeds")->capture_default_str();
  ben->add_option("--repeats", repeats, "Timed runs per solve, fastest kept")->capture_default_str();
  ben->add_option("--coord-range", coord_range, "0 picks the smallest valid range per size");
  ben->add_option("--output", output, "JSON report file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*gen) {
      const gmmn::GenClass c = gmmn::parse_gen_class(cls);
      const gmmn::Coord range = coord_range > 0 ? coord_range : std::max<gmmn::Coord>(8, gmmn::minimum_coord_range(c, n));
      emit(output, gmmn::serialize_instance(gmmn::generate_instance(c, n, range, seed)));
    } else if (*sol) {
      const gmmn::Instance inst = gmmn::read_instance_file(input);
      gmmn::SolveOptions opts;
      opts.oracle_cap = cap;
      const gmmn::Solution s = gmmn::solve(inst, gmmn::parse_algorithm(algorithm), opts);
      for (const auto& w : s.warnings) std::cerr << "warning: " << w << "\n";
      emit(output, gmmn::serialize_solution(s, inst.scale));
      if (!svg.empty()) gmmn::write_text_file(svg, gmmn::render_svg(inst, &s.network));
    } else if (*ren) {
      const gmmn::Instance inst = gmmn::read_instance_file(input);
      std::string doc;
      if (solution_path.empty()) {
        doc = gmmn::render_svg(inst, nullptr);
      } else {
        const gmmn::SolutionRecord rec = gmmn::read_solution_file(solution_path);
        if (const gmmn::Validation v = gmmn::check_solution_record(inst, rec); !v)
          throw gmmn::ParseError("solution does not match the instance: " + v.message);
        const gmmn::GridNetwork net = gmmn::network_from_record(inst, rec);
        doc = gmmn::render_svg(inst, &net);
      }
      emit(svg, doc);
    } else if (*ben) {
      gmmn::BenchConfig cfg;
      for (const auto& c : split_list(classes)) cfg.classes.push_back(gmmn::parse_gen_class(c));
      for (const auto& a : split_list(algos)) cfg.solvers.push_back(gmmn::parse_algorithm(a));
      cfg.sizes = sizes;
      for (int k = 0; k < seeds; ++k) cfg.seeds.push_back(seed + static_cast<std::uint64_t>(k));
      cfg.repeats = repeats;
      cfg.coord_range = coord_range;
      const gmmn::BenchReport report = gmmn::run_bench(cfg, [](const gmmn::BenchMeasurement& m) {
        std::fprintf(stderr, "%s %s n=%d seed=%llu %.3f ms\n", m.solver.c_str(), m.cls.c_str(), m.n,
                     static_cast<unsigned long long>(m.seed), m.wall_ms);
      });
      std::cout << gmmn::report_table(report);
      if (!output.empty()) gmmn::write_text_file(output, gmmn::report_to_json(report));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return gmmn::exit_code_for(e);
  }
  return 0;
}
