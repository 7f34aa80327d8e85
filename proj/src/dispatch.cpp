#include "gmmn/dispatch.hpp"

#include <algorithm>
#include <cstdlib>

#include "gmmn/approx.hpp"
#include "gmmn/errors.hpp"
#include "gmmn/instance_graph.hpp"
#include "gmmn/oracle.hpp"
#include "gmmn/pseudotree.hpp"
#include "gmmn/star.hpp"
#include "gmmn/tree_dp.hpp"

namespace gmmn {

namespace {

constexpr Algorithm kAll[] = {Algorithm::Auto,       Algorithm::Star, Algorithm::Tree,   Algorithm::TreeFast,
                              Algorithm::Pseudotree, Algorithm::Twdp, Algorithm::Oracle, Algorithm::Approx};

Solution run(const Instance& instance, Algorithm algorithm, const SolveOptions& options) {
  switch (algorithm) {
    case Algorithm::Star: return solve_star(instance);
    case Algorithm::Tree: return solve_tree(instance);
    case Algorithm::TreeFast: return solve_tree_fast(instance);
    case Algorithm::Pseudotree: return solve_pseudotree(instance);
    case Algorithm::Twdp: return solve_twdp(instance, options.twdp);
    case Algorithm::Oracle:
      return solve_bruteforce(instance, options.oracle_cap ? options.oracle_cap : default_oracle_cap());
    case Algorithm::Approx: return approx_solve(instance);
    case Algorithm::Auto: break;
  }
  const Algorithm pick = auto_choice(instance);
  if (pick != Algorithm::Twdp) return run(instance, pick, options);
  try {
    return solve_twdp(instance, options.twdp);
  } catch (const CapExceeded& e) {
    Solution sol = approx_solve(instance);
    sol.warnings.push_back(std::string("no exact solver within caps (") + e.what() +
                           "); approximate result within factor " + std::to_string(sol.ratio));
    return sol;
  }
}

}  // namespace

const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Auto: return "auto";
    case Algorithm::Star: return "star";
    case Algorithm::Tree: return "tree";
    case Algorithm::TreeFast: return "tree-fast";
    case Algorithm::Pseudotree: return "pseudotree";
    case Algorithm::Twdp: return "twdp";
    case Algorithm::Oracle: return "oracle";
    case Algorithm::Approx: return "approx";
  }
  return "?";
}

Algorithm parse_algorithm(const std::string& name) {
  for (Algorithm a : kAll)
    if (name == to_string(a)) return a;
  throw ParseError("unknown algorithm '" + name + "'");
}

std::uint64_t default_oracle_cap() {
  if (const char* env = std::getenv(kCapEnvVar)) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultOracleCap;
}

Algorithm auto_choice(const Instance& instance) {
  const IntersectionGraph ig = build_intersection_graph(instance.pairs);
  const auto comps = connected_components(ig);
  bool stars = true, forest = true, pseudo = true;
  for (const auto& comp : comps) {
    stars = stars && is_star_shaped(ig, comp);
    const GraphClass c = classify_component(ig, comp);
    forest = forest && (c == GraphClass::Edgeless || c == GraphClass::Star || c == GraphClass::Tree);
    pseudo = pseudo && c != GraphClass::General;
  }
  if (stars) return Algorithm::Star;
  if (forest) return Algorithm::TreeFast;
  if (pseudo) return Algorithm::Pseudotree;
  return Algorithm::Twdp;
}

Solution solve(const Instance& instance, Algorithm algorithm, const SolveOptions& options) {
  Solution sol = run(instance, algorithm, options);
  if (const Validation v = validate_network(instance.pairs, sol.network); !v)
    throw std::logic_error(sol.solver + " produced an invalid network: " + v.message);
  // Solvers work on normalized pairs; hand paths back running from s to t.
  std::vector<MPath> paths = sol.network.paths();
  bool flipped = false;
  for (std::size_t i = 0; i < paths.size(); ++i)
    if (sol.network.grid().point(paths[i].front()) != instance.pairs[i].s) {
      std::reverse(paths[i].begin(), paths[i].end());
      flipped = true;
    }
  if (flipped) sol.network = GridNetwork(sol.network.grid(), std::move(paths));
  return sol;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return 1;
  if (dynamic_cast<const WrongClass*>(&e)) return 2;
  if (dynamic_cast<const CapExceeded*>(&e)) return 3;
  return 4;
}

}  // namespace gmmn
