#include <chrono>
#include <stdexcept>

#include "gmmn/errors.hpp"
#include "gmmn/tree_dp.hpp"

namespace gmmn {

Solution solve_with_tree_engine(const Instance& instance, EngineOptions options, const char* solver_name) {
  const auto start = std::chrono::steady_clock::now();
  const auto pairs = normalized(instance.pairs);
  HananGrid grid = build_hanan_grid(pairs);
  const IntersectionGraph ig = build_intersection_graph(pairs);

  std::vector<MPath> paths(pairs.size());
  Length shared = 0, total_distance = 0;
  for (const auto& p : pairs) total_distance += distance(p);
  for (const auto& comp : connected_components(ig)) {
    if (comp.size() == 1) {
      paths[comp[0]] = l_path(grid, grid.vertex_at(pairs[comp[0]].s), grid.vertex_at(pairs[comp[0]].t));
      continue;
    }
    const RootedTree tree = root_tree(ig, comp);
    TreeEngine engine(grid, pairs, tree, options);
    engine.run();
    shared += engine.shared_length();
    engine.reconstruct(paths);
  }
  Solution sol;
  sol.network = GridNetwork(std::move(grid), std::move(paths));
  if (sol.network.total_length() != total_distance - shared)
    throw std::logic_error("reconstructed network length " + std::to_string(sol.network.total_length()) +
                           " differs from the optimum " + std::to_string(total_distance - shared));
  sol.solver = solver_name;
  sol.ratio = 1;
  sol.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return sol;
}

Solution solve_tree(const Instance& instance) { return solve_with_tree_engine(instance, {false, false}, "tree"); }

Solution solve_tree_fast(const Instance& instance) { return solve_with_tree_engine(instance, {true, true}, "tree-fast"); }

}  // namespace gmmn
