#include "gmmn/approx.hpp"

#include <chrono>
#include <algorithm>
#include <set>
#include <tuple>

namespace gmmn {

Coloring greedy_color(const IntersectionGraph& g) {
  const int n = g.size();
  Coloring out;
  out.color.assign(n, -1);
  std::vector<std::set<int>> seen(n);
  // Ordered by (saturation, degree) descending, ties on the smaller id.
  auto key = [&](int v) { return std::tuple(-static_cast<int>(seen[v].size()), -g.degree(v), v); };
  std::set<std::tuple<int, int, int>> queue;
  for (int v = 0; v < n; ++v) queue.insert(key(v));
  while (!queue.empty()) {
    const int v = std::get<2>(*queue.begin());
    queue.erase(queue.begin());
    int c = 0;
    while (seen[v].count(c)) ++c;
    out.color[v] = c;
    out.k = std::max(out.k, c + 1);
    for (int w : g.adjacency[v]) {
      if (out.color[w] >= 0 || seen[w].count(c)) continue;
      queue.erase(key(w));
      seen[w].insert(c);
      queue.insert(key(w));
    }
  }
  out.classes.assign(out.k, {});
  for (int v = 0; v < n; ++v) out.classes[out.color[v]].push_back(v);
  return out;
}

bool is_proper(const IntersectionGraph& g, const Coloring& c) {
  for (int v = 0; v < g.size(); ++v)
    for (int w : g.adjacency[v])
      if (c.color[v] == c.color[w]) return false;
  return true;
}

Solution approx_solve(const Instance& instance) {
  const auto start = std::chrono::steady_clock::now();
  const auto pairs = normalized(instance.pairs);
  HananGrid grid = build_hanan_grid(pairs);
  const Coloring coloring = greedy_color(build_intersection_graph(pairs));
  std::vector<MPath> paths;
  paths.reserve(pairs.size());
  for (const auto& p : instance.pairs) paths.push_back(l_path(grid, grid.vertex_at(p.s), grid.vertex_at(p.t)));
  Solution sol;
  sol.network = GridNetwork(std::move(grid), std::move(paths));
  sol.solver = "approx";
  sol.ratio = std::max(1, coloring.k);
  sol.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return sol;
}

}  // namespace gmmn
