#include "gmmn/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "gmmn/errors.hpp"
#include "gmmn/instance_graph.hpp"

namespace gmmn {

namespace {

struct Candidate {
  MPath path;
  std::vector<int> shared;  // indices into the contested edge list
  Length shared_length = 0;
};

}  // namespace

Solution solve_bruteforce(const Instance& instance, std::uint64_t product_cap) {
  const auto start = std::chrono::steady_clock::now();
  const auto pairs = normalized(instance.pairs);
  HananGrid grid = build_hanan_grid(pairs);
  const int n = static_cast<int>(pairs.size());

  // Edges inside at least two boxes are the only ones two paths can share.
  std::vector<Subgrid> boxes;
  for (const auto& p : pairs) boxes.push_back(subgrid(grid, p));
  auto box_count = [&](GridVertex a, GridVertex b) {
    int k = 0;
    for (const auto& box : boxes) k += box.contains(a) && box.contains(b);
    return k;
  };
  std::map<EdgeId, int> contested;
  std::vector<Length> contested_length;

  std::vector<std::vector<Candidate>> options(n);
  unsigned __int128 product = 1;
  for (int i = 0; i < n; ++i) {
    std::map<std::vector<int>, std::size_t> seen;
    for (auto& path : enumerate_m_paths(grid, pairs[i], product_cap)) {
      Candidate c;
      for (std::size_t k = 1; k < path.size(); ++k) {
        if (box_count(path[k - 1], path[k]) < 2) continue;
        const EdgeId e = grid.edge_between(path[k - 1], path[k]);
        auto [it, fresh] = contested.try_emplace(e, static_cast<int>(contested.size()));
        if (fresh) contested_length.push_back(grid.edge_length(e));
        c.shared.push_back(it->second);
        c.shared_length += contested_length[it->second];
      }
      std::sort(c.shared.begin(), c.shared.end());
      if (seen.try_emplace(c.shared, options[i].size()).second) {
        c.path = std::move(path);
        options[i].push_back(std::move(c));
      }
    }
    product *= options[i].size();
    if (product > product_cap) throw CapExceeded("oracle search space exceeds the cap of " + std::to_string(product_cap));
  }

  // Maximize the saving sum(shared lengths) - |union of shared edges|.
  std::vector<Length> best_tail(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) {
    Length m = 0;
    for (const auto& c : options[i]) m = std::max(m, c.shared_length);
    best_tail[i] = best_tail[i + 1] + m;
  }
  std::vector<int> refcount(contested_length.size(), 0);
  std::vector<int> choice(n, 0), best_choice(n, 0);
  Length best = -1;
  auto dfs = [&](auto&& self, int i, Length saving) -> void {
    if (i == n) {
      if (saving > best) best = saving, best_choice = choice;
      return;
    }
    if (saving + best_tail[i] <= best) return;
    for (std::size_t k = 0; k < options[i].size(); ++k) {
      const Candidate& c = options[i][k];
      Length gain = 0;
      for (int e : c.shared)
        if (refcount[e]++ > 0) gain += contested_length[e];
      choice[i] = static_cast<int>(k);
      self(self, i + 1, saving + gain);
      for (int e : c.shared) --refcount[e];
    }
  };
  dfs(dfs, 0, 0);

  std::vector<MPath> paths(n);
  for (int i = 0; i < n; ++i) paths[i] = options[i][best_choice[i]].path;
  Solution sol;
  sol.network = GridNetwork(std::move(grid), std::move(paths));
  sol.solver = "oracle";
  sol.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return sol;
}

}  // namespace gmmn
