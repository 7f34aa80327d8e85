#include "gmmn/network.hpp"

#include <algorithm>
#include <unordered_set>

namespace gmmn {

GridNetwork::GridNetwork(HananGrid grid, std::vector<MPath> paths) : grid_(std::move(grid)), paths_(std::move(paths)) {
  for (const auto& path : paths_) {
    auto e = path_edges(grid_, path);
    edges_.insert(edges_.end(), e.begin(), e.end());
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (EdgeId e : edges_) total_ += grid_.edge_length(e);
}

Length union_length(const HananGrid& grid, const std::vector<MPath>& paths) {
  std::unordered_set<EdgeId> seen;
  Length total = 0;
  for (const auto& path : paths)
    for (EdgeId e : path_edges(grid, path))
      if (seen.insert(e).second) total += grid.edge_length(e);
  return total;
}

std::string check_m_path(const HananGrid& grid, const TerminalPair& pair, const MPath& path) {
  if (path.empty()) return "empty path";
  const TerminalPair p = normalized(pair);
  auto on_grid = [&](GridVertex v) { return v.col >= 0 && v.row >= 0 && v.col < grid.cols() && v.row < grid.rows(); };
  for (const auto& v : path)
    if (!on_grid(v)) return "vertex off grid";
  MPath walk = path;
  if (grid.point(walk.front()) != p.s) std::reverse(walk.begin(), walk.end());
  if (grid.point(walk.front()) != p.s || grid.point(walk.back()) != p.t) return "endpoints do not match the pair";
  const BoundingBox box = bounding_box(p);
  const int vstep = p.t.y >= p.s.y ? 1 : -1;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (!box.contains(grid.point(walk[i]))) return "vertex outside the bounding box";
    if (i == 0) continue;
    const GridVertex a = walk[i - 1], b = walk[i];
    const bool right = b.row == a.row && b.col == a.col + 1;
    const bool vertical = b.col == a.col && b.row == a.row + vstep;
    if (!right && !vertical) return "step is not monotone along a grid edge";
  }
  if (path_length(grid, walk) != distance(p)) return "length differs from the Manhattan distance";
  return {};
}

Validation validate_network(const std::vector<TerminalPair>& pairs, const GridNetwork& network) {
  if (network.paths().size() != pairs.size()) return {false, "path count differs from pair count"};
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    std::string why = check_m_path(network.grid(), pairs[i], network.paths()[i]);
    if (!why.empty()) return {false, "pair " + std::to_string(i) + ": " + why};
  }
  Length from_edges = 0;
  for (EdgeId e : network.edges()) from_edges += network.grid().edge_length(e);
  if (from_edges != network.total_length()) return {false, "edge list length differs from total"};
  if (union_length(network.grid(), network.paths()) != network.total_length())
    return {false, "union of paths differs from total"};
  return {};
}

}  // namespace gmmn
