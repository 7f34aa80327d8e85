#include "gmmn/twdp.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "gmmn/errors.hpp"
#include "gmmn/tree_dp.hpp"

namespace gmmn {

namespace {

void add_sorted(std::vector<Coord>& v, Coord c) {
  auto it = std::lower_bound(v.begin(), v.end(), c);
  if (it == v.end() || *it != c) v.insert(it, c);
}

// Sorted, deduplicated union of the bag members' edges except `skip`.
std::vector<EdgeId> bag_union(const TwdpContext& ctx, const std::vector<int>& bag, const BagKey& key, int skip) {
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i < bag.size(); ++i) {
    if (bag[i] == skip) continue;
    const auto& e = ctx.candidates[bag[i]][key[i]].edges;
    out.insert(out.end(), e.begin(), e.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Length edges_length(const HananGrid& grid, const std::vector<EdgeId>& edges) {
  Length total = 0;
  for (EdgeId e : edges) total += grid.edge_length(e);
  return total;
}

Length overlap_length(const HananGrid& grid, const std::vector<EdgeId>& a, const std::vector<EdgeId>& b) {
  Length total = 0;
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) ++i;
    else if (*j < *i) ++j;
    else {
      total += grid.edge_length(*i);
      ++i;
      ++j;
    }
  }
  return total;
}

void check_cap(const TwdpContext& ctx, const TwdpTable& table) {
  if (table.size() > ctx.table_cap)
    throw CandidateCapExceeded("decomposition table exceeds " + std::to_string(ctx.table_cap) + " entries");
}

}  // namespace

std::vector<MPath> candidate_mpaths(const HananGrid& grid, const std::vector<TerminalPair>& pairs,
                                    const IntersectionGraph& ig, int v, std::size_t cap) {
  const TerminalPair& pv = pairs[v];
  std::vector<std::vector<InOutPair>> options;
  for (int u : ig.adjacency[v]) {
    auto io = enumerate_inout_pairs(grid, pv, pairs[u]);
    if (!io.empty()) options.push_back(std::move(io));
  }
  std::size_t combos = 1;
  for (const auto& o : options) {
    if (combos > cap * 64 / o.size() + 1)
      throw CandidateCapExceeded("too many neighbour entry/exit combinations for pair " + std::to_string(v));
    combos *= o.size();
  }

  const BoundingBox box = bounding_box(pv);
  std::set<MPath> seen;
  std::vector<std::size_t> pick(options.size(), 0);
  while (true) {
    std::vector<Coord> xs{box.lo.x, box.hi.x}, ys{box.lo.y, box.hi.y};
    for (std::size_t k = 0; k < options.size(); ++k)
      for (VertexId id : {options[k][pick[k]].p, options[k][pick[k]].q}) {
        const Point p = grid.point(grid.vertex(id));
        add_sorted(xs, p.x);
        add_sorted(ys, p.y);
      }
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    const HananGrid coarse(xs, ys);
    for (const MPath& cp : enumerate_m_paths(coarse, pv, cap)) {
      std::vector<GridVertex> corners;
      corners.reserve(cp.size());
      for (const auto& c : cp) corners.push_back(grid.vertex_at(coarse.point(c)));
      seen.insert(grid_polyline(grid, corners));
      if (seen.size() > cap)
        throw CandidateCapExceeded("pair " + std::to_string(v) + " has more than " + std::to_string(cap) +
                                   " candidate paths");
    }
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == options[k].size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  return {seen.begin(), seen.end()};
}

TwdpContext make_twdp_context(const Instance& instance, std::size_t candidate_cap, std::size_t table_cap) {
  TwdpContext ctx;
  ctx.pairs = normalized(instance.pairs);
  ctx.grid = build_hanan_grid(ctx.pairs);
  ctx.table_cap = table_cap;
  const IntersectionGraph ig = build_intersection_graph(ctx.pairs);
  for (int v = 0; v < ig.size(); ++v) {
    std::vector<TwdpCandidate> list;
    for (auto& path : candidate_mpaths(ctx.grid, ctx.pairs, ig, v, candidate_cap)) {
      TwdpCandidate c;
      c.edges = path_edges(ctx.grid, path);
      std::sort(c.edges.begin(), c.edges.end());
      c.path = std::move(path);
      list.push_back(std::move(c));
    }
    ctx.candidates.push_back(std::move(list));
  }
  return ctx;
}

TwdpTable twdp_node(const TwdpContext& ctx, const NiceNode& node, const std::vector<NiceNode>& nodes,
                    const std::vector<const TwdpTable*>& children) {
  TwdpTable out;
  switch (node.kind) {
    case NiceNode::Kind::Leaf:
      out[BagKey{}] = {0, UINT32_MAX};
      break;
    case NiceNode::Kind::Introduce: {
      const int w = node.vertex;
      const auto pos = static_cast<std::size_t>(std::find(node.bag.begin(), node.bag.end(), w) - node.bag.begin());
      const Length dw = distance(ctx.pairs[w]);
      for (const auto& [key, entry] : *children[0]) {
        BagKey wide = key;
        wide.insert(wide.begin() + static_cast<std::ptrdiff_t>(pos), 0);
        const auto rest = bag_union(ctx, node.bag, wide, w);
        for (std::uint32_t c = 0; c < ctx.candidates[w].size(); ++c) {
          wide[pos] = c;
          const Length shared = overlap_length(ctx.grid, ctx.candidates[w][c].edges, rest);
          out[wide] = {entry.value + dw - shared, UINT32_MAX};
        }
        check_cap(ctx, out);
      }
      break;
    }
    case NiceNode::Kind::Forget: {
      const int u = node.vertex;
      const auto& child_bag = nodes[node.children[0]].bag;
      const auto pos =
          static_cast<std::size_t>(std::find(child_bag.begin(), child_bag.end(), u) - child_bag.begin());
      for (const auto& [key, entry] : *children[0]) {
        BagKey narrow = key;
        narrow.erase(narrow.begin() + static_cast<std::ptrdiff_t>(pos));
        auto [it, fresh] = out.try_emplace(narrow, TwdpEntry{entry.value, key[pos]});
        if (!fresh && entry.value < it->second.value) it->second = {entry.value, key[pos]};
      }
      break;
    }
    case NiceNode::Kind::Join: {
      const TwdpTable& right = *children[1];
      for (const auto& [key, entry] : *children[0]) {
        auto it = right.find(key);
        if (it == right.end()) continue;
        const Length bag_len = edges_length(ctx.grid, bag_union(ctx, node.bag, key, -1));
        out[key] = {entry.value + it->second.value - bag_len, UINT32_MAX};
      }
      break;
    }
  }
  check_cap(ctx, out);
  return out;
}

Solution solve_twdp(const Instance& instance, const NiceTreeDecomposition& td, const TwdpOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  TwdpContext ctx = make_twdp_context(instance, options.candidate_cap, options.table_cap);
  const int n = static_cast<int>(ctx.pairs.size());

  // Post-order over the decomposition.
  std::vector<int> order, stack{td.root};
  while (!stack.empty()) {
    const int t = stack.back();
    stack.pop_back();
    order.push_back(t);
    for (int c : td.nodes[t].children) stack.push_back(c);
  }
  std::reverse(order.begin(), order.end());
  std::vector<TwdpTable> tables(td.nodes.size());
  for (int t : order) {
    std::vector<const TwdpTable*> kids;
    for (int c : td.nodes[t].children) kids.push_back(&tables[c]);
    tables[t] = twdp_node(ctx, td.nodes[t], td.nodes, kids);
  }

  const TwdpTable& root = tables[td.root];
  if (root.empty()) throw std::logic_error("empty decomposition root table");
  auto best = root.begin();
  for (auto it = root.begin(); it != root.end(); ++it)
    if (it->second.value < best->second.value) best = it;

  std::vector<std::int64_t> chosen(n, -1);
  std::vector<std::pair<int, BagKey>> todo{{td.root, best->first}};
  while (!todo.empty()) {
    auto [t, key] = std::move(todo.back());
    todo.pop_back();
    const NiceNode& node = td.nodes[t];
    for (std::size_t i = 0; i < node.bag.size(); ++i) chosen[node.bag[i]] = key[i];
    switch (node.kind) {
      case NiceNode::Kind::Leaf: break;
      case NiceNode::Kind::Introduce: {
        const auto pos = std::find(node.bag.begin(), node.bag.end(), node.vertex) - node.bag.begin();
        key.erase(key.begin() + pos);
        todo.push_back({node.children[0], key});
        break;
      }
      case NiceNode::Kind::Forget: {
        const auto& child_bag = td.nodes[node.children[0]].bag;
        const auto pos = std::find(child_bag.begin(), child_bag.end(), node.vertex) - child_bag.begin();
        const std::uint32_t pick = tables[t].at(key).choice;
        key.insert(key.begin() + pos, pick);
        todo.push_back({node.children[0], key});
        break;
      }
      case NiceNode::Kind::Join:
        todo.push_back({node.children[0], key});
        todo.push_back({node.children[1], key});
        break;
    }
  }

  std::vector<MPath> paths(n);
  for (int v = 0; v < n; ++v) {
    if (chosen[v] < 0) throw std::logic_error("pair missing from the decomposition");
    paths[v] = ctx.candidates[v][chosen[v]].path;
  }
  Solution sol;
  sol.network = GridNetwork(ctx.grid, std::move(paths));
  if (sol.network.total_length() != best->second.value)
    throw std::logic_error("decomposition witness length " + std::to_string(sol.network.total_length()) +
                           " differs from the table value " + std::to_string(best->second.value));
  sol.solver = "twdp";
  sol.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return sol;
}

Solution solve_twdp(const Instance& instance, const TwdpOptions& options) {
  const IntersectionGraph ig = build_intersection_graph(normalized(instance.pairs));
  const NiceTreeDecomposition td = nice_tree_decomposition(ig, options.width_cap);
  return solve_twdp(instance, td, options);
}

}  // namespace gmmn
