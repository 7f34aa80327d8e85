#include <algorithm>
#include <stdexcept>

#include "gmmn/tree_dp.hpp"

namespace gmmn {

namespace {

std::uint64_t cell_key(int p, int q) { return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p)) << 32) | static_cast<std::uint32_t>(q); }

Subgrid intersect(const Subgrid& a, const Subgrid& b) {
  return {std::max(a.col_lo, b.col_lo), std::min(a.col_hi, b.col_hi), std::max(a.row_lo, b.row_lo),
          std::min(a.row_hi, b.row_hi)};
}

// Unit-step walk through axis-aligned corners in local coordinates.
std::vector<int> local_polyline(const LocalFrame& f, std::initializer_list<std::pair<int, int>> corners) {
  std::vector<int> out;
  std::pair<int, int> at{-1, -1};
  for (auto c : corners) {
    if (out.empty()) {
      at = c;
      out.push_back(f.id(c.first, c.second));
      continue;
    }
    while (at != c) {
      if (at.first != c.first) at.first += at.first < c.first ? 1 : -1;
      else at.second += at.second < c.second ? 1 : -1;
      out.push_back(f.id(at.first, at.second));
    }
  }
  return out;
}

void append_tail(std::vector<int>& route, const std::vector<int>& piece) {
  if (piece.empty()) return;
  if (!route.empty() && route.back() != piece.front()) throw std::logic_error("route pieces do not connect");
  route.insert(route.end(), piece.begin() + (route.empty() ? 0 : 1), piece.end());
}

}  // namespace

std::vector<InOutPair> enumerate_inout_pairs(const HananGrid& grid, const TerminalPair& child, const TerminalPair& parent) {
  const Subgrid bv = subgrid(grid, child), bu = subgrid(grid, parent);
  const Subgrid w = intersect(bv, bu);
  if (w.col_lo > w.col_hi || w.row_lo > w.row_hi) return {};
  const GridVertex su = grid.vertex_at(parent.s), tu = grid.vertex_at(parent.t);
  const int dir = tu.row > su.row ? 1 : tu.row < su.row ? -1 : 0;

  std::vector<GridVertex> entries, exits;
  if (bv.contains(su)) {
    entries.push_back(su);
  } else {
    for (int r = w.row_lo; r <= w.row_hi; ++r)
      for (int c = w.col_lo; c <= w.col_hi; ++c) {
        const bool left = c == bv.col_lo && c > bu.col_lo;
        const bool below = dir > 0 && r == bv.row_lo && r > bu.row_lo;
        const bool above = dir < 0 && r == bv.row_hi && r < bu.row_hi;
        if (left || below || above) entries.push_back({c, r});
      }
  }
  if (bv.contains(tu)) {
    exits.push_back(tu);
  } else {
    for (int r = w.row_lo; r <= w.row_hi; ++r)
      for (int c = w.col_lo; c <= w.col_hi; ++c) {
        const bool right = c == bv.col_hi && c < bu.col_hi;
        const bool above = dir > 0 && r == bv.row_hi && r < bu.row_hi;
        const bool below = dir < 0 && r == bv.row_lo && r > bu.row_lo;
        if (right || above || below) exits.push_back({c, r});
      }
  }
  std::vector<InOutPair> out;
  for (const auto& p : entries)
    for (const auto& q : exits) {
      if (p == q || q.col < p.col) continue;
      if (dir >= 0 ? q.row < p.row : q.row > p.row) continue;
      out.push_back({grid.id(p), grid.id(q)});
    }
  return out;
}

TreeEngine::TreeEngine(const HananGrid& grid, const std::vector<TerminalPair>& pairs, const RootedTree& tree,
                       EngineOptions options)
    : grid_(grid), pairs_(pairs), tree_(tree), options_(options) {
  for (int v : tree_.preorder) {
    Node nd;
    nd.box = subgrid(grid_, pairs_[v]);
    nd.flip = orientation(pairs_[v]) == Orientation::Flipped;
    nodes_.emplace(v, std::move(nd));
  }
}

LocalFrame TreeEngine::frame(int v) const {
  const Node& nd = nodes_.at(v);
  return LocalFrame(grid_, nd.box, nd.flip);
}

WindowSpec TreeEngine::child_window(const LocalFrame& f, int child) const {
  const Node& cn = nodes_.at(child);
  WindowSpec spec;
  spec.owner = child;
  spec.box = f.local_box(intersect(f.window(), cn.box));
  if (cn.gadget) {
    const Orientation o = orientation(pairs_[child]);
    const bool opposite = o != Orientation::Degenerate && ((o == Orientation::Flipped) != f.flipped());
    spec.kind = opposite && !spec.box.degenerate() ? WindowKind::Axis : WindowKind::Additive;
    return spec;
  }
  spec.kind = WindowKind::Table;
  spec.jumps.reserve(cn.cells.size());
  for (std::size_t i = 0; i < cn.cells.size(); ++i)
    spec.jumps.push_back({f.local_id(grid_.vertex(cn.cells[i].p)), f.local_id(grid_.vertex(cn.cells[i].q)), cn.gain[i]});
  return spec;
}

AuxDag TreeEngine::build_dag(int v, std::optional<InOutPair> cell) const {
  LocalFrame f = frame(v);
  std::vector<WindowSpec> windows;
  for (int c : tree_.children[v]) windows.push_back(child_window(f, c));
  if (cell) {
    auto [pc, pr] = f.to_local(grid_.vertex(cell->p));
    auto [qc, qr] = f.to_local(grid_.vertex(cell->q));
    WindowSpec spec;
    spec.box = {std::min(pc, qc), std::max(pc, qc), std::min(pr, qr), std::max(pr, qr)};
    spec.kind = spec.box.degenerate() || pr <= qr ? WindowKind::Additive : WindowKind::Axis;
    windows.push_back(std::move(spec));
  }
  return AuxDag(f, std::move(windows));
}

Length TreeEngine::compute_dp_cell(int v, std::optional<InOutPair> cell) const {
  return longest_path(build_dag(v, cell)).value + nodes_.at(v).kappa;
}

void TreeEngine::run() {
  for (int v : tree_.postorder) {
    Node& nd = nodes_.at(v);
    nd.kappa = 0;
    for (int c : tree_.children[v]) nd.kappa += dp_epsilon(c);
    if (v == tree_.root) {
      nd.lp_eps = longest_path(build_dag(v, std::nullopt)).value;
      root_value_ = nd.lp_eps + nd.kappa;
      continue;
    }
    nd.gadget = options_.leaf_gadgets && tree_.children[v].empty();
    if (nd.gadget) continue;
    nd.cells = enumerate_inout_pairs(grid_, pairs_[v], pairs_[tree_.parent[v]]);
    nd.index.clear();
    for (std::size_t i = 0; i < nd.cells.size(); ++i) nd.index[cell_key(nd.cells[i].p, nd.cells[i].q)] = static_cast<std::uint32_t>(i);
    if (options_.fast) fill_fast(v);
    else fill_baseline(v);
  }
}

void TreeEngine::fill_baseline(int v) {
  Node& nd = nodes_.at(v);
  nd.lp_eps = longest_path(build_dag(v, std::nullopt)).value;
  nd.gain.resize(nd.cells.size());
  nd.tags.assign(nd.cells.size(), CaseTag::Segment);
  for (std::size_t i = 0; i < nd.cells.size(); ++i)
    nd.gain[i] = longest_path(build_dag(v, nd.cells[i])).value - nd.lp_eps;
}

void TreeEngine::fill_fast(int v) {
  Node& nd = nodes_.at(v);
  const LocalFrame f = frame(v);
  const AuxDag dag = build_dag(v, std::nullopt);
  const LambdaTables lam = precompute_lambda_kappa(dag, nd.kappa);
  nd.lp_eps = lam.longest;

  const TerminalPair& up = pairs_[tree_.parent[v]];
  const LocalBox window = f.local_box(intersect(nd.box, subgrid(grid_, up)));
  std::unordered_map<std::uint64_t, std::pair<Length, CaseTag>> values;
  CaseTag current = CaseTag::Segment;
  const CellSink sink = [&](int p, int q, Length value) { values[cell_key(p, q)] = {value, current}; };

  if (window.degenerate()) {
    std::vector<std::pair<int, int>> local;
    for (const auto& c : nd.cells) local.push_back({f.local_id(grid_.vertex(c.p)), f.local_id(grid_.vertex(c.q))});
    fill_segment(f, window, lam, local, sink);
  } else {
    const GridVertex su = grid_.vertex_at(up.s), tu = grid_.vertex_at(up.t);
    auto [sc, sr] = f.to_local(su);
    auto [tc, tr] = f.to_local(tu);
    WindowContext ctx;
    ctx.window = window;
    ctx.parent_up = tr > sr;
    ctx.source_inside = f.contains(su);
    ctx.sink_inside = f.contains(tu);
    ctx.extends_left = std::min(sc, tc) < 0;
    ctx.extends_right = std::max(sc, tc) > f.cols() - 1;
    ctx.extends_below = std::min(sr, tr) < 0;
    ctx.extends_above = std::max(sr, tr) > f.rows() - 1;
    for (const CaseDescriptor& d : classify_inout_case(ctx)) {
      current = d.tag;
      fill_case(f, ctx, d, lam, sink);
    }
  }

  nd.gain.resize(nd.cells.size());
  nd.tags.resize(nd.cells.size());
  for (std::size_t i = 0; i < nd.cells.size(); ++i) {
    const int p = f.local_id(grid_.vertex(nd.cells[i].p)), q = f.local_id(grid_.vertex(nd.cells[i].q));
    auto it = values.find(cell_key(p, q));
    if (it == values.end()) throw std::logic_error("case routines left an in-out pair uncovered");
    nd.gain[i] = it->second.first - nd.lp_eps;
    nd.tags[i] = it->second.second;
  }
}

void TreeEngine::reconstruct(std::vector<MPath>& paths) const { reconstruct_node(tree_.root, std::nullopt, paths); }

std::vector<GridVertex> TreeEngine::reconstruct_node(int v, std::optional<InOutPair> cell, std::vector<MPath>& paths) const {
  const AuxDag dag = build_dag(v, cell);
  const LocalFrame& f = dag.frame();
  std::vector<int> pred_node, pred_arc;
  const auto fwd = dag.forward(&pred_node, &pred_arc);
  const auto arcs = dag.witness(fwd, pred_node, pred_arc);
  const auto& windows = dag.windows();

  auto to_local = [&](const std::vector<GridVertex>& g) {
    std::vector<int> out;
    out.reserve(g.size());
    for (const auto& x : g) out.push_back(f.local_id(x));
    return out;
  };
  auto global_id = [&](int local) { return grid_.id(f.to_global(local)); };

  std::vector<char> handled(windows.size(), 0);
  struct ParentBlock {
    int from = -1, to = -1;
    NodeRole copy = NodeRole::Plain;
  } parent_block;

  std::vector<int> route{0};
  int entry_from = -1;
  NodeRole entry_copy = NodeRole::Plain;
  auto expand_block = [&](int w, int from, int to, NodeRole copy) {
    handled[w] = 1;
    const WindowSpec& spec = windows[w];
    if (spec.owner >= 0) {
      append_tail(route, to_local(reconstruct_node(spec.owner, InOutPair{global_id(from), global_id(to)}, paths)));
      return;
    }
    parent_block = {from, to, copy};
    const int fc = f.col_of(from), fr = f.row_of(from), tc = f.col_of(to), tr = f.row_of(to);
    if (copy == NodeRole::Hor) append_tail(route, local_polyline(f, {{fc, fr}, {tc, fr}, {tc, tr}}));
    else append_tail(route, local_polyline(f, {{fc, fr}, {fc, tr}, {tc, tr}}));
  };
  for (const ArcRef& a : arcs) {
    switch (a.kind) {
      case ArcKind::GridEdge: route.push_back(dag.vertex_of(a.to)); break;
      case ArcKind::Entry:
        entry_from = dag.vertex_of(a.from);
        entry_copy = dag.role(a.to);
        break;
      case ArcKind::Chain: break;
      case ArcKind::Exit: expand_block(a.window, entry_from, dag.vertex_of(a.to), entry_copy); break;
      case ArcKind::Jump: expand_block(a.window, dag.vertex_of(a.from), dag.vertex_of(a.to), NodeRole::Plain); break;
    }
  }

  // Run of the route inside a box: first and last index (contiguous by monotonicity).
  auto run_in = [&](const LocalBox& b) {
    int first = -1, last = -1;
    for (int k = 0; k < static_cast<int>(route.size()); ++k)
      if (b.contains(f.col_of(route[k]), f.row_of(route[k]))) {
        if (first < 0) first = k;
        last = k;
      }
    return std::pair{first, last};
  };

  for (std::size_t w = 0; w < windows.size(); ++w) {
    const WindowSpec& spec = windows[w];
    if (spec.owner < 0 || handled[w]) continue;
    if (spec.kind == WindowKind::Additive) {
      auto [first, last] = run_in(spec.box);
      if (first >= 0 && last > first) {
        auto sub = to_local(reconstruct_node(spec.owner, InOutPair{global_id(route[first]), global_id(route[last])}, paths));
        std::vector<int> merged(route.begin(), route.begin() + first);
        merged.insert(merged.end(), sub.begin(), sub.end());
        merged.insert(merged.end(), route.begin() + last + 1, route.end());
        route = std::move(merged);
        continue;
      }
    }
    reconstruct_node(spec.owner, std::nullopt, paths);
  }

  MPath mine;
  mine.reserve(route.size());
  for (int z : route) mine.push_back(f.to_global(z));
  paths[v] = std::move(mine);
  if (!cell) return {};

  const WindowSpec& pw = windows.back();
  auto [pc, pr] = f.to_local(grid_.vertex(cell->p));
  auto [qc, qr] = f.to_local(grid_.vertex(cell->q));
  std::vector<int> parent_route;
  if (pw.kind == WindowKind::Axis) {
    if (parent_block.from >= 0) {
      const int hc = f.col_of(parent_block.from), hr = f.row_of(parent_block.from);
      if (parent_block.copy == NodeRole::Hor) parent_route = local_polyline(f, {{pc, pr}, {pc, hr}, {qc, hr}, {qc, qr}});
      else parent_route = local_polyline(f, {{pc, pr}, {hc, pr}, {hc, qr}, {qc, qr}});
    } else {
      parent_route = local_polyline(f, {{pc, pr}, {qc, pr}, {qc, qr}});
    }
  } else if (pw.box.degenerate()) {
    parent_route = local_polyline(f, {{pc, pr}, {qc, qr}});
  } else {
    auto [first, last] = run_in(pw.box);
    if (first >= 0 && last > first) {
      const int h = route[first], i = route[last];
      parent_route = local_polyline(f, {{pc, pr}, {f.col_of(h), pr}, {f.col_of(h), f.row_of(h)}});
      append_tail(parent_route, std::vector<int>(route.begin() + first, route.begin() + last + 1));
      append_tail(parent_route, local_polyline(f, {{f.col_of(i), f.row_of(i)}, {qc, f.row_of(i)}, {qc, qr}}));
    } else {
      parent_route = local_polyline(f, {{pc, pr}, {qc, pr}, {qc, qr}});
    }
  }
  std::vector<GridVertex> out;
  out.reserve(parent_route.size());
  for (int z : parent_route) out.push_back(f.to_global(z));
  return out;
}

}  // namespace gmmn
