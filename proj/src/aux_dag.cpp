#include "gmmn/aux_dag.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace gmmn {

LocalFrame::LocalFrame(const HananGrid& grid, Subgrid window, bool flip_y) : grid_(&grid), window_(window), flip_(flip_y) {}

LocalBox LocalFrame::local_box(const Subgrid& g) const {
  auto [c0, ra] = to_local({g.col_lo, g.row_lo});
  auto [c1, rb] = to_local({g.col_hi, g.row_hi});
  return {c0, c1, std::min(ra, rb), std::max(ra, rb)};
}

BoundarySets boundary_sets(int cols, int rows, const LocalBox& w) {
  BoundarySets out;
  (void)rows;
  for (int r = w.r0; r <= w.r1; ++r)
    for (int c = w.c0; c <= w.c1; ++c) {
      const int id = r * cols + c;
      const bool ll = c == w.c0 || r == w.r0;
      const bool ur = c == w.c1 || r == w.r1;
      if (ll) out.lower_left.push_back(id);
      if (ur) out.upper_right.push_back(id);
      if (ll && ur) out.corner.push_back(id);
      if (!ll && !ur) out.interior.push_back(id);
    }
  return out;
}

AuxDag::AuxDag(const LocalFrame& frame, std::vector<WindowSpec> windows) : frame_(frame), windows_(std::move(windows)) {
  const int V = frame_.vertex_count();
  const int cols = frame_.cols(), rows = frame_.rows();
  right_.assign(V, kFree);
  up_.assign(V, kFree);
  for (int r = 0; r < rows; ++r) right_[frame_.id(cols - 1, r)] = kBlocked;
  for (int c = 0; c < cols; ++c) up_[frame_.id(c, rows - 1)] = kBlocked;

  auto mark = [&](const LocalBox& b, std::uint8_t state) {
    for (int r = b.r0; r <= b.r1; ++r)
      for (int c = b.c0; c <= b.c1; ++c) {
        const int z = frame_.id(c, r);
        if (c < b.c1) {
          if (right_[z] != kFree) throw std::logic_error("windows share a grid edge");
          right_[z] = state;
        }
        if (r < b.r1) {
          if (up_[z] != kFree) throw std::logic_error("windows share a grid edge");
          up_[z] = state;
        }
      }
  };

  struct PendingArc {
    int owner;  // vertex for vertex arcs, extra index for node arcs
    Arc arc;
  };
  std::vector<PendingArc> vpending, npending;
  std::vector<std::uint8_t> is_pre;  // per extra node: chain node (before plain) or corner (after)
  auto new_node = [&](int vertex, NodeRole role, int window, bool pre) {
    extra_.push_back({vertex, role, window});
    is_pre.push_back(pre ? 1 : 0);
    return V + static_cast<int>(extra_.size()) - 1;
  };

  for (int w = 0; w < static_cast<int>(windows_.size()); ++w) {
    const WindowSpec& spec = windows_[w];
    const LocalBox& b = spec.box;
    if (b.c0 < 0 || b.r0 < 0 || b.c1 >= cols || b.r1 >= rows || b.c0 > b.c1 || b.r0 > b.r1)
      throw std::logic_error("window outside the frame");
    if (spec.kind == WindowKind::Additive) {
      mark(b, kWeighted);
      continue;
    }
    mark(b, kBlocked);
    if (spec.kind == WindowKind::Table) {
      std::vector<int> sources, targets;
      for (const Jump& j : spec.jumps) {
        sources.push_back(j.from);
        targets.push_back(j.to);
      }
      std::sort(sources.begin(), sources.end());
      std::sort(targets.begin(), targets.end());
      std::unordered_map<int, int> corner;
      for (int t : targets)
        if (!corner.count(t) && std::binary_search(sources.begin(), sources.end(), t))
          corner[t] = new_node(t, NodeRole::Corner, w, false);
      for (const Jump& j : spec.jumps) {
        auto it = corner.find(j.to);
        vpending.push_back({j.from, {it == corner.end() ? j.to : it->second, j.gain, w, ArcKind::Jump}});
      }
      continue;
    }

    // Axis gadget: one chain per copy along the top row (T) and right column (R),
    // meeting at the upper-right vertex.
    if (b.degenerate()) throw std::logic_error("axis gadget needs a two-dimensional window");
    const int ul = frame_.id(b.c0, b.r1), lr = frame_.id(b.c1, b.r0);
    const int ul_node = new_node(ul, NodeRole::Corner, w, false);
    const int lr_node = new_node(lr, NodeRole::Corner, w, false);
    auto exit_target = [&](int z) { return z == ul ? ul_node : z == lr ? lr_node : z; };
    for (NodeRole copy : {NodeRole::Hor, NodeRole::Vert}) {
      const bool hor = copy == NodeRole::Hor;
      std::vector<int> top(b.c1 - b.c0 + 1), right(b.r1 - b.r0 + 1);
      for (int c = b.c0; c <= b.c1; ++c) top[c - b.c0] = new_node(frame_.id(c, b.r1), copy, w, true);
      for (int r = b.r0; r < b.r1; ++r) right[r - b.r0] = new_node(frame_.id(b.c1, r), copy, w, true);
      right[b.r1 - b.r0] = top.back();
      auto T = [&](int c) { return top[c - b.c0]; };
      auto R = [&](int r) { return right[r - b.r0]; };
      auto node_arc = [&](int from, int to, Length len, ArcKind kind) { npending.push_back({from - V, {to, len, w, kind}}); };
      auto entry = [&](int c, int r, int to, Length hlen, Length vlen) {
        vpending.push_back({frame_.id(c, r), {to, hor ? hlen : vlen, w, ArcKind::Entry}});
      };
      for (int c = b.c0; c < b.c1; ++c) node_arc(T(c), T(c + 1), hor ? frame_.x(c + 1) - frame_.x(c) : 0, ArcKind::Chain);
      for (int r = b.r0; r < b.r1; ++r) node_arc(R(r), R(r + 1), hor ? 0 : frame_.y(r + 1) - frame_.y(r), ArcKind::Chain);
      for (int c = b.c0; c <= b.c1; ++c) node_arc(T(c), exit_target(frame_.id(c, b.r1)), 0, ArcKind::Exit);
      for (int r = b.r0; r < b.r1; ++r) node_arc(R(r), exit_target(frame_.id(b.c1, r)), 0, ArcKind::Exit);

      const Length width = frame_.x(b.c1) - frame_.x(b.c0);
      const Length height = frame_.y(b.r1) - frame_.y(b.r0);
      for (int r = b.r0; r < b.r1; ++r) {
        entry(b.c0, r, T(b.c0), 0, frame_.y(b.r1) - frame_.y(r));
        entry(b.c0, r, R(r), width, 0);
      }
      entry(b.c0, b.r1, T(b.c0 + 1), frame_.x(b.c0 + 1) - frame_.x(b.c0), 0);
      entry(b.c0, b.r1, T(b.c1), width, 0);
      for (int c = b.c0 + 1; c < b.c1; ++c) {
        entry(c, b.r0, R(b.r0), frame_.x(b.c1) - frame_.x(c), 0);
        entry(c, b.r0, T(c), 0, height);
      }
      entry(b.c1, b.r0, R(b.r0 + 1), 0, frame_.y(b.r0 + 1) - frame_.y(b.r0));
      entry(b.c1, b.r0, T(b.c1), 0, height);
    }
  }

  // Bucket extra nodes per vertex and arcs per owner.
  const int E = static_cast<int>(extra_.size());
  pre_begin_.assign(V + 1, 0);
  post_begin_.assign(V + 1, 0);
  for (int e = 0; e < E; ++e) ++(is_pre[e] ? pre_begin_ : post_begin_)[extra_[e].vertex + 1];
  for (int z = 0; z < V; ++z) {
    pre_begin_[z + 1] += pre_begin_[z];
    post_begin_[z + 1] += post_begin_[z];
  }
  pre_nodes_.resize(pre_begin_[V]);
  post_nodes_.resize(post_begin_[V]);
  {
    std::vector<int> pre_fill(pre_begin_.begin(), pre_begin_.end() - 1), post_fill(post_begin_.begin(), post_begin_.end() - 1);
    for (int e = 0; e < E; ++e) {
      const int z = extra_[e].vertex;
      if (is_pre[e]) pre_nodes_[pre_fill[z]++] = V + e;
      else post_nodes_[post_fill[z]++] = V + e;
    }
  }
  auto bucket = [](int owners, const std::vector<PendingArc>& pending, std::vector<int>& begin, std::vector<Arc>& arcs) {
    begin.assign(owners + 1, 0);
    for (const auto& p : pending) ++begin[p.owner + 1];
    for (int i = 0; i < owners; ++i) begin[i + 1] += begin[i];
    arcs.resize(pending.size());
    std::vector<int> fill(begin.begin(), begin.end() - 1);
    for (const auto& p : pending) arcs[fill[p.owner]++] = p.arc;
  };
  bucket(V, vpending, varc_begin_, varcs_);
  bucket(E, npending, narc_begin_, narcs_);
}

std::vector<Length> AuxDag::forward(std::vector<int>* pred_node, std::vector<int>* pred_arc) const {
  const int V = plain_count(), N = node_count(), cols = frame_.cols();
  const int nv = static_cast<int>(varcs_.size());
  std::vector<Length> val(N, kUnreachable);
  if (pred_node) pred_node->assign(N, -1);
  if (pred_arc) pred_arc->assign(N, -1);
  val[0] = 0;
  auto relax = [&](int from, int to, Length len, int arc) {
    const Length cand = val[from] + len;
    if (cand > val[to]) {
      val[to] = cand;
      if (pred_node) (*pred_node)[to] = from;
      if (pred_arc) (*pred_arc)[to] = arc;
    }
  };
  auto vertex_level = [&](int node, int z, int skip_window) {
    if (!reachable(val[node])) return;
    if (right_[z] != kBlocked) relax(node, z + 1, right_length(z), -2);
    if (up_[z] != kBlocked) relax(node, z + cols, up_length(z), -3);
    for (int a = varc_begin_[z]; a < varc_begin_[z + 1]; ++a) {
      const Arc& arc = varcs_[a];
      if (arc.window != skip_window) relax(node, arc.to, arc.length, a);
    }
  };
  for (int z = 0; z < V; ++z) {
    for (int i = pre_begin_[z]; i < pre_begin_[z + 1]; ++i) {
      const int node = pre_nodes_[i];
      if (!reachable(val[node])) continue;
      const int e = node - V;
      for (int a = narc_begin_[e]; a < narc_begin_[e + 1]; ++a) relax(node, narcs_[a].to, narcs_[a].length, nv + a);
    }
    vertex_level(z, z, -1);
    for (int i = post_begin_[z]; i < post_begin_[z + 1]; ++i) {
      const int node = post_nodes_[i];
      vertex_level(node, z, extra_[node - V].window);
    }
  }
  return val;
}

std::vector<Length> AuxDag::backward() const {
  const int V = plain_count(), N = node_count(), cols = frame_.cols();
  const int sink = sink_vertex();
  std::vector<Length> val(N, kUnreachable);
  auto best_out = [&](Length best, int to, Length len) {
    if (reachable(val[to])) best = std::max(best, val[to] + len);
    return best;
  };
  auto vertex_level = [&](int node, int z, int skip_window) {
    Length best = z == sink ? 0 : kUnreachable;
    if (right_[z] != kBlocked) best = best_out(best, z + 1, right_length(z));
    if (up_[z] != kBlocked) best = best_out(best, z + cols, up_length(z));
    for (int a = varc_begin_[z]; a < varc_begin_[z + 1]; ++a) {
      const Arc& arc = varcs_[a];
      if (arc.window != skip_window) best = best_out(best, arc.to, arc.length);
    }
    val[node] = best;
  };
  for (int z = V - 1; z >= 0; --z) {
    for (int i = post_begin_[z]; i < post_begin_[z + 1]; ++i) {
      const int node = post_nodes_[i];
      vertex_level(node, z, extra_[node - V].window);
    }
    vertex_level(z, z, -1);
    for (int i = pre_begin_[z]; i < pre_begin_[z + 1]; ++i) {
      const int node = pre_nodes_[i];
      const int e = node - V;
      Length best = kUnreachable;
      for (int a = narc_begin_[e]; a < narc_begin_[e + 1]; ++a) best = best_out(best, narcs_[a].to, narcs_[a].length);
      val[node] = best;
    }
  }
  return val;
}

Length AuxDag::best_at_vertex(const std::vector<Length>& values, int vertex) const {
  Length best = values[vertex];
  for (int i = post_begin_[vertex]; i < post_begin_[vertex + 1]; ++i) best = std::max(best, values[post_nodes_[i]]);
  return best;
}

int AuxDag::best_sink_node(const std::vector<Length>& forward) const {
  const int z = sink_vertex();
  int best = z;
  for (int i = post_begin_[z]; i < post_begin_[z + 1]; ++i)
    if (forward[post_nodes_[i]] > forward[best]) best = post_nodes_[i];
  return best;
}

ArcRef AuxDag::arc_ref(int from, int pred_arc, int to) const {
  const int nv = static_cast<int>(varcs_.size());
  if (pred_arc == -2) return {from, to, right_length(vertex_of(from)), ArcKind::GridEdge, -1};
  if (pred_arc == -3) return {from, to, up_length(vertex_of(from)), ArcKind::GridEdge, -1};
  const Arc& arc = pred_arc < nv ? varcs_[pred_arc] : narcs_[pred_arc - nv];
  return {from, to, arc.length, arc.kind, arc.window};
}

std::vector<ArcRef> AuxDag::witness(const std::vector<Length>& forward, const std::vector<int>& pred_node,
                                    const std::vector<int>& pred_arc) const {
  std::vector<ArcRef> out;
  int at = best_sink_node(forward);
  if (!reachable(forward[at])) throw std::logic_error("sink unreachable");
  while (at != source()) {
    const int from = pred_node[at];
    if (from < 0) throw std::logic_error("broken predecessor chain");
    out.push_back(arc_ref(from, pred_arc[at], at));
    at = from;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::size_t AuxDag::arc_count() const {
  std::size_t count = 0;
  for_each_arc([&](const ArcRef&) { ++count; });
  return count;
}

bool is_acyclic(const AuxDag& dag) {
  const int N = dag.node_count();
  std::vector<int> indeg(N, 0);
  std::vector<std::vector<int>> out(N);
  dag.for_each_arc([&](const ArcRef& a) {
    ++indeg[a.to];
    out[a.from].push_back(a.to);
  });
  std::vector<int> queue;
  for (int v = 0; v < N; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (int w : out[queue[i]])
      if (--indeg[w] == 0) queue.push_back(w);
  return static_cast<int>(queue.size()) == N;
}

LongestPath longest_path(const AuxDag& dag) {
  std::vector<int> pn, pa;
  auto fwd = dag.forward(&pn, &pa);
  LongestPath out;
  out.value = fwd[dag.best_sink_node(fwd)];
  if (reachable(out.value)) out.arcs = dag.witness(fwd, pn, pa);
  return out;
}

}  // namespace gmmn
