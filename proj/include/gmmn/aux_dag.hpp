#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "gmmn/geometry.hpp"

namespace gmmn {

constexpr Length kUnreachable = std::numeric_limits<Length>::min() / 4;
inline bool reachable(Length v) { return v > kUnreachable / 2; }

// Inclusive index box in a local frame.
struct LocalBox {
  int c0 = 0;
  int c1 = 0;
  int r0 = 0;
  int r1 = 0;
  bool degenerate() const { return c0 == c1 || r0 == r1; }
  bool contains(int c, int r) const { return c0 <= c && c <= c1 && r0 <= r && r <= r1; }
  friend bool operator==(const LocalBox&, const LocalBox&) = default;
};

// A pair's subgrid seen so that the pair runs from lower-left to upper-right.
// Flipped pairs get their y axis mirrored; local coordinates always increase.
class LocalFrame {
 public:
  LocalFrame(const HananGrid& grid, Subgrid window, bool flip_y);

  int cols() const { return window_.cols(); }
  int rows() const { return window_.rows(); }
  int vertex_count() const { return cols() * rows(); }
  int id(int col, int row) const { return row * cols() + col; }
  int col_of(int id) const { return id % cols(); }
  int row_of(int id) const { return id / cols(); }

  bool flipped() const { return flip_; }
  const Subgrid& window() const { return window_; }
  const HananGrid& grid() const { return *grid_; }

  bool contains(GridVertex g) const { return window_.contains(g); }
  GridVertex to_global(int col, int row) const {
    return {window_.col_lo + col, flip_ ? window_.row_hi - row : window_.row_lo + row};
  }
  GridVertex to_global(int id) const { return to_global(col_of(id), row_of(id)); }
  std::pair<int, int> to_local(GridVertex g) const {
    return {g.col - window_.col_lo, flip_ ? window_.row_hi - g.row : g.row - window_.row_lo};
  }
  int local_id(GridVertex g) const {
    auto [c, r] = to_local(g);
    return id(c, r);
  }
  LocalBox local_box(const Subgrid& g) const;

  Coord x(int col) const { return grid_->xs()[window_.col_lo + col]; }
  Coord y(int row) const { return flip_ ? -grid_->ys()[window_.row_hi - row] : grid_->ys()[window_.row_lo + row]; }

 private:
  const HananGrid* grid_;
  Subgrid window_;
  bool flip_;
};

// Additive: box edges keep their length as a weight.
// Axis: box edges are replaced by a gadget sharing max(dx, dy) with a crossing path.
// Table: box edges are replaced by explicit jumps with precomputed gains.
enum class WindowKind : std::uint8_t { Additive, Axis, Table };

struct Jump {
  int from = 0;  // local vertex ids
  int to = 0;
  Length gain = 0;
};

struct WindowSpec {
  WindowKind kind = WindowKind::Additive;
  LocalBox box;
  int owner = -1;  // child pair id, or -1 for the crossing parent
  std::vector<Jump> jumps;
};

enum class NodeRole : std::uint8_t { Plain, Corner, Hor, Vert };
enum class ArcKind : std::uint8_t { GridEdge, Entry, Chain, Exit, Jump };

struct ArcRef {
  int from = 0;
  int to = 0;
  Length length = 0;
  ArcKind kind = ArcKind::GridEdge;
  int window = -1;
};

struct BoundarySets {
  std::vector<int> lower_left;
  std::vector<int> upper_right;
  std::vector<int> corner;
  std::vector<int> interior;
};

// Vertex sets of a window (local ids of a cols x rows frame) by boundary position.
BoundarySets boundary_sets(int cols, int rows, const LocalBox& window);

// Longest-path DAG over a local frame. Node ids: [0, V) are plain grid vertices,
// higher ids are gadget chain nodes and corner exits. Row-major vertex order with
// chain nodes before and corner nodes after the plain node is a topological order.
class AuxDag {
 public:
  AuxDag(const LocalFrame& frame, std::vector<WindowSpec> windows);

  const LocalFrame& frame() const { return frame_; }
  const std::vector<WindowSpec>& windows() const { return windows_; }
  int node_count() const { return plain_count() + static_cast<int>(extra_.size()); }
  int plain_count() const { return frame_.vertex_count(); }
  int source() const { return 0; }
  int sink_vertex() const { return plain_count() - 1; }

  int vertex_of(int node) const { return node < plain_count() ? node : extra_[node - plain_count()].vertex; }
  NodeRole role(int node) const { return node < plain_count() ? NodeRole::Plain : extra_[node - plain_count()].role; }
  int window_of(int node) const { return node < plain_count() ? -1 : extra_[node - plain_count()].window; }

  std::vector<Length> forward(std::vector<int>* pred_node = nullptr, std::vector<int>* pred_arc = nullptr) const;
  std::vector<Length> backward() const;

  // Best value over the plain node and corner nodes of a vertex.
  Length best_at_vertex(const std::vector<Length>& values, int vertex) const;
  int best_sink_node(const std::vector<Length>& forward) const;
  std::vector<ArcRef> witness(const std::vector<Length>& forward, const std::vector<int>& pred_node,
                              const std::vector<int>& pred_arc) const;

  // Visits every arc, implicit grid edges included.
  template <class Fn>
  void for_each_arc(Fn&& fn) const;
  std::size_t arc_count() const;

 private:
  struct Extra {
    int vertex;
    NodeRole role;
    int window;
  };
  struct Arc {
    int to;
    Length length;
    int window;
    ArcKind kind;
  };
  enum : std::uint8_t { kFree = 0, kWeighted = 1, kBlocked = 2 };

  Length right_length(int v) const { return right_[v] == kWeighted ? frame_.x(frame_.col_of(v) + 1) - frame_.x(frame_.col_of(v)) : 0; }
  Length up_length(int v) const { return up_[v] == kWeighted ? frame_.y(frame_.row_of(v) + 1) - frame_.y(frame_.row_of(v)) : 0; }
  ArcRef arc_ref(int from, int pred_arc, int to) const;

  LocalFrame frame_;
  std::vector<WindowSpec> windows_;
  std::vector<std::uint8_t> right_, up_;
  std::vector<Extra> extra_;
  std::vector<int> pre_begin_, pre_nodes_, post_begin_, post_nodes_;
  std::vector<int> varc_begin_, narc_begin_;
  std::vector<Arc> varcs_, narcs_;

};

template <class Fn>
void AuxDag::for_each_arc(Fn&& fn) const {
  const int V = plain_count();
  auto vertex_level = [&](int node, int z, int skip_window) {
    if (right_[z] != kBlocked) fn(ArcRef{node, z + 1, right_length(z), ArcKind::GridEdge, -1});
    if (up_[z] != kBlocked) fn(ArcRef{node, z + frame_.cols(), up_length(z), ArcKind::GridEdge, -1});
    for (int a = varc_begin_[z]; a < varc_begin_[z + 1]; ++a) {
      const Arc& arc = varcs_[a];
      if (arc.window == skip_window) continue;
      fn(ArcRef{node, arc.to, arc.length, arc.kind, arc.window});
    }
  };
  for (int z = 0; z < V; ++z) {
    vertex_level(z, z, -1);
    for (int i = post_begin_[z]; i < post_begin_[z + 1]; ++i) {
      const int node = post_nodes_[i];
      vertex_level(node, z, extra_[node - V].window);
    }
  }
  for (int e = 0; e < static_cast<int>(extra_.size()); ++e)
    for (int a = narc_begin_[e]; a < narc_begin_[e + 1]; ++a) {
      const Arc& arc = narcs_[a];
      fn(ArcRef{V + e, arc.to, arc.length, arc.kind, arc.window});
    }
}

// Kahn's algorithm over the explicit arc list.
bool is_acyclic(const AuxDag& dag);

struct LongestPath {
  Length value = kUnreachable;
  std::vector<ArcRef> arcs;
};

LongestPath longest_path(const AuxDag& dag);

}  // namespace gmmn
