#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace gmmn {

using Coord = std::int64_t;
using Length = std::int64_t;
using VertexId = std::int32_t;
using EdgeId = std::int64_t;

struct Point {
  Coord x = 0;
  Coord y = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
};

enum class Orientation { Regular, Flipped, Degenerate };

const char* to_string(Orientation o);

struct TerminalPair {
  Point s;
  Point t;
  friend bool operator==(const TerminalPair&, const TerminalPair&) = default;
};

Length dx(Point p, Point q);
Length dy(Point p, Point q);
Length manhattan_distance(Point p, Point q);
inline Length distance(const TerminalPair& pair) { return manhattan_distance(pair.s, pair.t); }

// Copy with s.x <= t.x, and s.y <= t.y for vertical pairs.
TerminalPair normalized(const TerminalPair& pair);
std::vector<TerminalPair> normalized(const std::vector<TerminalPair>& pairs);
Orientation orientation(const TerminalPair& pair);

struct BoundingBox {
  Point lo;
  Point hi;
  bool contains(Point p) const { return lo.x <= p.x && p.x <= hi.x && lo.y <= p.y && p.y <= hi.y; }
  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

BoundingBox bounding_box(const TerminalPair& pair);

// Sharable length between a leaf of the given orientation and a crossing from p to q.
Length gamma(Orientation leaf, Point p, Point q);

struct GridVertex {
  int col = 0;
  int row = 0;
  friend auto operator<=>(const GridVertex&, const GridVertex&) = default;
};

// Contiguous index window [col_lo..col_hi] x [row_lo..row_hi] of a grid.
struct Subgrid {
  int col_lo = 0;
  int col_hi = 0;
  int row_lo = 0;
  int row_hi = 0;
  int cols() const { return col_hi - col_lo + 1; }
  int rows() const { return row_hi - row_lo + 1; }
  bool contains(GridVertex v) const {
    return col_lo <= v.col && v.col <= col_hi && row_lo <= v.row && v.row <= row_hi;
  }
  bool degenerate() const { return col_lo == col_hi || row_lo == row_hi; }
  friend bool operator==(const Subgrid&, const Subgrid&) = default;
};

class HananGrid {
 public:
  HananGrid() = default;
  explicit HananGrid(const std::vector<TerminalPair>& pairs);
  HananGrid(std::vector<Coord> xs, std::vector<Coord> ys);

  const std::vector<Coord>& xs() const { return xs_; }
  const std::vector<Coord>& ys() const { return ys_; }
  int cols() const { return static_cast<int>(xs_.size()); }
  int rows() const { return static_cast<int>(ys_.size()); }
  std::size_t vertex_count() const { return xs_.size() * ys_.size(); }
  std::size_t edge_count() const;

  int col_of(Coord x) const;
  int row_of(Coord y) const;
  GridVertex vertex_at(Point p) const { return {col_of(p.x), row_of(p.y)}; }
  Point point(GridVertex v) const { return {xs_[v.col], ys_[v.row]}; }

  VertexId id(GridVertex v) const { return v.row * cols() + v.col; }
  GridVertex vertex(VertexId id) const { return {id % cols(), id / cols()}; }

  // Horizontal edges first (row-major), then vertical edges.
  EdgeId edge_between(GridVertex a, GridVertex b) const;
  std::pair<GridVertex, GridVertex> edge_endpoints(EdgeId e) const;
  Length edge_length(EdgeId e) const;

 private:
  std::vector<Coord> xs_;
  std::vector<Coord> ys_;
};

HananGrid build_hanan_grid(const std::vector<TerminalPair>& pairs);
Subgrid subgrid(const HananGrid& grid, const BoundingBox& box);
Subgrid subgrid(const HananGrid& grid, const TerminalPair& pair);

using MPath = std::vector<GridVertex>;

// Number of staircases of the pair on the grid, saturating at UINT64_MAX.
std::uint64_t m_path_count(const HananGrid& grid, const TerminalPair& pair);
std::vector<MPath> enumerate_m_paths(const HananGrid& grid, const TerminalPair& pair, std::uint64_t cap);

// Axis-aligned path visiting every grid vertex between consecutive corners.
MPath grid_polyline(const HananGrid& grid, const std::vector<GridVertex>& corners);
// Horizontal leg first, then vertical.
MPath l_path(const HananGrid& grid, GridVertex from, GridVertex to);

Length path_length(const HananGrid& grid, const MPath& path);
std::vector<EdgeId> path_edges(const HananGrid& grid, const MPath& path);

}  // namespace gmmn
