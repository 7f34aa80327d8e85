#include "gmmn/geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "gmmn/errors.hpp"

namespace gmmn {

const char* to_string(Orientation o) {
  switch (o) {
    case Orientation::Regular: return "regular";
    case Orientation::Flipped: return "flipped";
    case Orientation::Degenerate: return "degenerate";
  }
  return "?";
}

Length dx(Point p, Point q) { return std::abs(p.x - q.x); }
Length dy(Point p, Point q) { return std::abs(p.y - q.y); }
Length manhattan_distance(Point p, Point q) { return dx(p, q) + dy(p, q); }

TerminalPair normalized(const TerminalPair& pair) {
  if (pair.s.x > pair.t.x || (pair.s.x == pair.t.x && pair.s.y > pair.t.y)) return {pair.t, pair.s};
  return pair;
}

std::vector<TerminalPair> normalized(const std::vector<TerminalPair>& pairs) {
  std::vector<TerminalPair> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) out.push_back(normalized(p));
  return out;
}

Orientation orientation(const TerminalPair& pair) {
  if (pair.s.x == pair.t.x || pair.s.y == pair.t.y) return Orientation::Degenerate;
  const TerminalPair n = normalized(pair);
  return n.t.y > n.s.y ? Orientation::Regular : Orientation::Flipped;
}

BoundingBox bounding_box(const TerminalPair& pair) {
  return {{std::min(pair.s.x, pair.t.x), std::min(pair.s.y, pair.t.y)},
          {std::max(pair.s.x, pair.t.x), std::max(pair.s.y, pair.t.y)}};
}

Length gamma(Orientation leaf, Point p, Point q) {
  if (leaf == Orientation::Flipped) return std::max(dx(p, q), dy(p, q));
  return manhattan_distance(p, q);
}

namespace {

std::vector<Coord> sorted_unique(std::vector<Coord> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Lengths are summed over all pairs; keep every such sum far from the int64 limit.
void check_overflow(const std::vector<TerminalPair>& pairs) {
  constexpr Coord kMaxAbs = Coord{1} << 52;
  Coord lo = 0, hi = 0;
  bool first = true;
  for (const auto& p : pairs) {
    for (Coord c : {p.s.x, p.s.y, p.t.x, p.t.y}) {
      if (c > kMaxAbs || c < -kMaxAbs) throw OverflowRisk("coordinate magnitude too large: " + std::to_string(c));
      if (first) lo = hi = c, first = false;
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
  }
  const __int128 bound = static_cast<__int128>(hi - lo) * 4 * static_cast<__int128>(pairs.size() + 1);
  if (bound > (static_cast<__int128>(1) << 60)) throw OverflowRisk("coordinate span too large for exact length sums");
}

}  // namespace

HananGrid::HananGrid(const std::vector<TerminalPair>& pairs) {
  check_overflow(pairs);
  std::vector<Coord> xs, ys;
  for (const auto& p : pairs) {
    xs.push_back(p.s.x);
    xs.push_back(p.t.x);
    ys.push_back(p.s.y);
    ys.push_back(p.t.y);
  }
  xs_ = sorted_unique(std::move(xs));
  ys_ = sorted_unique(std::move(ys));
}

HananGrid::HananGrid(std::vector<Coord> xs, std::vector<Coord> ys)
    : xs_(sorted_unique(std::move(xs))), ys_(sorted_unique(std::move(ys))) {}

std::size_t HananGrid::edge_count() const {
  if (xs_.empty() || ys_.empty()) return 0;
  return (xs_.size() - 1) * ys_.size() + xs_.size() * (ys_.size() - 1);
}

int HananGrid::col_of(Coord x) const {
  auto it = std::lower_bound(xs_.begin(), xs_.end(), x);
  if (it == xs_.end() || *it != x) throw std::out_of_range("x coordinate not on grid: " + std::to_string(x));
  return static_cast<int>(it - xs_.begin());
}

int HananGrid::row_of(Coord y) const {
  auto it = std::lower_bound(ys_.begin(), ys_.end(), y);
  if (it == ys_.end() || *it != y) throw std::out_of_range("y coordinate not on grid: " + std::to_string(y));
  return static_cast<int>(it - ys_.begin());
}

EdgeId HananGrid::edge_between(GridVertex a, GridVertex b) const {
  if (b < a) std::swap(a, b);
  const EdgeId horizontal = static_cast<EdgeId>(cols() - 1) * rows();
  if (a.row == b.row && b.col == a.col + 1) return static_cast<EdgeId>(a.row) * (cols() - 1) + a.col;
  if (a.col == b.col && b.row == a.row + 1) return horizontal + static_cast<EdgeId>(a.row) * cols() + a.col;
  throw std::invalid_argument("vertices are not grid neighbours");
}

std::pair<GridVertex, GridVertex> HananGrid::edge_endpoints(EdgeId e) const {
  const EdgeId horizontal = static_cast<EdgeId>(cols() - 1) * rows();
  if (e < horizontal) {
    const int row = static_cast<int>(e / (cols() - 1));
    const int col = static_cast<int>(e % (cols() - 1));
    return {{col, row}, {col + 1, row}};
  }
  e -= horizontal;
  const int row = static_cast<int>(e / cols());
  const int col = static_cast<int>(e % cols());
  return {{col, row}, {col, row + 1}};
}

Length HananGrid::edge_length(EdgeId e) const {
  auto [a, b] = edge_endpoints(e);
  return manhattan_distance(point(a), point(b));
}

HananGrid build_hanan_grid(const std::vector<TerminalPair>& pairs) {
  if (pairs.empty()) throw std::invalid_argument("instance has no pairs");
  return HananGrid(pairs);
}

Subgrid subgrid(const HananGrid& grid, const BoundingBox& box) {
  return {grid.col_of(box.lo.x), grid.col_of(box.hi.x), grid.row_of(box.lo.y), grid.row_of(box.hi.y)};
}

Subgrid subgrid(const HananGrid& grid, const TerminalPair& pair) { return subgrid(grid, bounding_box(pair)); }

std::uint64_t m_path_count(const HananGrid& grid, const TerminalPair& pair) {
  const Subgrid w = subgrid(grid, pair);
  const std::uint64_t h = static_cast<std::uint64_t>(w.cols() - 1);
  const std::uint64_t v = static_cast<std::uint64_t>(w.rows() - 1);
  const std::uint64_t k = std::min(h, v);
  unsigned __int128 c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    c = c * (h + v - k + i) / i;
    if (c > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(c);
}

std::vector<MPath> enumerate_m_paths(const HananGrid& grid, const TerminalPair& pair, std::uint64_t cap) {
  const std::uint64_t count = m_path_count(grid, pair);
  if (count > cap) {
    throw CapExceeded("pair has " + std::to_string(count) + " staircases, cap is " + std::to_string(cap));
  }
  const TerminalPair p = normalized(pair);
  const GridVertex s = grid.vertex_at(p.s);
  const GridVertex t = grid.vertex_at(p.t);
  const int step = t.row >= s.row ? 1 : -1;

  std::vector<MPath> out;
  out.reserve(count);
  MPath current{s};
  auto rec = [&](auto&& self, GridVertex at) -> void {
    if (at == t) {
      out.push_back(current);
      return;
    }
    if (at.col < t.col) {
      current.push_back({at.col + 1, at.row});
      self(self, current.back());
      current.pop_back();
    }
    if (at.row != t.row) {
      current.push_back({at.col, at.row + step});
      self(self, current.back());
      current.pop_back();
    }
  };
  rec(rec, s);
  return out;
}

MPath grid_polyline(const HananGrid& /*grid*/, const std::vector<GridVertex>& corners) {
  MPath out;
  for (const auto& c : corners) {
    if (out.empty()) {
      out.push_back(c);
      continue;
    }
    GridVertex at = out.back();
    if (at.col != c.col && at.row != c.row) throw std::invalid_argument("polyline corners must be axis aligned");
    while (at != c) {
      if (at.col != c.col) at.col += at.col < c.col ? 1 : -1;
      else at.row += at.row < c.row ? 1 : -1;
      out.push_back(at);
    }
  }
  return out;
}

MPath l_path(const HananGrid& grid, GridVertex from, GridVertex to) {
  return grid_polyline(grid, {from, {to.col, from.row}, to});
}

Length path_length(const HananGrid& grid, const MPath& path) {
  Length total = 0;
  for (std::size_t i = 1; i < path.size(); ++i) total += manhattan_distance(grid.point(path[i - 1]), grid.point(path[i]));
  return total;
}

std::vector<EdgeId> path_edges(const HananGrid& grid, const MPath& path) {
  std::vector<EdgeId> out;
  out.reserve(path.empty() ? 0 : path.size() - 1);
  for (std::size_t i = 1; i < path.size(); ++i) out.push_back(grid.edge_between(path[i - 1], path[i]));
  return out;
}

}  // namespace gmmn
