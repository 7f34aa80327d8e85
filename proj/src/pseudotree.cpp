#include "gmmn/pseudotree.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#include "gmmn/errors.hpp"
#include "gmmn/tree_dp_fast.hpp"

namespace gmmn {

Point CoordTransform::apply(Point p) const {
  if (transpose) std::swap(p.x, p.y);
  if (negate_x) p.x = -p.x;
  if (negate_y) p.y = -p.y;
  return p;
}

Point CoordTransform::invert(Point p) const {
  if (negate_x) p.x = -p.x;
  if (negate_y) p.y = -p.y;
  if (transpose) std::swap(p.x, p.y);
  return p;
}

long long cycle_rank(const IntersectionGraph& g) {
  return static_cast<long long>(g.edge_count()) - g.size() +
         static_cast<long long>(connected_components(g).size());
}

namespace {

struct Interval {
  Coord lo;
  Coord hi;
};

// Overlap of a box with a segment along the segment's axis.
Interval along(const BoundingBox& seg, const BoundingBox& other, bool vertical) {
  if (vertical) return {std::max(seg.lo.y, other.lo.y), std::min(seg.hi.y, other.hi.y)};
  return {std::max(seg.lo.x, other.lo.x), std::min(seg.hi.x, other.hi.x)};
}

BoundingBox intersect(const BoundingBox& a, const BoundingBox& b) {
  return {{std::max(a.lo.x, b.lo.x), std::max(a.lo.y, b.lo.y)}, {std::min(a.hi.x, b.hi.x), std::min(a.hi.y, b.hi.y)}};
}

std::pair<int, int> cycle_neighbours(const std::vector<int>& cycle, int at) {
  const auto k = cycle.size();
  return {cycle[(at + k - 1) % k], cycle[(at + 1) % k]};
}

// First component that contains a cycle, with that cycle in order.
std::vector<int> first_cycle(const IntersectionGraph& ig) {
  for (const auto& comp : connected_components(ig)) {
    const auto cyc = unique_cycle(ig, comp);
    if (cyc.empty()) continue;
    if (cyc.size() == 3) throw TriangleFound("cycle of three pairs");
    return cyc;
  }
  return {};
}

void append_triples(const HananGrid& grid, const Subgrid& box, GridVertex q, PassageAxis axis,
                    std::vector<PassageTriple>& out) {
  const int i = q.row - box.row_lo;  // zero based
  const int j = q.col - box.col_lo;
  const int a = box.rows(), b = box.cols();
  (void)grid;
  const GridVertex left{q.col - 1, q.row}, below{q.col, q.row - 1};
  if (axis == PassageAxis::Hor) {
    if (j == b - 1) return;
    const GridVertex next{q.col + 1, q.row};
    if (i == 0 && j == 0) out.push_back({q, q, next, axis});
    if (j > 0) out.push_back({left, q, next, axis});
    if (i > 0) out.push_back({below, q, next, axis});
  } else {
    if (i == a - 1) return;
    const GridVertex next{q.col, q.row + 1};
    if (i == 0 && j == 0) out.push_back({q, q, next, axis});
    if (i > 0) out.push_back({below, q, next, axis});
    if (j > 0) out.push_back({left, q, next, axis});
  }
}

ReductionPlan plan_for(const std::vector<TerminalPair>& pairs, int v, int u1, int u2) {
  ReductionPlan plan;
  plan.v = v;
  BoundingBox b1 = bounding_box(pairs[u1]), b2 = bounding_box(pairs[u2]);
  const bool vertical_line = b1.hi.x <= b2.lo.x || b2.hi.x <= b1.lo.x;
  if (!vertical_line && !(b1.hi.y <= b2.lo.y || b2.hi.y <= b1.lo.y))
    throw TriangleFound("cycle neighbours of the split pair intersect");

  CoordTransform tf;
  tf.transpose = !vertical_line;
  // Make v regular in the transformed frame.
  const TerminalPair tv = normalized(tf.apply(pairs[v]));
  tf.negate_y = orientation(tv) == Orientation::Flipped;

  for (int attempt = 0; attempt < 2; ++attempt) {
    plan.transform = tf;
    plan.pairs.clear();
    for (const auto& p : pairs) plan.pairs.push_back(tf.apply(p));
    const BoundingBox bv = bounding_box(plan.pairs[v]);
    plan.pairs[v] = {bv.lo, bv.hi};
    plan.u1 = u1;
    plan.u2 = u2;
    if (bounding_box(plan.pairs[plan.u1]).hi.x > bounding_box(plan.pairs[plan.u2]).lo.x) std::swap(plan.u1, plan.u2);
    const BoundingBox w1 = intersect(bv, bounding_box(plan.pairs[plan.u1]));
    const BoundingBox w2 = intersect(bv, bounding_box(plan.pairs[plan.u2]));
    plan.grid = HananGrid(plan.pairs);
    const Point corner{w1.hi.x, std::min(w1.hi.y, w2.hi.y)};
    if (corner == bv.hi && attempt == 0) {
      tf.negate_x = !tf.negate_x;
      tf.negate_y = !tf.negate_y;
      continue;
    }
    plan.corner = plan.grid.vertex_at(corner);
    break;
  }

  const Subgrid box = subgrid(plan.grid, plan.pairs[v]);
  for (int r = box.row_lo; r <= plan.corner.row; ++r) plan.x_hor.push_back({plan.corner.col, r});
  for (int c = box.col_lo; c <= plan.corner.col; ++c) plan.x_vert.push_back({c, plan.corner.row});
  for (const auto& q : plan.x_hor) append_triples(plan.grid, box, q, PassageAxis::Hor, plan.triples);
  for (const auto& q : plan.x_vert) append_triples(plan.grid, box, q, PassageAxis::Vert, plan.triples);
  return plan;
}

MPath to_grid(const HananGrid& from, const CoordTransform& tf, const HananGrid& to, const MPath& path) {
  std::vector<GridVertex> corners;
  corners.reserve(path.size());
  for (const auto& g : path) corners.push_back(to.vertex_at(tf.invert(from.point(g))));
  return grid_polyline(to, corners);
}

// Path of the given pair, reversed if needed so it starts at `start`.
MPath oriented(const HananGrid& grid, MPath path, Point start) {
  if (!path.empty() && grid.point(path.front()) != start) std::reverse(path.begin(), path.end());
  return path;
}

// Solves the pairs while skipping zero-length ones; paths are on the returned grid.
GridNetwork solve_forest(const std::vector<TerminalPair>& pairs);

GridNetwork solve_recursive(const std::vector<TerminalPair>& pairs) {
  const IntersectionGraph ig = build_intersection_graph(pairs);
  const std::vector<int> cycle = first_cycle(ig);
  if (cycle.empty()) return solve_forest(pairs);

  if (auto cut = cut_degenerate_cycle(pairs, ig, cycle)) {
    const GridNetwork sub = solve_recursive(cut->pairs);
    const HananGrid grid(pairs);
    std::vector<MPath> paths(pairs.size());
    for (std::size_t k = 0; k < cut->pairs.size(); ++k) {
      MPath piece = to_grid(sub.grid(), {}, grid, oriented(sub.grid(), sub.paths()[k], cut->pairs[k].s));
      auto& dst = paths[cut->origin[k]];
      if (dst.empty()) dst = std::move(piece);
      else {
        const auto& pp = pairs[cut->origin[k]];
        // Degenerate pair pieces run s->c and c->t in that order.
        dst = oriented(grid, std::move(dst), pp.s);
        dst.insert(dst.end(), piece.begin() + 1, piece.end());
      }
    }
    return GridNetwork(grid, std::move(paths));
  }

  const ReductionPlan plan = build_reduction_plan(pairs, ig);
  const long long rank = cycle_rank(ig);
  GridNetwork best;
  std::size_t best_triple = 0;
  Length best_len = std::numeric_limits<Length>::max();
  for (std::size_t k = 0; k < plan.triples.size(); ++k) {
    const auto derived = derived_instance(plan, plan.triples[k]);
    if (cycle_rank(build_intersection_graph(derived)) != rank - 1)
      throw ForestAssertionFailed("derived instance still has the split cycle");
    GridNetwork net = solve_recursive(derived);
    if (net.total_length() < best_len) {
      best_len = net.total_length();
      best = std::move(net);
      best_triple = k;
    }
  }

  const HananGrid grid(pairs);
  const auto derived = derived_instance(plan, plan.triples[best_triple]);
  const int n = static_cast<int>(pairs.size());
  std::vector<MPath> paths(n);
  int slot = 0;
  for (int i = 0; i < n; ++i) {
    if (i == plan.v) continue;
    paths[i] = to_grid(best.grid(), plan.transform, grid, best.paths()[slot++]);
  }
  MPath joined;
  for (int k = 0; k < 4; ++k) {
    const MPath piece = oriented(best.grid(), best.paths()[slot + k], derived[slot + k].s);
    joined.insert(joined.end(), piece.begin() + (joined.empty() ? 0 : 1), piece.end());
  }
  paths[plan.v] = to_grid(best.grid(), plan.transform, grid, joined);
  return GridNetwork(grid, std::move(paths));
}

GridNetwork solve_forest(const std::vector<TerminalPair>& pairs) {
  Instance sub;
  std::vector<int> kept;
  for (int i = 0; i < static_cast<int>(pairs.size()); ++i)
    if (pairs[i].s != pairs[i].t) {
      kept.push_back(i);
      sub.pairs.push_back(pairs[i]);
    }
  const HananGrid grid(pairs);
  std::vector<MPath> paths(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (pairs[i].s == pairs[i].t) paths[i] = {grid.vertex_at(pairs[i].s)};
  if (!sub.pairs.empty()) {
    const Solution sol = solve_tree_fast(sub);
    const auto& g = sol.network.grid();
    for (std::size_t k = 0; k < kept.size(); ++k) paths[kept[k]] = to_grid(g, {}, grid, sol.network.paths()[k]);
  }
  return GridNetwork(grid, std::move(paths));
}

}  // namespace

std::optional<CutResult> cut_degenerate_cycle(const std::vector<TerminalPair>& pairs, const IntersectionGraph& ig,
                                              const std::vector<int>& cycle) {
  (void)ig;
  for (std::size_t at = 0; at < cycle.size(); ++at) {
    const int v = cycle[at];
    if (orientation(pairs[v]) != Orientation::Degenerate) continue;
    const auto [u1, u2] = cycle_neighbours(cycle, static_cast<int>(at));
    const TerminalPair seg = normalized(pairs[v]);
    const BoundingBox bs = bounding_box(seg);
    const bool vertical = seg.s.x == seg.t.x;
    const Interval w1 = along(bs, bounding_box(pairs[u1]), vertical);
    const Interval w2 = along(bs, bounding_box(pairs[u2]), vertical);
    // The two overlaps share no edge, so one ends where (or before) the other starts.
    const Coord split = w1.hi <= w2.lo ? w1.hi : w2.hi;
    const Point mid = vertical ? Point{seg.s.x, split} : Point{split, seg.s.y};
    CutResult out;
    for (int i = 0; i < static_cast<int>(pairs.size()); ++i)
      if (i != v) {
        out.pairs.push_back(pairs[i]);
        out.origin.push_back(i);
      }
    out.pairs.push_back({seg.s, mid});
    out.origin.push_back(v);
    out.pairs.push_back({mid, seg.t});
    out.origin.push_back(v);
    // Keep the original endpoint order for the joined path.
    if (pairs[v].s != seg.s) {
      std::swap(out.pairs[out.pairs.size() - 1], out.pairs[out.pairs.size() - 2]);
      for (std::size_t k = out.pairs.size() - 2; k < out.pairs.size(); ++k) std::swap(out.pairs[k].s, out.pairs[k].t);
    }
    return out;
  }
  return std::nullopt;
}

ReductionPlan build_reduction_plan(const std::vector<TerminalPair>& pairs, const IntersectionGraph& ig) {
  const std::vector<int> cycle = first_cycle(ig);
  if (cycle.empty()) {
    ReductionPlan plan;
    plan.pass_through = true;
    plan.pairs = pairs;
    return plan;
  }
  std::optional<ReductionPlan> best;
  for (std::size_t at = 0; at < cycle.size(); ++at) {
    const int v = cycle[at];
    if (orientation(pairs[v]) == Orientation::Degenerate)
      throw std::invalid_argument("cut degenerate cycle pairs before planning");
    const auto [u1, u2] = cycle_neighbours(cycle, static_cast<int>(at));
    ReductionPlan plan = plan_for(pairs, v, u1, u2);
    if (!best || plan.triples.size() < best->triples.size()) best = std::move(plan);
  }
  return std::move(*best);
}

std::vector<TerminalPair> derived_instance(const ReductionPlan& plan, const PassageTriple& triple) {
  std::vector<TerminalPair> out;
  out.reserve(plan.pairs.size() + 3);
  for (int i = 0; i < static_cast<int>(plan.pairs.size()); ++i)
    if (i != plan.v) out.push_back(plan.pairs[i]);
  const auto& g = plan.grid;
  const Point s = plan.pairs[plan.v].s, t = plan.pairs[plan.v].t;
  const Point qm = g.point(triple.q_minus), q = g.point(triple.q), qp = g.point(triple.q_plus);
  out.push_back({s, qm});
  out.push_back({qm, q});
  out.push_back({q, qp});
  out.push_back({qp, t});
  return out;
}

Solution solve_pseudotree(const Instance& instance) {
  const auto start = std::chrono::steady_clock::now();
  const IntersectionGraph ig = build_intersection_graph(instance.pairs);
  for (const auto& comp : connected_components(ig)) {
    const GraphClass c = classify_component(ig, comp);
    if (c == GraphClass::General) {
      if (!is_triangle_free(induced_subgraph(ig, comp))) throw TriangleFound("component contains a triangle");
      throw NotAPseudotree("component has more than one cycle");
    }
  }
  Solution sol;
  sol.network = solve_recursive(instance.pairs);
  sol.solver = "pseudotree";
  sol.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return sol;
}

}  // namespace gmmn
