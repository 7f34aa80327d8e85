#include "gmmn/star.hpp"

#include <algorithm>

#include "gmmn/errors.hpp"
#include "gmmn/instance_graph.hpp"
#include "gmmn/tree_dp.hpp"

namespace gmmn {

namespace {

Subgrid overlap(const Subgrid& a, const Subgrid& b) {
  return {std::max(a.col_lo, b.col_lo), std::min(a.col_hi, b.col_hi), std::max(a.row_lo, b.row_lo),
          std::min(a.row_hi, b.row_hi)};
}

bool opposite(const LocalFrame& f, const TerminalPair& leaf) {
  const Orientation o = orientation(leaf);
  return o != Orientation::Degenerate && ((o == Orientation::Flipped) != f.flipped());
}

LocalFrame center_frame(const HananGrid& grid, const TerminalPair& center) {
  return LocalFrame(grid, subgrid(grid, center), orientation(center) == Orientation::Flipped);
}

}  // namespace

AuxDag build_simplified_dag(const HananGrid& grid, const std::vector<TerminalPair>& pairs, int center,
                            const std::vector<int>& leaves) {
  const LocalFrame f = center_frame(grid, pairs[center]);
  std::vector<WindowSpec> windows;
  for (int l : leaves) {
    WindowSpec w;
    w.owner = l;
    w.box = f.local_box(overlap(f.window(), subgrid(grid, pairs[l])));
    w.kind = opposite(f, pairs[l]) && !w.box.degenerate() ? WindowKind::Axis : WindowKind::Additive;
    windows.push_back(std::move(w));
  }
  return AuxDag(f, std::move(windows));
}

AuxDag build_reference_dag(const HananGrid& grid, const std::vector<TerminalPair>& pairs, int center,
                           const std::vector<int>& leaves) {
  const LocalFrame f = center_frame(grid, pairs[center]);
  std::vector<WindowSpec> windows;
  for (int l : leaves) {
    WindowSpec w;
    w.owner = l;
    w.kind = WindowKind::Table;
    w.box = f.local_box(overlap(f.window(), subgrid(grid, pairs[l])));
    const bool axis = opposite(f, pairs[l]) && !w.box.degenerate();
    const BoundarySets sets = boundary_sets(f.cols(), f.rows(), w.box);
    for (int p : sets.lower_left)
      for (int q : sets.upper_right) {
        const int pc = f.col_of(p), pr = f.row_of(p), qc = f.col_of(q), qr = f.row_of(q);
        if (p == q || qc < pc || qr < pr) continue;
        const Point a{f.x(pc), f.y(pr)}, b{f.x(qc), f.y(qr)};
        w.jumps.push_back({p, q, gamma(axis ? Orientation::Flipped : Orientation::Regular, a, b)});
      }
    windows.push_back(std::move(w));
  }
  return AuxDag(f, std::move(windows));
}

Solution solve_star(const Instance& instance) {
  const auto pairs = normalized(instance.pairs);
  const IntersectionGraph ig = build_intersection_graph(pairs);
  for (const auto& comp : connected_components(ig)) {
    if (!is_star_shaped(ig, comp))
      throw WrongClass(std::string("star solver needs star components, found ") +
                       to_string(classify_component(ig, comp)));
  }
  return solve_with_tree_engine(instance, {true, true}, "star");
}

}  // namespace gmmn
