#include "gmmn/tree_dp_fast.hpp"

#include <algorithm>
#include <stdexcept>

namespace gmmn {

const char* to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Ra: return "Ra";
    case CaseTag::Rb: return "Rb";
    case CaseTag::Rc: return "Rc";
    case CaseTag::Fa: return "Fa";
    case CaseTag::Fb: return "Fb";
    case CaseTag::Fc: return "Fc";
    case CaseTag::Segment: return "Segment";
  }
  return "?";
}

std::vector<CaseDescriptor> classify_inout_case(const WindowContext& ctx) {
  if (ctx.window.degenerate()) return {};
  std::vector<Side> entries, exits;
  const bool up = ctx.parent_up;
  if (ctx.source_inside) {
    entries.push_back(Side::Source);
  } else {
    if (ctx.extends_left) entries.push_back(Side::Left);
    if (up && ctx.extends_below) entries.push_back(Side::Bottom);
    if (!up && ctx.extends_above) entries.push_back(Side::Top);
  }
  if (ctx.sink_inside) {
    exits.push_back(Side::Sink);
  } else {
    if (ctx.extends_right) exits.push_back(Side::Right);
    if (up && ctx.extends_above) exits.push_back(Side::Top);
    if (!up && ctx.extends_below) exits.push_back(Side::Bottom);
  }
  using S = Side;
  using T = Transform;
  std::vector<CaseDescriptor> out;
  for (Side in : entries)
    for (Side ex : exits) {
      CaseDescriptor d{up ? CaseTag::Ra : CaseTag::Fa, in, ex, T::Identity};
      if (in == S::Source && ex == S::Sink) {
        // whole window, identity transform
      } else if (up) {
        if (in == S::Source) d.transform = ex == S::Right ? T::Identity : T::Transpose;
        else if (ex == S::Sink) d.transform = in == S::Left ? T::Rotate : T::TransposeRotate;
        else if (in == S::Bottom && ex == S::Right) d = {CaseTag::Rb, in, ex, T::Identity};
        else if (in == S::Left && ex == S::Top) d = {CaseTag::Rb, in, ex, T::Transpose};
        else d = {CaseTag::Rc, in, ex, T::Identity};
      } else {
        if (in == S::Source) d.transform = ex == S::Right ? T::Identity : T::TransposeRotate;
        else if (ex == S::Sink) d.transform = in == S::Left ? T::Rotate : T::Transpose;
        else if (in == S::Top && ex == S::Right) d = {CaseTag::Fb, in, ex, T::Identity};
        else if (in == S::Left && ex == S::Bottom) d = {CaseTag::Fb, in, ex, T::Rotate};
        else d = {CaseTag::Fc, in, ex, T::Identity};
      }
      out.push_back(d);
    }
  return out;
}

LambdaTables precompute_lambda_kappa(const AuxDag& dag, Length kappa) {
  const auto fwd = dag.forward();
  const auto bwd = dag.backward();
  LambdaTables out;
  const int V = dag.plain_count();
  out.into.resize(V);
  out.out_of.assign(bwd.begin(), bwd.begin() + V);
  for (int z = 0; z < V; ++z) out.into[z] = dag.best_at_vertex(fwd, z);
  out.longest = out.into[dag.sink_vertex()];
  out.kappa = kappa;
  return out;
}

namespace {

Length add(Length a, Length b) { return reachable(a) && reachable(b) ? a + b : kUnreachable; }

// Canonical index view of the window under one of the four symmetries.
struct Canon {
  LocalBox w;
  Transform tf;
  int na, nb;

  Canon(const LocalBox& box, Transform t) : w(box), tf(t) {
    const int a = w.r1 - w.r0 + 1, b = w.c1 - w.c0 + 1;
    const bool transposed = t == Transform::Transpose || t == Transform::TransposeRotate;
    na = transposed ? b : a;
    nb = transposed ? a : b;
  }
  bool swapped() const { return tf == Transform::Rotate || tf == Transform::TransposeRotate; }
  std::pair<int, int> local(int i, int j) const {
    switch (tf) {
      case Transform::Identity: return {w.c0 + j, w.r0 + i};
      case Transform::Transpose: return {w.c0 + i, w.r0 + j};
      case Transform::Rotate: return {w.c1 - j, w.r1 - i};
      case Transform::TransposeRotate: return {w.c1 - i, w.r1 - j};
    }
    return {0, 0};
  }
};

struct Grid2 {
  int na, nb;
  std::vector<Length> v;
  Grid2(int a, int b, Length init = kUnreachable) : na(a), nb(b), v(static_cast<std::size_t>(a) * b, init) {}
  Length& operator()(int i, int j) { return v[static_cast<std::size_t>(i) * nb + j]; }
  Length operator()(int i, int j) const { return v[static_cast<std::size_t>(i) * nb + j]; }
};

// first(f) + second(s) over canonical pairs f <= s, f != s. A local pair h <= i'
// contributes into(h) - phi(h) + out_of(i') + phi(i'); rotations reverse dominance,
// so the two roles swap.
struct Weights {
  Grid2 first, second;
};

enum class Phi { Sum, X, Y };

Weights make_weights(const LocalFrame& frame, const Canon& cn, const LambdaTables& lam, Phi phi) {
  Weights out{Grid2(cn.na, cn.nb), Grid2(cn.na, cn.nb)};
  for (int i = 0; i < cn.na; ++i)
    for (int j = 0; j < cn.nb; ++j) {
      auto [c, r] = cn.local(i, j);
      const int z = frame.id(c, r);
      const Length f = phi == Phi::Sum ? frame.x(c) + frame.y(r) : phi == Phi::X ? frame.x(c) : frame.y(r);
      const Length head = reachable(lam.into[z]) ? lam.into[z] - f : kUnreachable;
      const Length tail = reachable(lam.out_of[z]) ? lam.out_of[z] + f : kUnreachable;
      out.first(i, j) = cn.swapped() ? tail : head;
      out.second(i, j) = cn.swapped() ? head : tail;
    }
  return out;
}

// Boxes rows [0..i], all columns.
std::vector<Length> grow_up(const Weights& w) {
  const int na = w.first.na, nb = w.first.nb;
  std::vector<Length> out(na, kUnreachable), prev(nb, kUnreachable), cur(nb, kUnreachable);
  for (int i = 0; i < na; ++i) {
    Length best = i > 0 ? out[i - 1] : kUnreachable;
    for (int j = 0; j < nb; ++j) {
      const Length dom = std::max(prev[j], j > 0 ? cur[j - 1] : kUnreachable);
      best = std::max(best, add(dom, w.second(i, j)));
      cur[j] = std::max(dom, w.first(i, j));
    }
    out[i] = best;
    std::swap(prev, cur);
  }
  return out;
}

// Boxes rows [i..na-1], all columns.
std::vector<Length> grow_down(const Weights& w) {
  const int na = w.first.na, nb = w.first.nb;
  std::vector<Length> out(na, kUnreachable), next(nb, kUnreachable), cur(nb, kUnreachable);
  for (int i = na - 1; i >= 0; --i) {
    Length best = i + 1 < na ? out[i + 1] : kUnreachable;
    for (int j = nb - 1; j >= 0; --j) {
      const Length dom = std::max(next[j], j + 1 < nb ? cur[j + 1] : kUnreachable);
      best = std::max(best, add(w.first(i, j), dom));
      cur[j] = std::max(dom, w.second(i, j));
    }
    out[i] = best;
    std::swap(next, cur);
  }
  return out;
}

// Boxes rows [0..i], columns [j..nb-1].
Grid2 anchored_bottom_right(const Weights& w) {
  const int na = w.first.na, nb = w.first.nb;
  Grid2 val(na, nb);
  std::vector<Length> col_prefix(nb, kUnreachable), row_suffix(nb + 1, kUnreachable);
  for (int i = 0; i < na; ++i) {
    row_suffix[nb] = kUnreachable;
    for (int j = nb - 1; j >= 0; --j) row_suffix[j] = std::max(row_suffix[j + 1], w.second(i, j));
    for (int j = nb - 1; j >= 0; --j) {
      const Length below = col_prefix[j];
      const Length with_row = std::max(below, w.first(i, j));
      Length best = std::max(add(below, row_suffix[j]), add(with_row, row_suffix[j + 1]));
      if (i > 0) best = std::max(best, val(i - 1, j));
      if (j + 1 < nb) best = std::max(best, val(i, j + 1));
      val(i, j) = best;
      col_prefix[j] = with_row;
    }
  }
  return val;
}

// Boxes rows [i..na-1], columns [j..nb-1].
Grid2 anchored_top_right(const Weights& w) {
  const int na = w.first.na, nb = w.first.nb;
  Grid2 val(na, nb), dom(na + 1, nb + 1);
  for (int i = na - 1; i >= 0; --i)
    for (int j = nb - 1; j >= 0; --j) {
      const Length rest = std::max(dom(i + 1, j), dom(i, j + 1));
      dom(i, j) = std::max(rest, w.second(i, j));
      Length best = add(w.first(i, j), rest);
      if (i + 1 < na) best = std::max(best, val(i + 1, j));
      if (j + 1 < nb) best = std::max(best, val(i, j + 1));
      val(i, j) = best;
    }
  return val;
}

std::vector<Phi> weightings(bool up) {
  if (up) return {Phi::Sum};
  return {Phi::X, Phi::Y};
}

struct Emitter {
  const LocalFrame& frame;
  const Canon& cn;
  bool up;
  Length longest;
  const CellSink& sink;

  void box(int i0, int i1, int j0, int j1, Length value) const {
    auto [ca, ra] = cn.local(i0, j0);
    auto [cb, rb] = cn.local(i1, j1);
    const int c0 = std::min(ca, cb), c1 = std::max(ca, cb), r0 = std::min(ra, rb), r1 = std::max(ra, rb);
    const int p = up ? frame.id(c0, r0) : frame.id(c0, r1);
    const int q = up ? frame.id(c1, r1) : frame.id(c1, r0);
    sink(p, q, std::max(longest, value));
  }
};

// max over rows rho < rho' of into(c, rho) - y + out_of(c, rho') + y, per column of the window.
std::vector<Length> column_values(const LocalFrame& f, const LocalBox& w, const LambdaTables& lam) {
  std::vector<Length> out;
  for (int c = w.c0; c <= w.c1; ++c) {
    Length best = kUnreachable, head = kUnreachable;
    for (int r = w.r0; r <= w.r1; ++r) {
      const int z = f.id(c, r);
      best = std::max(best, add(head, reachable(lam.out_of[z]) ? lam.out_of[z] + f.y(r) : kUnreachable));
      if (reachable(lam.into[z])) head = std::max(head, lam.into[z] - f.y(r));
    }
    out.push_back(best);
  }
  return out;
}

std::vector<Length> row_values(const LocalFrame& f, const LocalBox& w, const LambdaTables& lam) {
  std::vector<Length> out;
  for (int r = w.r0; r <= w.r1; ++r) {
    Length best = kUnreachable, head = kUnreachable;
    for (int c = w.c0; c <= w.c1; ++c) {
      const int z = f.id(c, r);
      best = std::max(best, add(head, reachable(lam.out_of[z]) ? lam.out_of[z] + f.x(c) : kUnreachable));
      if (reachable(lam.into[z])) head = std::max(head, lam.into[z] - f.x(c));
    }
    out.push_back(best);
  }
  return out;
}

void fill_strips(const LocalFrame& f, const WindowContext& ctx, const CaseDescriptor& d, const LambdaTables& lam,
                 const CellSink& sink) {
  const LocalBox& w = ctx.window;
  const Length lp = lam.longest;
  const bool vertical = d.entry == Side::Bottom || d.entry == Side::Top;
  if (vertical) {
    const auto value = column_values(f, w, lam);
    for (int c = w.c0; c <= w.c1; ++c)
      for (int c2 = c; c2 <= w.c1; ++c2) {
        const Length width = f.x(c2) - f.x(c);
        const Length far = value[c2 - w.c0];
        if (ctx.parent_up) sink(f.id(c, w.r0), f.id(c2, w.r1), std::max(lp, far) + width);
        else sink(f.id(c, w.r1), f.id(c2, w.r0), std::max(lp + width, far));
      }
  } else {
    const auto value = row_values(f, w, lam);
    for (int r = w.r0; r <= w.r1; ++r)
      for (int r2 = w.r0; r2 <= w.r1; ++r2) {
        if (ctx.parent_up ? r2 < r : r2 > r) continue;
        const Length height = std::abs(f.y(r2) - f.y(r));
        const int top = std::max(r, r2);
        const Length far = value[top - w.r0];
        const Length v = ctx.parent_up ? std::max(lp, far) + height : std::max(lp + height, far);
        sink(f.id(w.c0, r), f.id(w.c1, r2), v);
      }
  }
}

}  // namespace

void fill_case(const LocalFrame& frame, const WindowContext& ctx, const CaseDescriptor& d, const LambdaTables& lam,
               const CellSink& sink) {
  if (d.tag == CaseTag::Rc || d.tag == CaseTag::Fc) {
    fill_strips(frame, ctx, d, lam, sink);
    return;
  }
  const Canon cn(ctx.window, d.transform);
  const Emitter emit{frame, cn, ctx.parent_up, lam.longest, sink};
  std::vector<Weights> ws;
  for (Phi phi : weightings(ctx.parent_up)) ws.push_back(make_weights(frame, cn, lam, phi));

  const bool anchored = d.tag == CaseTag::Rb || d.tag == CaseTag::Fb;
  if (anchored) {
    Grid2 best(cn.na, cn.nb);
    for (const auto& w : ws) {
      Grid2 g = d.tag == CaseTag::Rb ? anchored_bottom_right(w) : anchored_top_right(w);
      for (std::size_t k = 0; k < g.v.size(); ++k) best.v[k] = std::max(best.v[k], g.v[k]);
    }
    for (int i = 0; i < cn.na; ++i)
      for (int j = 0; j < cn.nb; ++j) {
        if (d.tag == CaseTag::Rb) emit.box(0, i, j, cn.nb - 1, best(i, j));
        else emit.box(i, cn.na - 1, j, cn.nb - 1, best(i, j));
      }
    return;
  }

  // Case a: one end of the parent is pinned at a window corner.
  const bool grows_up = d.tag == CaseTag::Ra;
  std::vector<Length> best(cn.na, kUnreachable);
  for (const auto& w : ws) {
    auto g = grows_up ? grow_up(w) : grow_down(w);
    for (int i = 0; i < cn.na; ++i) best[i] = std::max(best[i], g[i]);
  }
  if (d.entry == Side::Source && d.exit == Side::Sink) {
    emit.box(0, cn.na - 1, 0, cn.nb - 1, grows_up ? best[cn.na - 1] : best[0]);
    return;
  }
  for (int i = 0; i < cn.na; ++i) {
    if (grows_up) emit.box(0, i, 0, cn.nb - 1, best[i]);
    else emit.box(i, cn.na - 1, 0, cn.nb - 1, best[i]);
  }
}

void fill_segment(const LocalFrame& f, const LocalBox& seg, const LambdaTables& lam,
                  const std::vector<std::pair<int, int>>& cells, const CellSink& sink) {
  const bool vertical = seg.c0 == seg.c1;
  const int len = vertical ? seg.r1 - seg.r0 + 1 : seg.c1 - seg.c0 + 1;
  auto vertex_at = [&](int k) { return vertical ? f.id(seg.c0, seg.r0 + k) : f.id(seg.c0 + k, seg.r0); };
  auto position = [&](int id) { return vertical ? f.row_of(id) - seg.r0 : f.col_of(id) - seg.c0; };
  std::vector<Length> head(len), tail(len);
  for (int k = 0; k < len; ++k) {
    const int z = vertex_at(k);
    const Length phi = f.x(f.col_of(z)) + f.y(f.row_of(z));
    head[k] = reachable(lam.into[z]) ? lam.into[z] - phi : kUnreachable;
    tail[k] = reachable(lam.out_of[z]) ? lam.out_of[z] + phi : kUnreachable;
  }
  // best[lo][hi] computed lazily per distinct lo.
  std::vector<std::vector<Length>> best(len);
  for (auto [p, q] : cells) {
    int lo = position(p), hi = position(q);
    if (lo > hi) std::swap(lo, hi);
    auto& row = best[lo];
    if (row.empty()) {
      row.assign(len, kUnreachable);
      Length run_head = head[lo];
      for (int k = lo + 1; k < len; ++k) {
        row[k] = std::max(row[k - 1], add(run_head, tail[k]));
        run_head = std::max(run_head, head[k]);
      }
    }
    sink(p, q, std::max(lam.longest, row[hi]));
  }
}

}  // namespace gmmn
