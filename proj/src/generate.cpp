#include "gmmn/generate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>

#include "gmmn/errors.hpp"
#include "gmmn/instance_graph.hpp"

namespace gmmn {

const char* to_string(GenClass c) {
  switch (c) {
    case GenClass::Star: return "star";
    case GenClass::Tree: return "tree";
    case GenClass::Cycle: return "cycle";
    case GenClass::Pseudotree: return "pseudotree";
    case GenClass::General: return "general";
  }
  return "?";
}

GenClass parse_gen_class(const std::string& name) {
  for (GenClass c : {GenClass::Star, GenClass::Tree, GenClass::Cycle, GenClass::Pseudotree, GenClass::General})
    if (name == to_string(c)) return c;
  throw ParseError("unknown instance class '" + name + "'");
}

namespace {

using Rng = std::mt19937_64;
constexpr int kRandomLimit = 12;

Coord uniform(Rng& rng, Coord lo, Coord hi) { return std::uniform_int_distribution<Coord>(lo, hi)(rng); }
bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

struct Layout {
  std::vector<TerminalPair> pairs;
  Coord extent = 0;
};

TerminalPair random_pair(Rng& rng, Coord lo, Coord hi) {
  while (true) {
    Point s{uniform(rng, lo, hi), uniform(rng, lo, hi)};
    Point t{uniform(rng, lo, hi), uniform(rng, lo, hi)};
    if (coin(rng, 0.15)) (coin(rng, 0.5) ? t.x : t.y) = coin(rng, 0.5) ? s.x : s.y;
    if (coin(rng, 0.1)) t.x = s.x;
    if (s != t) return {s, t};
  }
}

// Pair with one endpoint inside the anchor box, to make contact likely.
TerminalPair pair_near(Rng& rng, const BoundingBox& anchor, Coord lo, Coord hi, Coord reach) {
  while (true) {
    Point s{uniform(rng, anchor.lo.x, anchor.hi.x), uniform(rng, anchor.lo.y, anchor.hi.y)};
    Point t{std::clamp(s.x + uniform(rng, -reach, reach), lo, hi), std::clamp(s.y + uniform(rng, -reach, reach), lo, hi)};
    if (coin(rng, 0.15)) t.x = s.x;
    if (s != t) return coin(rng, 0.5) ? TerminalPair{s, t} : TerminalPair{t, s};
  }
}

std::vector<int> contacts(const std::vector<TerminalPair>& pairs, const TerminalPair& cand) {
  std::vector<int> hits;
  const BoundingBox b = bounding_box(cand);
  for (int i = 0; i < static_cast<int>(pairs.size()); ++i)
    if (boxes_share_edge(b, bounding_box(pairs[i]))) hits.push_back(i);
  return hits;
}

// Adds a pair touching exactly the listed existing pairs (sorted).
bool attach(Rng& rng, std::vector<TerminalPair>& pairs, const std::vector<int>& want, Coord lo, Coord hi,
            Coord reach, int tries) {
  for (int k = 0; k < tries; ++k) {
    TerminalPair cand;
    if (want.empty()) cand = random_pair(rng, lo, hi);
    else if (want.size() == 2 && coin(rng, 0.6)) {
      const BoundingBox a = bounding_box(pairs[want[0]]), b = bounding_box(pairs[want[1]]);
      cand = {{uniform(rng, a.lo.x, a.hi.x), uniform(rng, a.lo.y, a.hi.y)},
              {uniform(rng, b.lo.x, b.hi.x), uniform(rng, b.lo.y, b.hi.y)}};
      if (cand.s == cand.t) continue;
    } else {
      const int anchor = want[std::uniform_int_distribution<std::size_t>(0, want.size() - 1)(rng)];
      cand = coin(rng, 0.3) ? random_pair(rng, lo, hi) : pair_near(rng, bounding_box(pairs[anchor]), lo, hi, reach);
    }
    if (contacts(pairs, cand) == want) {
      pairs.push_back(cand);
      return true;
    }
  }
  return false;
}

// Pair touching exactly one existing pair, anchored anywhere.
bool attach_leaf(Rng& rng, std::vector<TerminalPair>& pairs, Coord lo, Coord hi, Coord reach, int tries) {
  for (int k = 0; k < tries; ++k) {
    const int anchor = std::uniform_int_distribution<int>(0, static_cast<int>(pairs.size()) - 1)(rng);
    const TerminalPair cand =
        coin(rng, 0.2) ? random_pair(rng, lo, hi) : pair_near(rng, bounding_box(pairs[anchor]), lo, hi, reach);
    if (contacts(pairs, cand).size() == 1) {
      pairs.push_back(cand);
      return true;
    }
  }
  return false;
}

std::vector<TerminalPair> random_star(Rng& rng, int n, Coord range) {
  std::vector<TerminalPair> pairs{random_pair(rng, 0, range)};
  for (int i = 1; i < n; ++i)
    if (!attach(rng, pairs, {0}, 0, range, range, 400)) return {};
  return pairs;
}

std::vector<TerminalPair> random_tree(Rng& rng, int n, Coord range) {
  std::vector<TerminalPair> pairs{random_pair(rng, 0, range)};
  for (int i = 1; i < n; ++i)
    if (!attach_leaf(rng, pairs, 0, range, range, 400)) return {};
  return pairs;
}

std::vector<TerminalPair> random_cycle(Rng& rng, int len, Coord range) {
  std::vector<TerminalPair> pairs{random_pair(rng, 0, range)};
  for (int i = 1; i + 1 < len; ++i)
    if (!attach(rng, pairs, {i - 1}, 0, range, range, 400)) return {};
  if (!attach(rng, pairs, {0, len - 2}, 0, range, range, 400)) return {};
  return pairs;
}

Layout lattice_star(Rng& rng, int n) {
  const int leaves = n - 1;
  const int k = std::max(1, static_cast<int>(std::ceil(std::sqrt(static_cast<double>(leaves)))));
  const Coord cell = 2 * k + 2;
  Layout out;
  out.extent = cell * k;
  TerminalPair center{{0, 0}, {out.extent, out.extent}};
  if (coin(rng, 0.5)) std::swap(center.s.y, center.t.y);
  out.pairs.push_back(center);
  std::vector<int> cells(static_cast<std::size_t>(k) * k);
  std::iota(cells.begin(), cells.end(), 0);
  std::shuffle(cells.begin(), cells.end(), rng);
  for (int l = 0; l < leaves; ++l) {
    const int i = cells[l] % k, j = cells[l] / k;
    // Column i, row j: the leaf's own x lines are offset by j and its y lines by i,
    // so no two leaves share a grid line.
    const Coord x0 = cell * i + 1 + 2 * j, y0 = cell * j + 1 + 2 * i;
    Point s{x0, y0}, t{x0 + 1, y0 + 1};
    if (coin(rng, 0.1)) t.x = s.x;
    else if (coin(rng, 0.1)) t.y = s.y;
    if (coin(rng, 0.5)) std::swap(s.y, t.y);
    out.pairs.push_back(coin(rng, 0.5) ? TerminalPair{s, t} : TerminalPair{t, s});
  }
  return out;
}

// Two crossing strips: a wide one whose arms carry most leaves and a tall one whose
// arms carry the rest. A few wide-strip leaves sit inside its band and put grid rows
// into the crossing; the other wide-strip leaves span the band.
Layout crossing_caterpillar(Rng& rng, int n) {
  const int rest = n - 2;
  const int n_tall_arm = std::max(1, rest * 3 / 8);
  const int n_band = std::max(1, rest / 8);
  const int n_span = rest - n_tall_arm - n_band;
  const int slots = n_band + n_span;
  const int left_slots = slots / 2;
  const int below = n_tall_arm / 2, above = n_tall_arm - below;

  const Coord vx = 3 * left_slots + 1, vw = 2 * n_tall_arm + 1;
  const Coord right0 = vx + vw + 1;
  const Coord xw = right0 + 3 * (slots - left_slots) + 1;
  const Coord y0 = 3 * below + 4, bh = 2 * n_band + 1;
  const Coord top = y0 + bh + 3 + 3 * above + 1;

  Layout out;
  out.extent = std::max(xw, top);
  TerminalPair wide{{0, y0}, {xw, y0 + bh}};
  TerminalPair tall{{vx, 1}, {vx + vw, top}};
  if (coin(rng, 0.5)) std::swap(wide.s.y, wide.t.y);
  if (coin(rng, 0.5)) std::swap(tall.s.y, tall.t.y);
  out.pairs = {wide, tall};

  std::vector<int> slot_ids(slots);
  std::iota(slot_ids.begin(), slot_ids.end(), 0);
  std::shuffle(slot_ids.begin(), slot_ids.end(), rng);
  std::vector<int> band_rows(n_band);
  std::iota(band_rows.begin(), band_rows.end(), 0);
  std::shuffle(band_rows.begin(), band_rows.end(), rng);
  auto slot_x = [&](int s) { return s < left_slots ? Coord{3 * s + 1} : right0 + 3 * (s - left_slots); };
  auto orient = [&](Point s, Point t) {
    if (coin(rng, 0.5)) std::swap(s.y, t.y);
    return coin(rng, 0.5) ? TerminalPair{s, t} : TerminalPair{t, s};
  };
  for (int k = 0; k < slots; ++k) {
    const Coord x = slot_x(slot_ids[k]);
    Coord x2 = coin(rng, 0.1) ? x : x + 1;
    if (k < n_band) {
      const Coord y = y0 + 1 + 2 * band_rows[k];
      out.pairs.push_back(orient({x, y}, {x2, y + 1}));
    } else {
      out.pairs.push_back(orient({x, y0 - 1}, {x2, y0 + bh + 1}));
    }
  }
  std::vector<int> order(n_tall_arm);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (int m = 0; m < n_tall_arm; ++m) {
    const Coord x = vx + 1 + 2 * order[m];
    const Coord y = m < below ? y0 - 4 - 3 * m : y0 + bh + 3 + 3 * (m - below);
    const Coord y2 = coin(rng, 0.1) ? y : y + 1;
    out.pairs.push_back(orient({x, y}, {x + 1, y2}));
  }
  return out;
}

// Boxes around the border of a square, consecutive ones overlapping near shared
// ring points. Corner boxes reach outward on both sides they join.
Layout ring(Rng& rng, int n, Coord margin) {
  std::array<int, 4> count{};
  for (int s = 0; s < 4; ++s) count[s] = n / 4 + (s < n % 4 ? 1 : 0);
  const int most = *std::max_element(count.begin(), count.end());
  const Coord spacing = 10;
  const Coord side = static_cast<Coord>(std::ceil(spacing * most / 0.6)) + 2 * spacing;

  struct RingPoint {
    Point at;
    int side;
  };
  // Travel direction and outward normal per side: bottom, right, top, left.
  const Point dir[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const Point out_n[4] = {{0, -1}, {1, 0}, {0, 1}, {-1, 0}};
  const double from[4] = {0.3, 0.3, 0.7, 0.7};
  std::vector<RingPoint> pts;
  for (int s = 0; s < 4; ++s) {
    const double step = 0.6 * static_cast<double>(side) / count[s];
    for (int k = 0; k < count[s]; ++k) {
      const double frac = from[s] * static_cast<double>(side) + (s < 2 ? 1 : -1) * (k + 0.5) * step;
      const Coord pos = static_cast<Coord>(std::llround(frac)) + uniform(rng, -1, 1);
      Point p;
      if (s == 0) p = {pos, 0};
      else if (s == 1) p = {side, pos};
      else if (s == 2) p = {pos, side};
      else p = {0, pos};
      pts.push_back({p, s});
    }
  }
  auto shift = [](Point p, Point d, Coord k) { return Point{p.x + d.x * k, p.y + d.y * k}; };
  Layout out;
  for (int i = 0; i < n; ++i) {
    const RingPoint& a = pts[i];
    const RingPoint& b = pts[(i + 1) % n];
    const Coord sh = uniform(rng, 1, 2);
    Point e1 = shift(a.at, dir[a.side], -sh), e2 = shift(b.at, dir[b.side], sh);
    if (a.side == b.side) {
      const Coord o1 = uniform(rng, 1, 2), o2 = uniform(rng, 1, 2);
      const bool first_out = coin(rng, 0.5);
      e1 = shift(e1, out_n[a.side], first_out ? o1 : -o1);
      e2 = shift(e2, out_n[b.side], first_out ? -o2 : o2);
    } else {
      e1 = shift(e1, out_n[a.side], uniform(rng, 1, 2));
      e2 = shift(e2, out_n[b.side], uniform(rng, 1, 2));
    }
    out.pairs.push_back(coin(rng, 0.5) ? TerminalPair{e1, e2} : TerminalPair{e2, e1});
  }
  const Coord offset = 3 + margin;
  for (auto& p : out.pairs) {
    p.s = shift(p.s, {1, 1}, offset);
    p.t = shift(p.t, {1, 1}, offset);
  }
  out.extent = side + 2 * offset;
  return out;
}

Layout ring_with_trees(Rng& rng, int n) {
  const int cyc = std::max(4, n / 2);
  Layout out = ring(rng, cyc, 6);
  for (int i = cyc; i < n; ++i)
    if (!attach_leaf(rng, out.pairs, 0, out.extent, 3, 4000)) return {};
  return out;
}

std::vector<TerminalPair> stretched(const Layout& layout, Coord range) {
  const Coord f = std::max<Coord>(1, range / std::max<Coord>(1, layout.extent));
  std::vector<TerminalPair> out = layout.pairs;
  for (auto& p : out) {
    p.s = {p.s.x * f, p.s.y * f};
    p.t = {p.t.x * f, p.t.y * f};
  }
  return out;
}

bool matches(GenClass cls, const std::vector<TerminalPair>& pairs) {
  const int n = static_cast<int>(pairs.size());
  if (n == 0) return false;
  const IntersectionGraph ig = build_intersection_graph(pairs);
  const ClassInfo info = classify(ig);
  switch (cls) {
    case GenClass::Star: {
      std::vector<int> all(n);
      std::iota(all.begin(), all.end(), 0);
      return info.components == 1 && is_star_shaped(ig, all);
    }
    case GenClass::Tree: return n == 1 ? info.cls == GraphClass::Edgeless : info.cls == GraphClass::Tree;
    case GenClass::Cycle: return info.cls == GraphClass::Cycle;
    case GenClass::Pseudotree:
      return info.cls == GraphClass::TriangleFreePseudotree || (n == 4 && info.cls == GraphClass::Cycle);
    case GenClass::General: return true;
  }
  return false;
}

bool uses_layout(GenClass cls, int n) {
  if (cls == GenClass::General) return false;
  return n > kRandomLimit;
}

Layout build_layout(GenClass cls, int n, Rng& rng) {
  switch (cls) {
    case GenClass::Star: return lattice_star(rng, n);
    case GenClass::Tree: return crossing_caterpillar(rng, n);
    case GenClass::Cycle: return ring(rng, n, 0);
    case GenClass::Pseudotree: return ring_with_trees(rng, n);
    case GenClass::General: break;
  }
  return {};
}

}  // namespace

Coord minimum_coord_range(GenClass cls, int n) {
  if (!uses_layout(cls, n)) return cls == GenClass::General ? 1 : 2;
  Rng rng(0);
  return build_layout(cls, n, rng).extent;
}

Instance generate_instance(GenClass cls, int n, Coord coord_range, std::uint64_t seed) {
  if (n < 1) throw GenerationFailed("need at least one pair");
  if ((cls == GenClass::Cycle || cls == GenClass::Pseudotree) && n < 4)
    throw GenerationFailed(std::string("a triangle-free ") + to_string(cls) + " needs at least four pairs");
  if (coord_range < minimum_coord_range(cls, n))
    throw GenerationFailed("coordinate range " + std::to_string(coord_range) + " is below the minimum " +
                           std::to_string(minimum_coord_range(cls, n)) + " for this class and size");
  Rng rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(cls) * 1315423911ULL + n);

  Instance inst;
  inst.name = std::string(to_string(cls)) + "-n" + std::to_string(n) + "-s" + std::to_string(seed);
  inst.intended_class = to_string(cls);
  // Random sampling rarely closes long cycles in a tight range; fall back to the layout
  // once half the budget is spent, if it fits.
  const bool layout_fits = (cls == GenClass::Cycle || cls == GenClass::Pseudotree) && coord_range >= [&] {
    Rng probe(0);
    return build_layout(cls, n, probe).extent;
  }();
  for (int attempt = 0; attempt < 400; ++attempt) {
    std::vector<TerminalPair> pairs;
    if (uses_layout(cls, n) || (attempt >= 200 && layout_fits)) {
      pairs = stretched(build_layout(cls, n, rng), coord_range);
    } else {
      switch (cls) {
        case GenClass::Star: pairs = random_star(rng, n, coord_range); break;
        case GenClass::Tree: pairs = random_tree(rng, n, coord_range); break;
        case GenClass::Cycle: pairs = random_cycle(rng, n, coord_range); break;
        case GenClass::Pseudotree: {
          const int len = std::uniform_int_distribution<int>(4, n)(rng);
          pairs = random_cycle(rng, len, coord_range);
          for (int i = len; i < n && !pairs.empty(); ++i)
            if (!attach_leaf(rng, pairs, 0, coord_range, coord_range, 400)) pairs.clear();
          if (n > 4 && len == n) pairs.clear();
          break;
        }
        case GenClass::General:
          for (int i = 0; i < n; ++i) pairs.push_back(random_pair(rng, 0, coord_range));
          break;
      }
    }
    if (static_cast<int>(pairs.size()) == n && matches(cls, pairs)) {
      inst.pairs = std::move(pairs);
      return inst;
    }
  }
  throw GenerationFailed(std::string("could not generate a ") + to_string(cls) + " instance with n=" +
                         std::to_string(n) + " in range " + std::to_string(coord_range));
}

}  // namespace gmmn
