#include "gmmn/svg.hpp"

#include <algorithm>
#include <cstdio>

namespace gmmn {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string render_svg(const Instance& instance, const GridNetwork* network) {
  const HananGrid grid = build_hanan_grid(instance.pairs);
  const Coord x0 = grid.xs().front(), x1 = grid.xs().back();
  const Coord y0 = grid.ys().front(), y1 = grid.ys().back();
  const double span = static_cast<double>(std::max<Coord>({x1 - x0, y1 - y0, 1}));
  const double size = 600.0, pad = 30.0;
  const double k = size / span;
  auto px = [&](Coord x) { return pad + (static_cast<double>(x - x0)) * k; };
  // SVG y grows downwards.
  auto py = [&](Coord y) { return pad + (static_cast<double>(y1 - y)) * k; };
  const double w = 2 * pad + static_cast<double>(x1 - x0) * k, h = 2 * pad + static_cast<double>(y1 - y0) * k;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" + num(h) +
         "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<g stroke=\"#b0b0b0\" stroke-width=\"0.6\" stroke-dasharray=\"4 3\">\n";
  for (Coord x : grid.xs())
    out += "<line x1=\"" + num(px(x)) + "\" y1=\"" + num(py(y1)) + "\" x2=\"" + num(px(x)) + "\" y2=\"" + num(py(y0)) + "\"/>\n";
  for (Coord y : grid.ys())
    out += "<line x1=\"" + num(px(x0)) + "\" y1=\"" + num(py(y)) + "\" x2=\"" + num(px(x1)) + "\" y2=\"" + num(py(y)) + "\"/>\n";
  out += "</g>\n";

  out += "<g fill=\"none\" stroke=\"#9ecae1\" stroke-width=\"0.8\">\n";
  for (const auto& p : instance.pairs) {
    const BoundingBox b = bounding_box(p);
    out += "<rect x=\"" + num(px(b.lo.x)) + "\" y=\"" + num(py(b.hi.y)) + "\" width=\"" +
           num(static_cast<double>(b.hi.x - b.lo.x) * k) + "\" height=\"" + num(static_cast<double>(b.hi.y - b.lo.y) * k) +
           "\"/>\n";
  }
  out += "</g>\n";

  if (network) {
    out += "<g fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\" stroke-linejoin=\"round\">\n";
    const HananGrid& g = network->grid();
    for (const auto& path : network->paths()) {
      out += "<polyline points=\"";
      for (std::size_t i = 0; i < path.size(); ++i) {
        const Point p = g.point(path[i]);
        out += (i ? " " : "") + num(px(p.x)) + "," + num(py(p.y));
      }
      out += "\"/>\n";
    }
    out += "</g>\n";
  }

  out += "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (std::size_t i = 0; i < instance.pairs.size(); ++i) {
    const auto& p = instance.pairs[i];
    for (int end = 0; end < 2; ++end) {
      const Point q = end ? p.t : p.s;
      out += "<circle cx=\"" + num(px(q.x)) + "\" cy=\"" + num(py(q.y)) + "\" r=\"3\" fill=\"black\"/>";
      out += "<text x=\"" + num(px(q.x) + 4) + "\" y=\"" + num(py(q.y) - 4) + "\">" + (end ? "t" : "s") +
             std::to_string(i) + "</text>\n";
    }
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace gmmn
