#include "burling/render.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace burling {

namespace {

struct Canvas {
  double x0, y1, scale;
  double x(const Rat& v) const { return (v.to_double() - x0) * scale; }
  double y(const Rat& v) const { return (y1 - v.to_double()) * scale; }
};

void rect_el(std::ostringstream& os, const Canvas& c, const Rect& r, const char* cls) {
  os << "<rect class=\"" << cls << "\" x=\"" << c.x(r.xlo) << "\" y=\"" << c.y(r.yhi) << "\" width=\""
     << c.x(r.xhi) - c.x(r.xlo) << "\" height=\"" << c.y(r.ylo) - c.y(r.yhi) << "\"/>\n";
}

}  // namespace

std::string render_svg(const Scene& sc, const RenderOptions& opts) {
  const Rect box = sc.box();
  const double w = std::max((box.xhi - box.xlo).to_double(), 1e-300);
  const double h = std::max((box.yhi - box.ylo).to_double(), 1e-300);
  const double margin = opts.canvas * 0.02;
  const double inner = opts.canvas - 2 * margin;
  const Canvas c{box.xlo.to_double(), box.yhi.to_double(), inner / std::max(w, h)};

  std::ostringstream os;
  os << std::fixed << std::setprecision(3);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << opts.canvas << " " << opts.canvas
     << "\" width=\"" << opts.canvas << "\" height=\"" << opts.canvas << "\">\n";
  os << "<defs><pattern id=\"hatch\" patternUnits=\"userSpaceOnUse\" width=\"6\" height=\"6\" "
        "patternTransform=\"rotate(45)\"><line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" stroke=\"#7a8ca8\" "
        "stroke-width=\"1.5\"/></pattern></defs>\n";
  os << "<style>.shape{fill:#222;stroke:#222;stroke-width:1} .ter{fill:url(#hatch);stroke:none} "
        ".prob{fill:none;stroke:#c0392b;stroke-width:1;stroke-dasharray:4 3}</style>\n";
  os << "<g transform=\"translate(" << margin << "," << margin << ")\">\n";
  if (opts.territories) {
    os << "<g id=\"territories\">\n";
    for (const auto& s : sc.family.shapes)
      for (const auto& piece : materialize_territory(s)) rect_el(os, c, piece.rect, "ter");
    os << "</g>\n";
  }
  os << "<g id=\"shapes\">\n";
  for (const auto& s : sc.family.shapes) {
    os << "<g id=\"" << s.id() << "\">\n";
    for (const auto& r : s.region().rects()) rect_el(os, c, r, "shape");
    os << "</g>\n";
  }
  os << "</g>\n";
  if (opts.probs) {
    os << "<g id=\"probs\">\n";
    for (const auto& p : sc.probs) rect_el(os, c, p.rect, "prob");
    os << "</g>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace burling
