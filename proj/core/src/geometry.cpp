#include "burling/geometry.hpp"

#include <algorithm>
#include <ostream>

#include "burling/arrangement.hpp"
#include "burling/error.hpp"

namespace burling {

class RegionAccess {
 public:
  static Region trusted(std::vector<Rect> rects) { return Region(Region::Trusted{}, std::move(rects)); }
};

Rect Rect::make(Rat xlo, Rat xhi, Rat ylo, Rat yhi) {
  if (xhi < xlo || yhi < ylo) throw Error("bad-rect", "inverted interval");
  return Rect{std::move(xlo), std::move(xhi), std::move(ylo), std::move(yhi)};
}

std::strong_ordering operator<=>(const Rect& a, const Rect& b) {
  if (auto c = a.xlo <=> b.xlo; c != 0) return c;
  if (auto c = a.ylo <=> b.ylo; c != 0) return c;
  if (auto c = a.xhi <=> b.xhi; c != 0) return c;
  return a.yhi <=> b.yhi;
}

std::ostream& operator<<(std::ostream& os, const Rect& r) {
  return os << '[' << r.xlo << ',' << r.xhi << "]x[" << r.ylo << ',' << r.yhi << ']';
}

std::optional<Rect> intersect(const Rect& a, const Rect& b) {
  if (!a.intersects(b)) return std::nullopt;
  return Rect{std::max(a.xlo, b.xlo), std::min(a.xhi, b.xhi), std::max(a.ylo, b.ylo),
              std::min(a.yhi, b.yhi)};
}

Rect hull(const Rect& a, const Rect& b) {
  return Rect{std::min(a.xlo, b.xlo), std::max(a.xhi, b.xhi), std::min(a.ylo, b.ylo),
              std::max(a.yhi, b.yhi)};
}

namespace {

// Maximal rectangles of a closed rectilinear union. For every x-span of grid
// coordinates, the rows fully covered by that span form runs; a run is a
// maximal rectangle unless the span can be widened by one grid step.
std::vector<Rect> maximal_rects(const std::vector<Rect>& input) {
  ArrangementBuilder builder;
  for (const auto& r : input) builder.add(r);
  const Arrangement arr = std::move(builder).build();
  Raster raster(arr.cols(), arr.rows());
  for (const auto& r : input) raster.paint(arr, r);

  const int cols = arr.cols();
  const int rows = arr.rows();
  const int nx = static_cast<int>(arr.xs().size());

  // covered[hy] for the current span, grown incrementally as the span widens.
  std::vector<Rect> out;
  std::vector<char> covered(static_cast<size_t>(rows));
  const auto column_full = [&](int hx, int hy) { return raster.at(hx, hy); };
  const auto span_covers = [&](int hx_lo, int hx_hi, int hy_lo, int hy_hi) {
    if (hx_lo < 0 || hx_hi >= cols) return false;
    for (int hy = hy_lo; hy <= hy_hi; ++hy)
      for (int hx = hx_lo; hx <= hx_hi; ++hx)
        if (!column_full(hx, hy)) return false;
    return true;
  };

  for (int i = 0; i < nx; ++i) {
    std::fill(covered.begin(), covered.end(), 1);
    for (int j = i; j < nx; ++j) {
      const int hx_lo = 2 * i;
      const int hx_hi = 2 * j;
      bool any = false;
      for (int hy = 0; hy < rows; ++hy) {
        if (!covered[static_cast<size_t>(hy)]) continue;
        for (int hx = (j == i ? hx_lo : hx_hi - 1); hx <= hx_hi; ++hx) {
          if (!column_full(hx, hy)) {
            covered[static_cast<size_t>(hy)] = 0;
            break;
          }
        }
        any = any || covered[static_cast<size_t>(hy)] != 0;
      }
      if (!any) break;
      int hy = 0;
      while (hy < rows) {
        if (!covered[static_cast<size_t>(hy)]) {
          ++hy;
          continue;
        }
        const int run_lo = hy;
        while (hy + 1 < rows && covered[static_cast<size_t>(hy + 1)]) ++hy;
        const int run_hi = hy;
        ++hy;
        // Runs of a closed set start and end on grid lines.
        if (run_lo % 2 != 0 || run_hi % 2 != 0) continue;
        if (span_covers(hx_lo - 2, hx_lo - 1, run_lo, run_hi)) continue;
        if (span_covers(hx_hi + 1, hx_hi + 2, run_lo, run_hi)) continue;
        out.push_back(Rect{arr.xs()[static_cast<size_t>(i)], arr.xs()[static_cast<size_t>(j)],
                           arr.ys()[static_cast<size_t>(run_lo / 2)],
                           arr.ys()[static_cast<size_t>(run_hi / 2)]});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Raster raster_on(const Arrangement& arr, const Region& r) { return Raster(arr, r); }

}  // namespace

Region::Region(std::vector<Rect> rects) {
  for (const auto& r : rects)
    if (r.xhi < r.xlo || r.yhi < r.ylo) throw Error("bad-rect", "inverted interval");
  if (rects.empty()) return;
  rects_ = maximal_rects(rects);
}

std::ostream& operator<<(std::ostream& os, const Region& r) {
  os << '{';
  for (size_t i = 0; i < r.rects().size(); ++i) os << (i ? ", " : "") << r.rects()[i];
  return os << '}';
}

Bounds bounds(const Region& r) {
  if (r.empty()) throw Error("empty-region");
  const auto& rs = r.rects();
  Bounds b{rs.front().xlo, rs.front().xhi, rs.front().ylo, rs.front().yhi};
  for (const auto& q : rs) {
    b.l = std::min(b.l, q.xlo);
    b.r = std::max(b.r, q.xhi);
    b.b = std::min(b.b, q.ylo);
    b.t = std::max(b.t, q.yhi);
  }
  return b;
}

bool contains(const Region& r, const Point& p) {
  return std::any_of(r.rects().begin(), r.rects().end(),
                     [&](const Rect& q) { return q.contains(p); });
}

Region intersection(const Region& a, const Region& b) {
  std::vector<Rect> parts;
  for (const auto& p : a.rects())
    for (const auto& q : b.rects())
      if (auto r = intersect(p, q)) parts.push_back(*r);
  return Region(std::move(parts));
}

Region intersection(const Region& a, const Rect& q) {
  std::vector<Rect> parts;
  for (const auto& p : a.rects())
    if (auto r = intersect(p, q)) parts.push_back(*r);
  return Region(std::move(parts));
}

Region union_of(const Region& a, const Region& b) {
  std::vector<Rect> all = a.rects();
  all.insert(all.end(), b.rects().begin(), b.rects().end());
  return Region(std::move(all));
}

bool intersects(const Region& a, const Region& b) {
  for (const auto& p : a.rects())
    for (const auto& q : b.rects())
      if (p.intersects(q)) return true;
  return false;
}

bool intersects(const Region& a, const Rect& q) {
  return std::any_of(a.rects().begin(), a.rects().end(),
                     [&](const Rect& p) { return p.intersects(q); });
}

bool contains_rect(const Region& r, const Rect& q) {
  const Arrangement arr = ArrangementBuilder().add(r).add(q).build();
  const Raster raster = raster_on(arr, r);
  const Span sx = x_span(arr, q);
  const Span sy = y_span(arr, q);
  for (int hy = sy.lo; hy <= sy.hi; ++hy)
    for (int hx = sx.lo; hx <= sx.hi; ++hx)
      if (!raster.at(hx, hy)) return false;
  return true;
}

bool contains_region(const Region& outer, const Region& inner) {
  const Arrangement arr = ArrangementBuilder().add(outer).add(inner).build();
  const Raster o = raster_on(arr, outer);
  const Raster in = raster_on(arr, inner);
  for (int hy = 0; hy < arr.rows(); ++hy)
    for (int hx = 0; hx < arr.cols(); ++hx)
      if (in.at(hx, hy) && !o.at(hx, hy)) return false;
  return true;
}

bool is_connected(const Region& r) {
  if (r.empty()) return false;
  const Arrangement arr = ArrangementBuilder().add(r).build();
  int count = 0;
  component_labels(raster_on(arr, r), &count);
  return count == 1;
}

Transform::Transform(Rat a, Rat b, Rat c, Rat d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (a_.sign() == 0 || b_.sign() == 0) throw Error("bad-transform", "zero scale factor");
}

Transform Transform::matching(const Rect& from, const Rect& to) {
  if (from.width().sign() == 0 || from.height().sign() == 0 || to.width().sign() == 0 ||
      to.height().sign() == 0)
    throw Error("bad-transform", "degenerate rectangle");
  const Rat a = to.width() / from.width();
  const Rat b = to.height() / from.height();
  return Transform(a, b, to.xlo - a * from.xlo, to.ylo - b * from.ylo);
}

Rect Transform::operator()(const Rect& r) const {
  Rat x0 = map_x(r.xlo);
  Rat x1 = map_x(r.xhi);
  Rat y0 = map_y(r.ylo);
  Rat y1 = map_y(r.yhi);
  if (a_.sign() < 0) std::swap(x0, x1);
  if (b_.sign() < 0) std::swap(y0, y1);
  return Rect{std::move(x0), std::move(x1), std::move(y0), std::move(y1)};
}

Region Transform::operator()(const Region& r) const {
  // An axis-wise affine bijection maps maximal rectangles to maximal
  // rectangles, so only the order needs restoring.
  std::vector<Rect> out;
  out.reserve(r.rects().size());
  for (const auto& q : r.rects()) out.push_back((*this)(q));
  std::sort(out.begin(), out.end());
  return RegionAccess::trusted(std::move(out));
}

Bounds Transform::operator()(const Bounds& bd) const {
  const Rect r = (*this)(bd.box());
  return Bounds{r.xlo, r.xhi, r.ylo, r.yhi};
}

Transform compose(const Transform& outer, const Transform& inner) {
  // outer(inner(x)) = ao (ai x + ci) + co
  return Transform(outer.a() * inner.a(), outer.b() * inner.b(), outer.a() * inner.c() + outer.c(),
                   outer.b() * inner.d() + outer.d());
}

Transform invert(const Transform& t) {
  const Rat ia = Rat(1) / t.a();
  const Rat ib = Rat(1) / t.b();
  return Transform(ia, ib, -t.c() * ia, -t.d() * ib);
}

}  // namespace burling
