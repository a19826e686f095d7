#include "burling/shapes.hpp"

#include <algorithm>

#include "burling/arrangement.hpp"
#include "burling/error.hpp"

namespace burling {

namespace {

struct TerritoryFaces {
  Arrangement arr;
  Raster shape;
  Raster ter;
};

TerritoryFaces territory_faces(const Shape& s, const Region* extra) {
  ArrangementBuilder builder;
  builder.add(s.region());
  if (extra != nullptr) builder.add(*extra);
  TerritoryFaces tf;
  tf.arr = std::move(builder).build();
  tf.shape = Raster(tf.arr, s.region());
  tf.ter = territory_raster(tf.arr, tf.shape, s.box());
  return tf;
}

Raster clipped(const Arrangement& arr, const Region& s, const Rect& r) {
  Raster out(arr.cols(), arr.rows());
  for (const auto& q : s.rects())
    if (auto part = intersect(q, r)) out.paint(arr, *part);
  return out;
}

}  // namespace

bool is_pouna(const Region& r) { return !r.empty() && r.rects().size() > 1 && is_connected(r); }

Shape::Shape(std::string id, Region region) : id_(std::move(id)), region_(std::move(region)) {
  if (!is_pouna(region_)) throw Error("not-pouna", id_);
  bounds_ = burling::bounds(region_);
}

Shape::Shape(Trusted, std::string id, Region region)
    : id_(std::move(id)), region_(std::move(region)), bounds_(burling::bounds(region_)) {}

Shape Shape::transformed(const Transform& t, std::string id) const {
  return Shape(Trusted{}, std::move(id), t(region_));
}

Shape reflect(const Shape& s) { return s.transformed(Transform::horizontal_reflection(), s.id()); }

bool ter_member(const Point& p, const Shape& s) {
  if (!s.box().contains(p) || contains(s.region(), p)) return false;
  for (const auto& q : s.region().rects())
    if (q.ylo <= p.y && p.y <= q.yhi && p.x < q.xhi) return true;
  return false;
}

bool region_in_territory(const Region& q, const Shape& s) {
  if (q.empty()) return true;
  if (!s.box().contains(bounding_box(q))) return false;
  const TerritoryFaces tf = territory_faces(s, &q);
  const Raster inner(tf.arr, q);
  for (int hy = 0; hy < tf.arr.rows(); ++hy)
    for (int hx = 0; hx < tf.arr.cols(); ++hx)
      if (inner.at(hx, hy) && !tf.ter.at(hx, hy)) return false;
  return true;
}

bool rect_in_territory(const Rect& q, const Shape& s) { return region_in_territory(Region(q), s); }

bool region_meets_territory(const Region& q, const Shape& s) {
  if (q.empty() || !bounding_box(q).intersects(s.box())) return false;
  const TerritoryFaces tf = territory_faces(s, &q);
  const Raster inner(tf.arr, q);
  for (int hy = 0; hy < tf.arr.rows(); ++hy)
    for (int hx = 0; hx < tf.arr.cols(); ++hx)
      if (inner.at(hx, hy) && tf.ter.at(hx, hy)) return true;
  return false;
}

bool is_strong(const Shape& s) { return territory_faces(s, nullptr).ter.any(); }

Strongified strongify(const Shape& s) {
  if (is_strong(s)) return {s, false};
  Shape r = reflect(s);
  if (!is_strong(r)) throw Error("internal-error", "neither shape nor its reflection is strong");
  return {std::move(r), true};
}

Region left_edge_set(const Shape& s) {
  const Bounds& b = s.bounds();
  return intersection(s.region(), Rect{b.l, b.l, b.b, b.t});
}

std::optional<std::vector<Rect>> vertical_crossing_path(const Region& s, const Rect& r) {
  const Arrangement arr = ArrangementBuilder().add(s).add(r).build();
  const Raster inside = clipped(arr, s, r);
  auto path = face_path(inside, true, arr.hy_of(r.ylo), arr.hy_of(r.yhi));
  if (!path) return std::nullopt;
  std::vector<Rect> faces;
  faces.reserve(path->size());
  for (const auto& [hx, hy] : *path) faces.push_back(arr.face(hx, hy));
  return faces;
}

bool crosses_vertically(const Region& s, const Rect& r) {
  return vertical_crossing_path(s, r).has_value();
}

bool crosses_horizontally(const Region& s, const Rect& r) {
  const Arrangement arr = ArrangementBuilder().add(s).add(r).build();
  const Raster inside = clipped(arr, s, r);
  return face_path(inside, false, arr.hx_of(r.xlo), arr.hx_of(r.xhi)).has_value();
}

Rect right_extension(const Rect& e, const Rect& r) {
  if (!r.contains(e)) throw Error("not-nested");
  return Rect{e.xhi, r.xhi, e.ylo, e.yhi};
}

bool is_subterritory(const Rect& e, const Shape& s) {
  const Bounds& b = s.bounds();
  if (!(e.xlo > b.l && e.xhi < b.r && e.ylo > b.b && e.yhi < b.t)) return false;
  if (!rect_in_territory(e, s)) return false;
  return crosses_vertically(s, right_extension(e, s.box()));
}

SubterritoryCert find_subterritory(const Shape& s) {
  const TerritoryFaces tf = territory_faces(s, nullptr);
  if (!tf.ter.any()) throw Error("not-strong", s.id());
  // Any open cell of Ter works: the middle third of the cell stays strictly
  // inside box(s), and the first shape face to its right in the same row is
  // a vertical edge of s spanning the whole cell height.
  for (int hy = 1; hy < tf.arr.rows(); hy += 2) {
    for (int hx = 1; hx < tf.arr.cols(); hx += 2) {
      if (!tf.ter.at(hx, hy)) continue;
      const Rect cell = tf.arr.face(hx, hy);
      const Rat w = cell.width() / Rat(3);
      const Rat h = cell.height() / Rat(3);
      const Rect e{cell.xlo + w, cell.xhi - w, cell.ylo + h, cell.yhi - h};
      if (!is_subterritory(e, s)) continue;
      auto witness = vertical_crossing_path(s.region(), right_extension(e, s.box()));
      return SubterritoryCert{e, std::move(*witness)};
    }
  }
  throw Error("internal-error", "no subterritory found for strong shape " + s.id());
}

bool validate(const SubterritoryCert& cert, const Shape& s) {
  if (!is_subterritory(cert.rect, s)) return false;
  const Rect ext = right_extension(cert.rect, s.box());
  const auto& w = cert.crossing_witness;
  if (w.empty()) return false;
  for (size_t i = 0; i < w.size(); ++i) {
    if (!ext.contains(w[i]) || !contains_rect(s.region(), w[i])) return false;
    if (i > 0 && !w[i - 1].intersects(w[i])) return false;
  }
  return w.front().ylo == ext.ylo && w.back().yhi == ext.yhi;
}

std::vector<TerritoryPiece> materialize_territory(const Shape& s) {
  const TerritoryFaces tf = territory_faces(s, nullptr);
  std::vector<TerritoryPiece> out;
  for (int hy = 0; hy < tf.arr.rows(); ++hy) {
    int hx = 0;
    while (hx < tf.arr.cols()) {
      if (!tf.ter.at(hx, hy)) {
        ++hx;
        continue;
      }
      const int lo = hx;
      while (hx + 1 < tf.arr.cols() && tf.ter.at(hx + 1, hy)) ++hx;
      const int hi = hx;
      ++hx;
      const Rect first = tf.arr.face(lo, hy);
      const Rect last = tf.arr.face(hi, hy);
      out.push_back(TerritoryPiece{Rect{first.xlo, last.xhi, first.ylo, first.yhi}, lo % 2 == 1,
                                   hi % 2 == 1, hy % 2 == 1, hy % 2 == 1});
    }
  }
  return out;
}

}  // namespace burling
