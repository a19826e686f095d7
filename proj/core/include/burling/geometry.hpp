#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <vector>

#include "burling/rational.hpp"

namespace burling {

struct Point {
  Rat x;
  Rat y;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Closed axis-parallel rectangle [xlo,xhi] x [ylo,yhi]. Zero width or height
/// is allowed (segments, points); "no rectangle" is std::nullopt.
struct Rect {
  Rat xlo;
  Rat xhi;
  Rat ylo;
  Rat yhi;

  /// Throws Error("bad-rect") unless xlo <= xhi and ylo <= yhi.
  static Rect make(Rat xlo, Rat xhi, Rat ylo, Rat yhi);

  Rat width() const { return xhi - xlo; }
  Rat height() const { return yhi - ylo; }

  bool contains(const Point& p) const {
    return xlo <= p.x && p.x <= xhi && ylo <= p.y && p.y <= yhi;
  }
  bool contains(const Rect& o) const {
    return xlo <= o.xlo && o.xhi <= xhi && ylo <= o.ylo && o.yhi <= yhi;
  }
  bool intersects(const Rect& o) const {
    return xlo <= o.xhi && o.xlo <= xhi && ylo <= o.yhi && o.ylo <= yhi;
  }

  friend bool operator==(const Rect&, const Rect&) = default;
  // Lexicographic on (xlo, ylo, xhi, yhi), the canonical region order.
  friend std::strong_ordering operator<=>(const Rect& a, const Rect& b);
};

std::ostream& operator<<(std::ostream& os, const Rect& r);

std::optional<Rect> intersect(const Rect& a, const Rect& b);

/// Smallest rectangle containing both.
Rect hull(const Rect& a, const Rect& b);

/// Left/right/bottom/top extremes of a bounded set.
struct Bounds {
  Rat l;
  Rat r;
  Rat b;
  Rat t;

  Rect box() const { return Rect{l, r, b, t}; }
  Rat width() const { return r - l; }
  Rat height() const { return t - b; }

  friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// A finite union of closed rectangles, kept in canonical form: the list of
/// all maximal rectangles contained in the union, sorted by (xlo, ylo, xhi,
/// yhi). Two regions are equal as point sets iff their canonical lists match.
class Region {
 public:
  Region() = default;
  explicit Region(const Rect& r) : rects_{r} {}
  explicit Region(std::vector<Rect> rects);

  const std::vector<Rect>& rects() const { return rects_; }
  bool empty() const { return rects_.empty(); }

  friend bool operator==(const Region&, const Region&) = default;

 private:
  friend class RegionAccess;
  struct Trusted {};
  Region(Trusted, std::vector<Rect> rects) : rects_(std::move(rects)) {}

  std::vector<Rect> rects_;
};

std::ostream& operator<<(std::ostream& os, const Region& r);

/// Throws Error("empty-region") on an empty region.
Bounds bounds(const Region& r);
inline Rect bounding_box(const Region& r) { return bounds(r).box(); }

bool contains(const Region& r, const Point& p);
Region intersection(const Region& a, const Region& b);
Region intersection(const Region& a, const Rect& q);
Region union_of(const Region& a, const Region& b);
bool intersects(const Region& a, const Region& b);
bool intersects(const Region& a, const Rect& q);
/// Closed rectangle q is a subset of r.
bool contains_rect(const Region& r, const Rect& q);
bool contains_region(const Region& outer, const Region& inner);
bool is_connected(const Region& r);

/// (x, y) -> (a x + c, b y + d) with a, b nonzero.
class Transform {
 public:
  Transform() = default;
  /// Throws Error("bad-transform") when a or b is zero.
  Transform(Rat a, Rat b, Rat c, Rat d);

  static Transform identity() { return {}; }
  /// (x, y) -> (-x, y)
  static Transform horizontal_reflection() { return {Rat(-1), Rat(1), Rat(0), Rat(0)}; }
  /// The unique positive transform sending rectangle `from` onto `to`.
  /// Both must have nonzero width and height.
  static Transform matching(const Rect& from, const Rect& to);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const Rat& c() const { return c_; }
  const Rat& d() const { return d_; }

  Rat map_x(const Rat& x) const { return a_ * x + c_; }
  Rat map_y(const Rat& y) const { return b_ * y + d_; }
  Point operator()(const Point& p) const { return {map_x(p.x), map_y(p.y)}; }
  Rect operator()(const Rect& r) const;
  Region operator()(const Region& r) const;
  Bounds operator()(const Bounds& bd) const;

  friend bool operator==(const Transform&, const Transform&) = default;

 private:
  Rat a_{1};
  Rat b_{1};
  Rat c_{0};
  Rat d_{0};
};

inline Region apply(const Transform& t, const Region& r) { return t(r); }
inline Rect apply(const Transform& t, const Rect& r) { return t(r); }

/// Applies `inner` first, then `outer`.
Transform compose(const Transform& outer, const Transform& inner);
Transform invert(const Transform& t);
inline bool is_positive(const Transform& t) { return t.a().sign() > 0 && t.b().sign() > 0; }

}  // namespace burling
