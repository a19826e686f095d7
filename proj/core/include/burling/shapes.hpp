#pragma once

#include <optional>
#include <string>
#include <vector>

#include "burling/geometry.hpp"

namespace burling {

/// Non-empty, connected, and not itself a (possibly degenerate) rectangle.
bool is_pouna(const Region& r);

/// A rectilinear Pouna set with an opaque label.
class Shape {
 public:
  /// Throws Error("not-pouna").
  Shape(std::string id, Region region);

  const std::string& id() const { return id_; }
  const Region& region() const { return region_; }
  const Bounds& bounds() const { return bounds_; }
  Rect box() const { return bounds_.box(); }

  /// T(this) under a new label; Pouna-ness is preserved by any transform.
  Shape transformed(const Transform& t, std::string id) const;

  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  struct Trusted {};
  Shape(Trusted, std::string id, Region region);

  std::string id_;
  Region region_;
  Bounds bounds_;
};

Shape reflect(const Shape& s);

// Territory: points of box(s) off s with a point of s strictly to their right.
bool ter_member(const Point& p, const Shape& s);
bool region_in_territory(const Region& q, const Shape& s);
bool rect_in_territory(const Rect& q, const Shape& s);
bool region_meets_territory(const Region& q, const Shape& s);

bool is_strong(const Shape& s);

struct Strongified {
  Shape shape;
  bool reflected;
};
/// s itself when strong, otherwise its horizontal reflection (which then is
/// strong). Throws Error("internal-error") if neither is.
Strongified strongify(const Shape& s);

/// {(x, y) in s : x = l(s)}
Region left_edge_set(const Shape& s);

bool crosses_vertically(const Region& s, const Rect& r);
bool crosses_horizontally(const Region& s, const Rect& r);
inline bool crosses_vertically(const Shape& s, const Rect& r) { return crosses_vertically(s.region(), r); }
inline bool crosses_horizontally(const Shape& s, const Rect& r) { return crosses_horizontally(s.region(), r); }

/// Closed faces of a bottom-to-top path inside s ∩ r, if one exists.
std::optional<std::vector<Rect>> vertical_crossing_path(const Region& s, const Rect& r);

/// [r(E), r(R)] x [b(E), t(E)]. Throws Error("not-nested") unless E ⊆ R.
Rect right_extension(const Rect& e, const Rect& r);

struct SubterritoryCert {
  Rect rect;
  std::vector<Rect> crossing_witness;

  friend bool operator==(const SubterritoryCert&, const SubterritoryCert&) = default;
};

bool is_subterritory(const Rect& e, const Shape& s);
/// Throws Error("not-strong"), or Error("internal-error") if no candidate
/// validates (which would mean a geometry bug).
SubterritoryCert find_subterritory(const Shape& s);
/// Checks the rectangle and re-walks the witness face chain.
bool validate(const SubterritoryCert& cert, const Shape& s);

/// Territory as row runs of arrangement faces, with per-side openness. Only
/// used for drawing.
struct TerritoryPiece {
  Rect rect;
  bool open_left;
  bool open_right;
  bool open_bottom;
  bool open_top;
};
std::vector<TerritoryPiece> materialize_territory(const Shape& s);

}  // namespace burling
