#pragma once

#include <optional>
#include <vector>

#include "burling/geometry.hpp"

namespace burling {

/// The grid cut out by a finite set of x- and y-coordinates.
///
/// Faces are addressed by half-indices: an even index 2i stands for the grid
/// coordinate xs[i], an odd index 2i+1 for the open interval (xs[i], xs[i+1]).
/// Every face is therefore a vertex, an open edge, or an open cell. Any
/// predicate built from rectangles whose sides lie on the grid is constant on
/// each face, so testing one representative point per face decides it exactly.
class Arrangement {
 public:
  Arrangement() = default;
  Arrangement(std::vector<Rat> xs, std::vector<Rat> ys);

  int cols() const { return xs_.empty() ? 0 : 2 * static_cast<int>(xs_.size()) - 1; }
  int rows() const { return ys_.empty() ? 0 : 2 * static_cast<int>(ys_.size()) - 1; }
  const std::vector<Rat>& xs() const { return xs_; }
  const std::vector<Rat>& ys() const { return ys_; }

  Rat x_rep(int hx) const;
  Rat y_rep(int hy) const;
  Point rep(int hx, int hy) const { return {x_rep(hx), y_rep(hy)}; }
  /// Closure of a face as a (possibly degenerate) rectangle.
  Rect face(int hx, int hy) const;

  /// Half-index of a coordinate that lies on the grid. Throws otherwise.
  int hx_of(const Rat& x) const;
  int hy_of(const Rat& y) const;

 private:
  std::vector<Rat> xs_;
  std::vector<Rat> ys_;
};

/// Collects coordinates and builds the arrangement of everything added.
class ArrangementBuilder {
 public:
  ArrangementBuilder& add(const Rect& r);
  ArrangementBuilder& add(const Region& r);
  ArrangementBuilder& add(const Point& p);
  Arrangement build() const;

 private:
  std::vector<Rat> xs_;
  std::vector<Rat> ys_;
};

struct Span {
  int lo = 0;
  int hi = -1;
  bool contains(int h) const { return lo <= h && h <= hi; }
};

/// Face-membership bitmap over an arrangement.
class Raster {
 public:
  Raster() = default;
  Raster(int cols, int rows) : cols_(cols), rows_(rows), cells_(static_cast<size_t>(cols) * rows, 0) {}
  /// Paints every face covered by the region. All rectangle sides must be on the grid.
  Raster(const Arrangement& arr, const Region& region);

  int cols() const { return cols_; }
  int rows() const { return rows_; }
  bool at(int hx, int hy) const { return cells_[index(hx, hy)] != 0; }
  void set(int hx, int hy, bool v = true) { cells_[index(hx, hy)] = v ? 1 : 0; }
  void paint(const Arrangement& arr, const Rect& r);
  bool any() const;

 private:
  size_t index(int hx, int hy) const { return static_cast<size_t>(hy) * cols_ + hx; }
  int cols_ = 0;
  int rows_ = 0;
  std::vector<char> cells_;
};

Span x_span(const Arrangement& arr, const Rect& r);
Span y_span(const Arrangement& arr, const Rect& r);

/// Faces of Ter(shape): inside the shape's box, off the shape, with a shape
/// face strictly to the right in the same row.
Raster territory_raster(const Arrangement& arr, const Raster& shape, const Rect& shape_box);

/// Connected-component label per face (-1 for faces not set). Faces are
/// adjacent when their half-indices differ by one in a single axis, which for
/// closed rectilinear sets is exactly path-connectivity.
std::vector<int> component_labels(const Raster& r, int* count = nullptr);

/// Shortest face path inside `r` from any face in row `from_row` to any face in
/// row `to_row` (or columns, when `vertical` is false).
std::optional<std::vector<std::pair<int, int>>> face_path(const Raster& r, bool vertical,
                                                          int from, int to);

}  // namespace burling
