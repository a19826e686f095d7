#include "burling/arrangement.hpp"

#include <algorithm>
#include <deque>

#include "burling/error.hpp"

namespace burling {

namespace {

void sort_unique(std::vector<Rat>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

Rat rep_of(const std::vector<Rat>& grid, int h) {
  const auto i = static_cast<size_t>(h / 2);
  if (h % 2 == 0) return grid[i];
  return midpoint(grid[i], grid[i + 1]);
}

int half_index_of(const std::vector<Rat>& grid, const Rat& v) {
  const auto it = std::lower_bound(grid.begin(), grid.end(), v);
  if (it == grid.end() || *it != v) throw Error("internal-error", "coordinate not on arrangement grid");
  return 2 * static_cast<int>(it - grid.begin());
}

}  // namespace

Arrangement::Arrangement(std::vector<Rat> xs, std::vector<Rat> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
  sort_unique(xs_);
  sort_unique(ys_);
}

Rat Arrangement::x_rep(int hx) const { return rep_of(xs_, hx); }
Rat Arrangement::y_rep(int hy) const { return rep_of(ys_, hy); }

Rect Arrangement::face(int hx, int hy) const {
  const auto xi = static_cast<size_t>(hx / 2);
  const auto yi = static_cast<size_t>(hy / 2);
  return Rect{xs_[xi], xs_[xi + (hx % 2)], ys_[yi], ys_[yi + (hy % 2)]};
}

int Arrangement::hx_of(const Rat& x) const { return half_index_of(xs_, x); }
int Arrangement::hy_of(const Rat& y) const { return half_index_of(ys_, y); }

ArrangementBuilder& ArrangementBuilder::add(const Rect& r) {
  xs_.push_back(r.xlo);
  xs_.push_back(r.xhi);
  ys_.push_back(r.ylo);
  ys_.push_back(r.yhi);
  return *this;
}

ArrangementBuilder& ArrangementBuilder::add(const Region& r) {
  for (const auto& q : r.rects()) add(q);
  return *this;
}

ArrangementBuilder& ArrangementBuilder::add(const Point& p) {
  xs_.push_back(p.x);
  ys_.push_back(p.y);
  return *this;
}

Arrangement ArrangementBuilder::build() const { return Arrangement(xs_, ys_); }

Span x_span(const Arrangement& arr, const Rect& r) { return {arr.hx_of(r.xlo), arr.hx_of(r.xhi)}; }
Span y_span(const Arrangement& arr, const Rect& r) { return {arr.hy_of(r.ylo), arr.hy_of(r.yhi)}; }

Raster::Raster(const Arrangement& arr, const Region& region) : Raster(arr.cols(), arr.rows()) {
  for (const auto& r : region.rects()) paint(arr, r);
}

void Raster::paint(const Arrangement& arr, const Rect& r) {
  const Span sx = x_span(arr, r);
  const Span sy = y_span(arr, r);
  for (int hy = sy.lo; hy <= sy.hi; ++hy)
    for (int hx = sx.lo; hx <= sx.hi; ++hx) set(hx, hy);
}

bool Raster::any() const {
  return std::any_of(cells_.begin(), cells_.end(), [](char c) { return c != 0; });
}

Raster territory_raster(const Arrangement& arr, const Raster& shape, const Rect& shape_box) {
  Raster ter(shape.cols(), shape.rows());
  const Span sx = x_span(arr, shape_box);
  const Span sy = y_span(arr, shape_box);
  for (int hy = sy.lo; hy <= sy.hi; ++hy) {
    int rightmost = -1;
    for (int hx = sx.hi; hx >= sx.lo; --hx) {
      if (shape.at(hx, hy)) {
        rightmost = hx;
        break;
      }
    }
    for (int hx = sx.lo; hx < rightmost; ++hx)
      if (!shape.at(hx, hy)) ter.set(hx, hy);
  }
  return ter;
}

std::vector<int> component_labels(const Raster& r, int* count) {
  const int cols = r.cols();
  const int rows = r.rows();
  std::vector<int> label(static_cast<size_t>(cols) * rows, -1);
  int next = 0;
  std::vector<std::pair<int, int>> stack;
  for (int sy = 0; sy < rows; ++sy) {
    for (int sx = 0; sx < cols; ++sx) {
      if (!r.at(sx, sy) || label[static_cast<size_t>(sy) * cols + sx] >= 0) continue;
      label[static_cast<size_t>(sy) * cols + sx] = next;
      stack.emplace_back(sx, sy);
      while (!stack.empty()) {
        const auto [x, y] = stack.back();
        stack.pop_back();
        const int nbr[4][2] = {{x - 1, y}, {x + 1, y}, {x, y - 1}, {x, y + 1}};
        for (const auto& n : nbr) {
          const int nx = n[0];
          const int ny = n[1];
          if (nx < 0 || ny < 0 || nx >= cols || ny >= rows || !r.at(nx, ny)) continue;
          auto& l = label[static_cast<size_t>(ny) * cols + nx];
          if (l >= 0) continue;
          l = next;
          stack.emplace_back(nx, ny);
        }
      }
      ++next;
    }
  }
  if (count != nullptr) *count = next;
  return label;
}

std::optional<std::vector<std::pair<int, int>>> face_path(const Raster& r, bool vertical, int from,
                                                          int to) {
  const int cols = r.cols();
  const int rows = r.rows();
  const auto idx = [cols](int x, int y) { return static_cast<size_t>(y) * cols + x; };
  std::vector<long> parent(static_cast<size_t>(cols) * rows, -2);
  std::deque<std::pair<int, int>> queue;
  const int extent = vertical ? cols : rows;
  for (int i = 0; i < extent; ++i) {
    const int x = vertical ? i : from;
    const int y = vertical ? from : i;
    if (x < 0 || y < 0 || x >= cols || y >= rows || !r.at(x, y)) continue;
    parent[idx(x, y)] = -1;
    queue.emplace_back(x, y);
  }
  while (!queue.empty()) {
    const auto [x, y] = queue.front();
    queue.pop_front();
    if ((vertical ? y : x) == to) {
      std::vector<std::pair<int, int>> path;
      long cur = static_cast<long>(idx(x, y));
      while (cur >= 0) {
        path.emplace_back(static_cast<int>(cur % cols), static_cast<int>(cur / cols));
        cur = parent[static_cast<size_t>(cur)];
      }
      std::reverse(path.begin(), path.end());
      return path;
    }
    const int nbr[4][2] = {{x - 1, y}, {x + 1, y}, {x, y - 1}, {x, y + 1}};
    for (const auto& n : nbr) {
      const int nx = n[0];
      const int ny = n[1];
      if (nx < 0 || ny < 0 || nx >= cols || ny >= rows || !r.at(nx, ny)) continue;
      if (parent[idx(nx, ny)] != -2) continue;
      parent[idx(nx, ny)] = static_cast<long>(idx(x, y));
      queue.emplace_back(nx, ny);
    }
  }
  return std::nullopt;
}

}  // namespace burling
