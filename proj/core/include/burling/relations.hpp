#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "burling/ograph.hpp"
#include "burling/shapes.hpp"

namespace burling {

/// box(a) ⊆ Ter(b)
bool prec(const Shape& a, const Shape& b);
/// a ↷ b: distinct, intersecting, l(b) <= l(a) < r(b) < r(a),
/// b(b) < b(a) < t(a) < t(b), and the left edge set of a lies in Ter(b).
bool arrow(const Shape& a, const Shape& b);
bool comparable(const Shape& a, const Shape& b);

struct Family {
  std::vector<Shape> shapes;
  /// The generating shape as given (before strongification), for C6.
  std::optional<Shape> base;

  friend bool operator==(const Family&, const Family&) = default;
};

/// Intersection, ↷ and ≺ over all ordered pairs of a shape list.
struct PairwiseRelations {
  size_t n = 0;
  std::vector<char> meets;
  std::vector<char> arrow;
  std::vector<char> prec;

  static PairwiseRelations compute(const std::vector<Shape>& shapes);
  bool meets_at(size_t i, size_t j) const { return meets[i * n + j] != 0; }
  bool arrow_at(size_t i, size_t j) const { return arrow[i * n + j] != 0; }
  bool prec_at(size_t i, size_t j) const { return prec[i * n + j] != 0; }
};

struct ConstraintResult {
  bool checked = false;
  bool pass = true;
  size_t violation_count = 0;
  /// At most kMaxReported tuples of shape ids.
  std::vector<std::vector<std::string>> violations;
};

struct ConstraintReport {
  static constexpr size_t kMaxReported = 32;
  std::array<ConstraintResult, 6> constraints;  // C1..C6
  bool sampled = false;

  bool pass() const;
  const ConstraintResult& c(int k) const { return constraints[static_cast<size_t>(k - 1)]; }
};

struct CheckOptions {
  bool check_c6 = true;
  /// When set, evaluate this many random pairs and triples instead of all.
  std::optional<size_t> samples;
  uint64_t seed = 1;
};

/// Throws Error("no-base") when C6 is requested without a base shape.
ConstraintReport check_constraints(const Family& f, const CheckOptions& opts = {});

/// Vertices are the shape ids; arcs are the ↷ pairs. Throws Error("not-c1")
/// when some intersecting pair is unoriented.
OGraph oriented_intersection_graph(const Family& f);

}  // namespace burling
