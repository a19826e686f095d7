#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "burling/relations.hpp"
#include "burling/shapes.hpp"

namespace burling {

struct Prob {
  Rect rect;
  std::string id;

  friend bool operator==(const Prob&, const Prob&) = default;
};

struct Provenance {
  int level = 1;
  std::string prob;  // prob whose root received the shape; empty at level 1
  Transform from_base;  // maps the strong base onto the shape

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct Scene {
  Family family;  // family.base holds the shape as given
  std::vector<Prob> probs;
  bool reflected = false;
  Shape strong;  // the strong base the family is built from
  SubterritoryCert sub;
  int level = 1;
  std::vector<Provenance> provenance;  // parallel to family.shapes

  Rect box() const;

  friend bool operator==(const Scene&, const Scene&) = default;
};

/// [l(E), r(bbox)] x [b(E), t(E)]. Throws Error("not-nested") unless E ⊆ bbox.
Prob prob_defined_by(const Rect& e, const Rect& bbox, std::string id = {});

Rect family_box(const std::vector<Shape>& shapes);

/// Indices of the shapes meeting p.
std::vector<size_t> neighbors(const Prob& p, const std::vector<Shape>& shapes);
/// [l(P), x0] x [b(P), t(P)] with x0 halfway between l(P) and the leftmost
/// point at which a shape meets P.
std::optional<Rect> find_root(const Prob& p, const std::vector<Shape>& shapes);

struct Stability {
  bool root = false;       // a root lies in every neighbor's territory
  bool disjoint = false;   // neighbors pairwise disjoint
  bool enclosed = false;   // b(A) < b(P), t(P) < t(A)
  bool crossing = false;   // every neighbor crosses P vertically
  bool stable() const { return root && disjoint && enclosed && crossing; }
};
Stability prob_stability(const Prob& p, const std::vector<Shape>& shapes);
inline bool is_stable_prob(const Prob& p, const std::vector<Shape>& shapes) {
  return prob_stability(p, shapes).stable();
}

struct BuildOptions {
  /// Full constraint and stability checks run on families up to this size.
  size_t verify_limit = 200;
  int max_k = 5;
};

/// Failures raise Error("construction-invariant-violated").
Scene gamma(const Scene& sc, const BuildOptions& opts = {});
Scene next_f(const Scene& sc, const BuildOptions& opts = {});
/// "frame": the boundary of [0,3]^2. "gamma": [0,1]x[0,3] ∪ [0,3]x[0,1].
/// Throws Error("bad-shape") for anything else.
Region named_shape(std::string_view name);

/// Throws Error("not-pouna") or Error("bad-k").
Scene burling_sequence(const Region& s, int k, const BuildOptions& opts = {});

/// Stability of every prob plus pairwise disjointness; failing prob ids.
std::vector<std::string> unstable_probs(const Scene& sc);
bool probs_disjoint(const std::vector<Prob>& probs);

}  // namespace burling
