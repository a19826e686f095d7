#include "burling/relations.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "burling/error.hpp"

namespace burling {

namespace {

bool arrow_bounds(const Bounds& a, const Bounds& b) {
  return b.l <= a.l && a.l < b.r && b.r < a.r && b.b < a.b && a.b < a.t && a.t < b.t;
}

bool arrow_given_meet(const Shape& a, const Shape& b) {
  return arrow_bounds(a.bounds(), b.bounds()) && region_in_territory(left_edge_set(a), b);
}

bool meets(const Shape& a, const Shape& b) {
  return a.box().intersects(b.box()) && intersects(a.region(), b.region());
}

void record(ConstraintResult& r, std::vector<std::string> ids) {
  r.pass = false;
  ++r.violation_count;
  if (r.violations.size() < ConstraintReport::kMaxReported) r.violations.push_back(std::move(ids));
}

// Lazily evaluated relations, shared by the exact and sampled checkers.
class LazyRelations {
 public:
  explicit LazyRelations(const std::vector<Shape>& s) : s_(s), n_(s.size()) {
    meets_.assign(n_ * n_, -1);
    arrow_.assign(n_ * n_, -1);
    prec_.assign(n_ * n_, -1);
    inside_.assign(n_ * n_, -1);
  }

  bool meets_at(size_t i, size_t j) {
    if (i == j) return true;
    return memo(meets_, i, j, [&] { return meets(s_[i], s_[j]); });
  }
  bool arrow_at(size_t i, size_t j) {
    if (i == j) return false;
    return memo(arrow_, i, j, [&] { return meets_at(i, j) && arrow_given_meet(s_[i], s_[j]); });
  }
  bool prec_at(size_t i, size_t j) {
    if (i == j) return false;
    return memo(prec_, i, j, [&] { return prec(s_[i], s_[j]); });
  }
  // s_i ⊆ Ter(s_j)
  bool inside_ter(size_t i, size_t j) {
    if (i == j) return false;
    return memo(inside_, i, j, [&] {
      return s_[j].box().contains(s_[i].box()) && region_in_territory(s_[i].region(), s_[j]);
    });
  }
  bool meets_ter(size_t i, size_t j) { return region_meets_territory(s_[i].region(), s_[j]); }

 private:
  template <class F>
  bool memo(std::vector<signed char>& m, size_t i, size_t j, F&& f) {
    auto& v = m[i * n_ + j];
    if (v < 0) v = f() ? 1 : 0;
    return v != 0;
  }

  const std::vector<Shape>& s_;
  size_t n_;
  std::vector<signed char> meets_;
  std::vector<signed char> arrow_;
  std::vector<signed char> prec_;
  std::vector<signed char> inside_;
};

void check_pair(LazyRelations& rel, const std::vector<Shape>& s, size_t a, size_t b,
                ConstraintReport& rep) {
  if (a == b) return;
  if (rel.meets_at(a, b)) {
    if (a < b && !rel.arrow_at(a, b) && !rel.arrow_at(b, a))
      record(rep.constraints[0], {s[a].id(), s[b].id()});
  } else if (s[a].box().intersects(s[b].box()) && !rel.prec_at(a, b) && rel.meets_ter(a, b)) {
    record(rep.constraints[1], {s[a].id(), s[b].id()});
  }
}

void check_c3(LazyRelations& rel, const std::vector<Shape>& s, size_t a, size_t b, size_t c,
              ConstraintReport& rep) {
  if (a == b || c == a || c == b || !rel.meets_at(a, b)) return;
  if (rel.inside_ter(c, a) && rel.inside_ter(c, b))
    record(rep.constraints[2], {s[a].id(), s[b].id(), s[c].id()});
}

void check_c4(LazyRelations& rel, const std::vector<Shape>& s, size_t a, size_t b, size_t c,
              ConstraintReport& rep) {
  if (rel.prec_at(a, b) && rel.arrow_at(a, c) && rel.arrow_at(b, c))
    record(rep.constraints[3], {s[a].id(), s[b].id(), s[c].id()});
}

void check_c6(const Family& f, ConstraintReport& rep, const std::vector<size_t>& which) {
  auto& res = rep.constraints[5];
  res.checked = true;
  const Shape target = strongify(*f.base).shape;
  const Bounds& tb = target.bounds();
  for (size_t i : which) {
    const Shape& a = f.shapes[i];
    const Bounds& ab = a.bounds();
    const Rat sa = ab.width() / tb.width();
    const Rat sb = ab.height() / tb.height();
    const Transform t(sa, sb, ab.l - sa * tb.l, ab.b - sb * tb.b);
    if (t(target.region()) != a.region()) record(res, {a.id()});
  }
}

}  // namespace

bool prec(const Shape& a, const Shape& b) {
  return b.box().contains(a.box()) && rect_in_territory(a.box(), b);
}

bool arrow(const Shape& a, const Shape& b) {
  return a.region() != b.region() && meets(a, b) && arrow_given_meet(a, b);
}

bool comparable(const Shape& a, const Shape& b) {
  return arrow(a, b) || arrow(b, a) || prec(a, b) || prec(b, a);
}

PairwiseRelations PairwiseRelations::compute(const std::vector<Shape>& shapes) {
  PairwiseRelations r;
  r.n = shapes.size();
  r.meets.assign(r.n * r.n, 0);
  r.arrow.assign(r.n * r.n, 0);
  r.prec.assign(r.n * r.n, 0);
  for (size_t i = 0; i < r.n; ++i) {
    for (size_t j = 0; j < r.n; ++j) {
      if (i == j) continue;
      const Shape& a = shapes[i];
      const Shape& b = shapes[j];
      if (!a.box().intersects(b.box())) continue;
      if (i < j && intersects(a.region(), b.region())) r.meets[i * r.n + j] = r.meets[j * r.n + i] = 1;
      if (r.meets_at(i, j) && arrow_given_meet(a, b)) r.arrow[i * r.n + j] = 1;
      r.prec[i * r.n + j] = burling::prec(a, b) ? 1 : 0;
    }
  }
  return r;
}

bool ConstraintReport::pass() const {
  return std::all_of(constraints.begin(), constraints.end(),
                     [](const ConstraintResult& c) { return c.pass; });
}

ConstraintReport check_constraints(const Family& f, const CheckOptions& opts) {
  if (opts.check_c6 && !f.base) throw Error("no-base");
  ConstraintReport rep;
  for (int k = 0; k < 5; ++k) rep.constraints[static_cast<size_t>(k)].checked = true;
  const auto& s = f.shapes;
  const size_t n = s.size();
  LazyRelations rel(s);

  if (opts.samples) {
    rep.sampled = true;
    if (n < 2) {
      if (opts.check_c6) check_c6(f, rep, std::vector<size_t>(n, 0));
      return rep;
    }
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<size_t> pick(0, n - 1);
    std::vector<size_t> touched;
    for (size_t k = 0; k < *opts.samples; ++k) {
      const size_t a = pick(rng);
      const size_t b = pick(rng);
      check_pair(rel, s, a, b, rep);
      check_pair(rel, s, b, a, rep);
      touched.push_back(a);
    }
    if (n >= 3) {
      for (size_t k = 0; k < *opts.samples; ++k) {
        const size_t a = pick(rng);
        const size_t b = pick(rng);
        const size_t c = pick(rng);
        if (a == b || b == c || a == c) continue;
        check_c3(rel, s, a, b, c, rep);
        check_c4(rel, s, a, b, c, rep);
        if (rel.meets_at(a, b) && rel.meets_at(b, c) && rel.meets_at(a, c))
          record(rep.constraints[4], {s[a].id(), s[b].id(), s[c].id()});
      }
    }
    if (opts.check_c6) {
      std::sort(touched.begin(), touched.end());
      touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
      check_c6(f, rep, touched);
    }
    return rep;
  }

  std::vector<std::vector<size_t>> nbrs(n);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b)
      if (rel.meets_at(a, b)) {
        nbrs[a].push_back(b);
        nbrs[b].push_back(a);
      }

  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) check_pair(rel, s, a, b, rep);

  // C3: no C inside Ter(A) ∩ Ter(B) for an intersecting pair A, B.
  for (size_t a = 0; a < n; ++a)
    for (size_t b : nbrs[a])
      if (a < b)
        for (size_t c = 0; c < n; ++c) check_c3(rel, s, a, b, c, rep);

  // C4: among the ↷-sources of each C, no A ≺ B.
  for (size_t c = 0; c < n; ++c) {
    std::vector<size_t> sources;
    for (size_t a : nbrs[c])
      if (rel.arrow_at(a, c)) sources.push_back(a);
    for (size_t a : sources)
      for (size_t b : sources)
        if (a != b) check_c4(rel, s, a, b, c, rep);
  }

  // C5: triangle-free intersection graph.
  for (size_t a = 0; a < n; ++a)
    for (size_t b : nbrs[a])
      if (a < b)
        for (size_t c : nbrs[b])
          if (b < c && rel.meets_at(a, c)) record(rep.constraints[4], {s[a].id(), s[b].id(), s[c].id()});

  if (opts.check_c6) {
    std::vector<size_t> all(n);
    for (size_t i = 0; i < n; ++i) all[i] = i;
    check_c6(f, rep, all);
  }
  return rep;
}

OGraph oriented_intersection_graph(const Family& f) {
  const auto rel = PairwiseRelations::compute(f.shapes);
  OGraph g;
  for (const auto& s : f.shapes) g.vertices.push_back(s.id());
  for (size_t i = 0; i < rel.n; ++i) {
    for (size_t j = i + 1; j < rel.n; ++j) {
      if (!rel.meets_at(i, j)) continue;
      const bool ij = rel.arrow_at(i, j);
      const bool ji = rel.arrow_at(j, i);
      if (!ij && !ji) throw Error("not-c1", f.shapes[i].id() + " " + f.shapes[j].id());
    }
  }
  for (size_t i = 0; i < rel.n; ++i)
    for (size_t j = 0; j < rel.n; ++j)
      if (rel.arrow_at(i, j)) g.arcs.emplace_back(i, j);
  return g;
}

}  // namespace burling
