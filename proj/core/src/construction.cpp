#include "burling/construction.hpp"

#include <algorithm>

#include "burling/error.hpp"

namespace burling {

namespace {

[[noreturn]] void violated(const std::string& what) { throw Error("construction-invariant-violated", what); }

std::string shape_id(size_t i) { return "s" + std::to_string(i); }
std::string prob_id(size_t i) { return "p" + std::to_string(i); }

void verify_family(const Scene& sc, const BuildOptions& opts, const char* stage) {
  if (sc.family.shapes.size() > opts.verify_limit) return;
  if (!probs_disjoint(sc.probs)) violated(std::string(stage) + ": probs overlap");
  if (auto bad = unstable_probs(sc); !bad.empty()) violated(std::string(stage) + ": unstable prob " + bad.front());
  const auto rep = check_constraints(sc.family);
  for (int k = 1; k <= 6; ++k)
    if (!rep.c(k).pass) violated(std::string(stage) + ": C" + std::to_string(k));
}

}  // namespace

Rect Scene::box() const { return family_box(family.shapes); }

Prob prob_defined_by(const Rect& e, const Rect& bbox, std::string id) {
  if (!bbox.contains(e)) throw Error("not-nested");
  return {Rect{e.xlo, bbox.xhi, e.ylo, e.yhi}, std::move(id)};
}

Rect family_box(const std::vector<Shape>& shapes) {
  if (shapes.empty()) throw Error("empty-region", "empty family");
  Rect b = shapes.front().box();
  for (const auto& s : shapes) b = hull(b, s.box());
  return b;
}

std::vector<size_t> neighbors(const Prob& p, const std::vector<Shape>& shapes) {
  std::vector<size_t> out;
  for (size_t i = 0; i < shapes.size(); ++i)
    if (shapes[i].box().intersects(p.rect) && intersects(shapes[i].region(), p.rect)) out.push_back(i);
  return out;
}

std::optional<Rect> find_root(const Prob& p, const std::vector<Shape>& shapes) {
  Rat m = p.rect.xhi;
  for (size_t i : neighbors(p, shapes)) {
    const Region part = intersection(shapes[i].region(), p.rect);
    for (const auto& r : part.rects()) m = std::min(m, r.xlo);
  }
  if (m <= p.rect.xlo) return std::nullopt;
  return Rect{p.rect.xlo, midpoint(p.rect.xlo, m), p.rect.ylo, p.rect.yhi};
}

Stability prob_stability(const Prob& p, const std::vector<Shape>& shapes) {
  Stability st;
  const auto nb = neighbors(p, shapes);
  if (auto root = find_root(p, shapes))
    st.root = std::all_of(nb.begin(), nb.end(), [&](size_t i) { return rect_in_territory(*root, shapes[i]); });
  st.disjoint = true;
  for (size_t a = 0; a < nb.size(); ++a)
    for (size_t b = a + 1; b < nb.size(); ++b)
      if (intersects(shapes[nb[a]].region(), shapes[nb[b]].region())) st.disjoint = false;
  st.enclosed = std::all_of(nb.begin(), nb.end(), [&](size_t i) {
    const auto& bd = shapes[i].bounds();
    return bd.b < p.rect.ylo && p.rect.yhi < bd.t;
  });
  st.crossing = std::all_of(nb.begin(), nb.end(), [&](size_t i) { return crosses_vertically(shapes[i], p.rect); });
  return st;
}

std::vector<std::string> unstable_probs(const Scene& sc) {
  std::vector<std::string> out;
  for (const auto& p : sc.probs)
    if (!is_stable_prob(p, sc.family.shapes)) out.push_back(p.id);
  return out;
}

bool probs_disjoint(const std::vector<Prob>& probs) {
  std::vector<const Rect*> order;
  for (const auto& p : probs) order.push_back(&p.rect);
  std::sort(order.begin(), order.end(), [](const Rect* a, const Rect* b) { return a->ylo < b->ylo; });
  for (size_t i = 0; i < order.size(); ++i)
    for (size_t j = i + 1; j < order.size() && order[j]->ylo <= order[i]->yhi; ++j)
      if (order[i]->intersects(*order[j])) return false;
  return true;
}

Scene gamma(const Scene& sc, const BuildOptions& opts) {
  const auto& f = sc.family.shapes;
  const Rect box_f = sc.box();
  const Shape& s = sc.strong;
  const Rect& e = sc.sub.rect;
  const Bounds& sb = s.bounds();

  Scene out = sc;
  std::vector<Rect> e_p;
  std::vector<Rect> lower;
  std::vector<std::vector<size_t>> nb_before;
  const Rat k = Rat(2) * sb.width() / (e.xlo - sb.l);
  for (const auto& p : sc.probs) {
    const Rect& r = p.rect;
    const Rect up{r.xlo, r.xhi, (r.ylo + Rat(2) * r.yhi) / Rat(3), r.yhi};
    lower.push_back({r.xlo, r.xhi, r.ylo, (Rat(2) * r.ylo + r.yhi) / Rat(3)});
    const Transform t1 = Transform::matching(s.box(), up);
    const Transform t2(k, Rat(1), up.xlo * (Rat(1) - k), Rat(0));
    const Transform tp = compose(t2, t1);
    if (!is_positive(tp)) violated("T_" + p.id + " is not positive");
    e_p.push_back(tp(e));
    if (!(e_p.back().xlo > box_f.xhi)) violated("E_" + p.id + " not right of box(F)");
    out.family.shapes.push_back(s.transformed(tp, shape_id(out.family.shapes.size())));
    out.provenance.push_back({sc.level + 1, p.id, tp});
    nb_before.push_back(neighbors(p, f));
  }

  const Rect box2 = out.box();
  out.probs.clear();
  for (size_t i = 0; i < sc.probs.size(); ++i) {
    out.probs.push_back(prob_defined_by(e_p[i], box2, sc.probs[i].id + ".1"));
    out.probs.push_back(prob_defined_by(lower[i], box2, sc.probs[i].id + ".2"));
  }

  // Properties of the inserted shapes relative to F and the other probs.
  const auto& g = out.family.shapes;
  const size_t n0 = f.size();
  for (size_t i = 0; i < sc.probs.size(); ++i) {
    const Shape& sp = g[n0 + i];
    const std::string& pid = sc.probs[i].id;
    for (size_t j = 0; j < sc.probs.size(); ++j) {
      if (i == j) continue;
      const Rect& q = sc.probs[j].rect;
      if (sp.box().intersects(q) && intersects(sp.region(), q)) violated("S_" + pid + " meets another prob");
      if (intersects(sp.region(), g[n0 + j].region())) violated("S_" + pid + " meets another inserted shape");
      if (region_meets_territory(Region(q), sp)) violated("Ter(S_" + pid + ") meets another prob");
    }
    const auto n1 = neighbors(out.probs[2 * i], g);
    if (n1 != std::vector<size_t>{n0 + i}) violated("N(" + out.probs[2 * i].id + ") is not {S_P}");
    for (size_t a : neighbors(out.probs[2 * i + 1], g))
      if (!std::binary_search(nb_before[i].begin(), nb_before[i].end(), a))
        violated("N(" + out.probs[2 * i + 1].id + ") not within N(P)");
    for (size_t a = 0; a < g.size(); ++a) {
      if (a == n0 + i) continue;
      const bool in_np = a < n0 && std::binary_search(nb_before[i].begin(), nb_before[i].end(), a);
      if (arrow(sp, g[a]) != in_np) violated("S_" + pid + " arrows disagree with N(P)");
      if (g[a].box().intersects(sp.box()) && arrow(g[a], sp)) violated("an arrow enters S_" + pid);
    }
  }
  verify_family(out, opts, "gamma");
  return out;
}

Scene next_f(const Scene& sc, const BuildOptions& opts) {
  const Scene g0 = gamma(sc, opts);
  const Rect b0 = g0.box();
  const Rect box_f = sc.box();

  Scene out = sc;
  out.probs.clear();
  for (const auto& p : sc.probs) {
    const auto root = find_root(p, sc.family.shapes);
    if (!root) violated(p.id + " has no root");
    const Transform tp = Transform::matching(b0, *root);
    for (size_t i = 0; i < g0.family.shapes.size(); ++i) {
      out.family.shapes.push_back(g0.family.shapes[i].transformed(tp, shape_id(out.family.shapes.size())));
      out.provenance.push_back({sc.level + 1, p.id, compose(tp, g0.provenance[i].from_base)});
    }
    for (const auto& q : g0.probs) out.probs.push_back(prob_defined_by(tp(q.rect), box_f, prob_id(out.probs.size())));
  }
  out.level = sc.level + 1;
  if (out.box() != box_f) violated("bounding box moved");
  verify_family(out, opts, "nextF");
  return out;
}

Region named_shape(std::string_view name) {
  const Rat z(0), one(1), three(3);
  if (name == "frame")
    return Region({Rect{z, three, z, z}, Rect{z, three, three, three}, Rect{z, z, z, three}, Rect{three, three, z, three}});
  if (name == "gamma") return Region({Rect{z, one, z, three}, Rect{z, three, z, one}});
  throw Error("bad-shape", std::string(name));
}

Scene burling_sequence(const Region& s, int k, const BuildOptions& opts) {
  if (!is_pouna(s)) throw Error("not-pouna");
  if (k < 1 || k > opts.max_k) throw Error("bad-k", std::to_string(k));
  const Shape base("base", s);
  auto [st, reflected] = strongify(base);
  const Shape strong = st.transformed(Transform::identity(), shape_id(0));
  auto sub = find_subterritory(strong);
  Prob p = prob_defined_by(sub.rect, strong.box(), prob_id(0));
  Scene sc{Family{{strong}, base}, {p}, reflected, strong, sub, 1, {Provenance{}}};
  verify_family(sc, opts, "F1");
  for (int i = 1; i < k; ++i) sc = next_f(sc, opts);
  return sc;
}

}  // namespace burling
