#include "burling/burling_set.hpp"

#include <algorithm>
#include <numeric>

#include "burling/error.hpp"

namespace burling {

namespace {

struct Matrix {
  size_t n;
  std::vector<char> m;
  Matrix(size_t n_, const PairSet& s) : n(n_), m(n_ * n_, 0) {
    for (const auto& [u, v] : s) {
      if (u >= n || v >= n) throw Error("bad-graph", "relation endpoint out of range");
      m[u * n + v] = 1;
    }
  }
  bool operator()(size_t u, size_t v) const { return m[u * n + v] != 0; }
};

// Some directed cycle of the relation (loops included), or empty.
std::vector<size_t> find_cycle(size_t n, const Matrix& a) {
  std::vector<int> state(n, 0);
  std::vector<size_t> stack;
  std::vector<size_t> cycle;
  auto dfs = [&](auto&& self, size_t u) -> bool {
    state[u] = 1;
    stack.push_back(u);
    for (size_t v = 0; v < n; ++v) {
      if (!a(u, v)) continue;
      if (state[v] == 1) {
        auto it = std::find(stack.begin(), stack.end(), v);
        cycle.assign(it, stack.end());
        return true;
      }
      if (state[v] == 0 && self(self, v)) return true;
    }
    stack.pop_back();
    state[u] = 2;
    return false;
  };
  for (size_t u = 0; u < n; ++u)
    if (state[u] == 0 && dfs(dfs, u)) break;
  return cycle;
}

std::vector<std::string> ids_of(const std::vector<std::string>& el, std::initializer_list<size_t> idx) {
  std::vector<std::string> out;
  for (size_t i : idx) out.push_back(el[i]);
  return out;
}

Violation cycle_violation(const std::vector<std::string>& el, const std::vector<size_t>& cyc) {
  Violation v{"arrow-cycle", {}};
  for (size_t i : cyc) v.ids.push_back(el[i]);
  return v;
}

// DPLL over the variables p(u,v) = "u ≺ v", u != v.
class PrecSolver {
 public:
  PrecSolver(const OGraph& g, uint64_t budget) : n_(g.size()), budget_(budget), arc_(n_, {}) {
    for (const auto& [u, v] : g.arcs) arc_.m[u * n_ + v] = 1;
    value_.assign(n_ * n_, -1);
    occ_.resize(n_ * n_);
    build_clauses();
    build_order();
  }

  Verdict solve() {
    for (const auto& c : clauses_)
      if (c.size() == 1 && !enqueue(c[0])) return Verdict::rejected;
    if (!propagate()) return Verdict::rejected;
    return search();
  }

  uint64_t nodes() const { return nodes_; }

  PairSet witness() const {
    PairSet s;
    for (size_t u = 0; u < n_; ++u)
      for (size_t v = 0; v < n_; ++v)
        if (u != v && value_[var(u, v)] == 1) s.emplace(u, v);
    return s;
  }

 private:
  // literal = 2 * var + negated
  size_t var(size_t u, size_t v) const { return u * n_ + v; }
  size_t pos(size_t u, size_t v) const { return 2 * var(u, v); }
  size_t neg(size_t u, size_t v) const { return 2 * var(u, v) + 1; }

  int lit_value(size_t lit) const {
    const int v = value_[lit / 2];
    if (v < 0) return -1;
    return (lit & 1) ? 1 - v : v;
  }

  void add(std::vector<size_t> c) {
    const size_t id = clauses_.size();
    for (size_t lit : c) occ_[lit / 2].push_back(id);
    clauses_.push_back(std::move(c));
  }

  void build_clauses() {
    const size_t n = n_;
    for (size_t u = 0; u < n; ++u)
      for (size_t v = u + 1; v < n; ++v) add({neg(u, v), neg(v, u)});
    for (size_t u = 0; u < n; ++u)
      for (size_t v = 0; v < n; ++v)
        for (size_t w = 0; w < n; ++w)
          if (u != v && v != w && u != w) add({neg(u, v), neg(v, w), pos(u, w)});
    // A1
    for (size_t x = 0; x < n; ++x)
      for (size_t y = 0; y < n; ++y)
        for (size_t z = y + 1; z < n; ++z)
          if (x != y && x != z) add({neg(x, y), neg(x, z), pos(y, z), pos(z, y)});
    for (size_t x = 0; x < n; ++x)
      for (size_t y = 0; y < n; ++y) {
        if (!arc_(x, y)) continue;
        // A2
        for (size_t z = y + 1; z < n; ++z)
          if (arc_(x, z)) add({pos(y, z), pos(z, y)});
        // A3
        add({neg(x, y)});
        for (size_t z = 0; z < n; ++z)
          if (z != x && z != y) add({neg(x, z), pos(y, z)});
        // A4
        add({neg(y, x)});
        for (size_t z = 0; z < n; ++z)
          if (z != x && z != y && !arc_(x, z)) add({neg(y, z), pos(x, z)});
      }
  }

  void build_order() {
    std::vector<std::vector<char>> nb(n_, std::vector<char>(n_, 0));
    for (size_t u = 0; u < n_; ++u)
      for (size_t v = 0; v < n_; ++v)
        if (arc_(u, v) || arc_(v, u)) nb[u][v] = 1;
    std::vector<std::pair<size_t, size_t>> pairs;
    std::vector<size_t> shared(n_ * n_, 0);
    for (size_t u = 0; u < n_; ++u)
      for (size_t v = 0; v < n_; ++v) {
        if (u == v) continue;
        pairs.emplace_back(u, v);
        for (size_t w = 0; w < n_; ++w) shared[var(u, v)] += nb[u][w] && nb[v][w];
      }
    std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
      return shared[var(a.first, a.second)] > shared[var(b.first, b.second)];
    });
    for (const auto& [u, v] : pairs) order_.push_back(var(u, v));
  }

  bool enqueue(size_t lit) {
    const int cur = lit_value(lit);
    if (cur == 1) return true;
    if (cur == 0) return false;
    value_[lit / 2] = (lit & 1) ? 0 : 1;
    trail_.push_back(lit / 2);
    return true;
  }

  bool propagate() {
    while (head_ < trail_.size()) {
      const size_t x = trail_[head_++];
      for (size_t cid : occ_[x]) {
        const auto& c = clauses_[cid];
        size_t open = 0;
        size_t last = 0;
        bool sat = false;
        for (size_t lit : c) {
          const int v = lit_value(lit);
          if (v == 1) {
            sat = true;
            break;
          }
          if (v < 0) {
            ++open;
            last = lit;
          }
        }
        if (sat) continue;
        if (open == 0) return false;
        if (open == 1) enqueue(last);
      }
    }
    return true;
  }

  void undo(size_t mark) {
    while (trail_.size() > mark) {
      value_[trail_.back()] = -1;
      trail_.pop_back();
    }
    head_ = mark;
  }

  Verdict search() {
    auto it = std::find_if(order_.begin(), order_.end(), [&](size_t v) { return value_[v] < 0; });
    if (it == order_.end()) return Verdict::accepted;
    const size_t v = *it;
    for (size_t lit : {2 * v + 1, 2 * v}) {
      if (nodes_ >= budget_) return Verdict::budget_exceeded;
      ++nodes_;
      const size_t mark = trail_.size();
      enqueue(lit);
      if (propagate()) {
        const Verdict r = search();
        if (r != Verdict::rejected) return r;
      }
      undo(mark);
    }
    return Verdict::rejected;
  }

  size_t n_;
  uint64_t budget_;
  Matrix arc_;
  std::vector<int> value_;
  std::vector<std::vector<size_t>> clauses_;
  std::vector<std::vector<size_t>> occ_;
  std::vector<size_t> order_;
  std::vector<size_t> trail_;
  size_t head_ = 0;
  uint64_t nodes_ = 0;
};

bool reaches(const std::vector<std::vector<size_t>>& out, size_t from, size_t to) {
  std::vector<char> seen(out.size(), 0);
  std::vector<size_t> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    const size_t u = stack.back();
    stack.pop_back();
    if (u == to) return true;
    for (size_t v : out[u])
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
  }
  return false;
}

}  // namespace

std::vector<Violation> check_axioms(const Triple& t) {
  const size_t n = t.elements.size();
  const Matrix p(n, t.prec);
  const Matrix a(n, t.arrow);
  const auto& el = t.elements;
  std::vector<Violation> out;

  for (size_t u = 0; u < n; ++u) {
    if (p(u, u)) out.push_back({"not-strict-order", ids_of(el, {u})});
    for (size_t v = u + 1; v < n; ++v)
      if (p(u, v) && p(v, u)) out.push_back({"not-strict-order", ids_of(el, {u, v})});
  }
  for (size_t u = 0; u < n; ++u)
    for (size_t v = 0; v < n; ++v)
      if (u != v && p(u, v))
        for (size_t w = 0; w < n; ++w)
          if (w != u && w != v && p(v, w) && !p(u, w)) out.push_back({"not-strict-order", ids_of(el, {u, v, w})});

  if (auto cyc = find_cycle(n, a); !cyc.empty()) out.push_back(cycle_violation(el, cyc));

  auto cmp = [&](size_t y, size_t z) { return p(y, z) || p(z, y); };
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y)
      for (size_t z = 0; z < n; ++z) {
        if (y < z && p(x, y) && p(x, z) && !cmp(y, z)) out.push_back({"A1", ids_of(el, {x, y, z})});
        if (y < z && a(x, y) && a(x, z) && !cmp(y, z)) out.push_back({"A2", ids_of(el, {x, y, z})});
        if (a(x, y) && p(x, z) && !p(y, z)) out.push_back({"A3", ids_of(el, {x, y, z})});
        if (a(x, y) && p(y, z) && !a(x, z) && !p(x, z)) out.push_back({"A4", ids_of(el, {x, y, z})});
      }
  return out;
}

Triple derive_triple(const Family& f) {
  CheckOptions opts;
  opts.check_c6 = false;
  const auto rep = check_constraints(f, opts);
  for (int k = 1; k <= 5; ++k)
    if (!rep.c(k).pass) throw Error("not-constrained", "C" + std::to_string(k));
  const auto rel = PairwiseRelations::compute(f.shapes);
  Triple t;
  for (const auto& s : f.shapes) t.elements.push_back(s.id());
  for (size_t i = 0; i < rel.n; ++i)
    for (size_t j = 0; j < rel.n; ++j) {
      if (rel.prec_at(i, j)) t.prec.emplace(i, j);
      if (rel.arrow_at(i, j)) t.arrow.emplace(i, j);
    }
  return t;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::accepted: return "accepted";
    case Verdict::rejected: return "rejected";
    case Verdict::budget_exceeded: return "budget-exceeded";
  }
  return "?";
}

Cert recognize_oriented(const OGraph& g, uint64_t budget) {
  g.validate();
  Cert cert;
  const size_t n = g.size();
  PairSet arcs(g.arcs.begin(), g.arcs.end());
  if (auto cyc = find_cycle(n, Matrix(n, arcs)); !cyc.empty()) {
    cert.violated = cycle_violation(g.vertices, cyc);
    return cert;
  }
  PrecSolver solver(g, budget);
  cert.verdict = solver.solve();
  cert.nodes = solver.nodes();
  if (cert.verdict == Verdict::accepted) {
    cert.witness_prec = solver.witness();
    if (!check_axioms({g.vertices, *cert.witness_prec, arcs}).empty())
      throw Error("internal-error", "recognizer witness fails the axioms");
  }
  return cert;
}

Cert recognize_unoriented(const Graph& g, uint64_t budget) {
  const auto edges = g.edges();
  std::vector<std::vector<size_t>> out(g.size());
  OGraph og{g.labels(), {}};
  Cert result;
  bool exhausted = false;

  auto rec = [&](auto&& self, size_t i) -> bool {
    if (i == edges.size()) {
      const Cert c = recognize_oriented(og, budget - result.nodes);
      result.nodes += c.nodes;
      if (c.verdict == Verdict::accepted) {
        result.verdict = Verdict::accepted;
        result.witness_prec = c.witness_prec;
        result.orientation = og;
        return true;
      }
      if (c.verdict == Verdict::budget_exceeded || result.nodes >= budget) {
        exhausted = true;
        return true;
      }
      return false;
    }
    const auto [u, v] = edges[i];
    for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
      if (reaches(out, b, a)) continue;
      out[a].push_back(b);
      og.arcs.emplace_back(a, b);
      const bool stop = self(self, i + 1);
      og.arcs.pop_back();
      out[a].pop_back();
      if (stop) return true;
    }
    return false;
  };
  rec(rec, 0);
  if (exhausted) result.verdict = Verdict::budget_exceeded;
  return result;
}

}  // namespace burling
