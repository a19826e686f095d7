#include "burling/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "burling/error.hpp"
#include "burling/ograph.hpp"

namespace burling {

Graph::Graph(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) throw Error("bad-vertex", "duplicate label");
  adj_.assign(size() * size(), 0);
  nbrs_.resize(size());
}

size_t Graph::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error("bad-vertex", label);
  return static_cast<size_t>(it - labels_.begin());
}

void Graph::add_edge(size_t u, size_t v) {
  if (u >= size() || v >= size() || u == v) throw Error("bad-edge");
  if (adjacent(u, v)) return;
  adj_[u * size() + v] = adj_[v * size() + u] = 1;
  nbrs_[u].push_back(v);
  nbrs_[v].push_back(u);
  ++edges_;
}

std::vector<std::pair<size_t, size_t>> Graph::edges() const {
  std::vector<std::pair<size_t, size_t>> out;
  for (size_t u = 0; u < size(); ++u)
    for (size_t v = u + 1; v < size(); ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

bool triangle_free(const Graph& g) {
  for (size_t u = 0; u < g.size(); ++u)
    for (size_t v : g.neighbors(u))
      if (u < v)
        for (size_t w : g.neighbors(v))
          if (v < w && g.adjacent(u, w)) return false;
  return true;
}

namespace {

// Bron-Kerbosch with pivoting over plain index vectors.
void bk(const Graph& g, size_t depth, std::vector<size_t> p, std::vector<size_t> x, size_t& best) {
  if (p.empty()) {
    if (x.empty()) best = std::max(best, depth);
    return;
  }
  if (depth + p.size() <= best) return;
  size_t pivot = p.front();
  size_t most = 0;
  for (const auto& cand : {&p, &x})
    for (size_t u : *cand) {
      size_t c = 0;
      for (size_t v : p) c += g.adjacent(u, v);
      if (c >= most) {
        most = c;
        pivot = u;
      }
    }
  std::vector<size_t> todo;
  for (size_t v : p)
    if (!g.adjacent(pivot, v)) todo.push_back(v);
  for (size_t v : todo) {
    std::vector<size_t> np, nx;
    for (size_t u : p)
      if (g.adjacent(u, v)) np.push_back(u);
    for (size_t u : x)
      if (g.adjacent(u, v)) nx.push_back(u);
    bk(g, depth + 1, std::move(np), std::move(nx), best);
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

class KColor {
 public:
  KColor(const Graph& g, int k, uint64_t budget)
      : g_(g), k_(k), budget_(budget), color_(g.size(), -1),
        count_(g.size() * static_cast<size_t>(k), 0), sat_(g.size(), 0) {}

  // 1 = colorable, 0 = not, -1 = budget exhausted
  int run() {
    const int r = search(0, 0);
    return r;
  }
  uint64_t nodes() const { return nodes_; }
  const std::vector<int>& coloring() const { return color_; }

 private:
  int search(size_t colored, int used) {
    if (colored == g_.size()) return 1;
    if (nodes_ >= budget_) return -1;
    ++nodes_;
    size_t v = g_.size();
    for (size_t u = 0; u < g_.size(); ++u) {
      if (color_[u] >= 0) continue;
      if (v == g_.size() || sat_[u] > sat_[v] || (sat_[u] == sat_[v] && g_.degree(u) > g_.degree(v))) v = u;
    }
    if (sat_[v] >= k_) return 0;
    const int limit = std::min(used + 1, k_);
    for (int c = 0; c < limit; ++c) {
      if (count_[v * static_cast<size_t>(k_) + static_cast<size_t>(c)] != 0) continue;
      assign(v, c, +1);
      const int r = search(colored + 1, std::max(used, c + 1));
      if (r != 0) return r;
      assign(v, c, -1);
    }
    return 0;
  }

  void assign(size_t v, int c, int delta) {
    color_[v] = delta > 0 ? c : -1;
    for (size_t u : g_.neighbors(v)) {
      auto& cnt = count_[u * static_cast<size_t>(k_) + static_cast<size_t>(c)];
      if (delta > 0 && cnt++ == 0) ++sat_[u];
      if (delta < 0 && --cnt == 0) --sat_[u];
    }
  }

  const Graph& g_;
  int k_;
  uint64_t budget_;
  uint64_t nodes_ = 0;
  std::vector<int> color_;
  std::vector<int> count_;
  std::vector<int> sat_;
};

std::vector<int> greedy_dsatur(const Graph& g) {
  const size_t n = g.size();
  std::vector<int> color(n, -1);
  std::vector<std::set<int>> seen(n);
  for (size_t step = 0; step < n; ++step) {
    size_t v = n;
    for (size_t u = 0; u < n; ++u) {
      if (color[u] >= 0) continue;
      if (v == n || seen[u].size() > seen[v].size() ||
          (seen[u].size() == seen[v].size() && g.degree(u) > g.degree(v)))
        v = u;
    }
    int c = 0;
    while (seen[v].count(c)) ++c;
    color[v] = c;
    for (size_t u : g.neighbors(v)) seen[u].insert(c);
  }
  return color;
}

}  // namespace

int clique_number(const Graph& g) {
  std::vector<size_t> p(g.size());
  std::iota(p.begin(), p.end(), 0);
  size_t best = 0;
  bk(g, 0, std::move(p), {}, best);
  return static_cast<int>(best);
}

ChromaticResult chromatic_number(const Graph& g, uint64_t budget) {
  ChromaticResult res;
  if (g.size() == 0) {
    res.exact = true;
    return res;
  }
  res.coloring = greedy_dsatur(g);
  res.upper = *std::max_element(res.coloring.begin(), res.coloring.end()) + 1;
  res.lower = std::max(1, clique_number(g));
  // Decide k-colorability upward from the clique bound; each refutation
  // raises the lower bound.
  while (res.lower < res.upper) {
    KColor search(g, res.lower, budget - res.nodes);
    const int r = search.run();
    res.nodes += search.nodes();
    if (r < 0) break;
    if (r == 1) {
      res.upper = res.lower;
      res.coloring = search.coloring();
      break;
    }
    ++res.lower;
  }
  res.exact = res.lower == res.upper;
  return res;
}

Graph induced_subgraph(const Graph& g, const std::vector<size_t>& vertices) {
  std::vector<std::string> labels;
  std::set<size_t> seen;
  for (size_t v : vertices) {
    if (v >= g.size() || !seen.insert(v).second) throw Error("bad-vertex", std::to_string(v));
    labels.push_back(g.label(v));
  }
  Graph h(std::move(labels));
  for (size_t i = 0; i < vertices.size(); ++i)
    for (size_t j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j])) h.add_edge(i, j);
  return h;
}

Graph induced_subgraph(const Graph& g, const std::vector<std::string>& labels) {
  std::vector<size_t> idx;
  for (const auto& l : labels) idx.push_back(g.index_of(l));
  return induced_subgraph(g, idx);
}

void OGraph::validate() const {
  std::set<std::string> seen(vertices.begin(), vertices.end());
  if (seen.size() != vertices.size()) throw Error("bad-graph", "duplicate vertex");
  for (const auto& [u, v] : arcs) {
    if (u >= size() || v >= size()) throw Error("bad-graph", "unknown endpoint");
    if (u == v) throw Error("bad-graph", "loop at " + vertices[u]);
  }
}

Graph OGraph::underlying() const {
  validate();
  Graph g(vertices);
  for (const auto& [u, v] : arcs) g.add_edge(u, v);
  return g;
}

}  // namespace burling
