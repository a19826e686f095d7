#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace burling {

/// Simple undirected graph over labelled vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::vector<std::string> labels);

  size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(size_t v) const { return labels_[v]; }
  /// Throws Error("bad-vertex").
  size_t index_of(const std::string& label) const;

  /// Throws Error("bad-edge") on loops or unknown endpoints; duplicates are ignored.
  void add_edge(size_t u, size_t v);
  bool adjacent(size_t u, size_t v) const { return adj_[u * size() + v] != 0; }
  const std::vector<size_t>& neighbors(size_t v) const { return nbrs_[v]; }
  size_t degree(size_t v) const { return nbrs_[v].size(); }
  size_t edge_count() const { return edges_; }
  std::vector<std::pair<size_t, size_t>> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.adj_ == b.adj_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<char> adj_;
  std::vector<std::vector<size_t>> nbrs_;
  size_t edges_ = 0;
};

bool triangle_free(const Graph& g);
/// Exact maximum clique size (0 for the empty graph).
int clique_number(const Graph& g);

struct ChromaticResult {
  int lower = 0;
  int upper = 0;
  bool exact = false;
  uint64_t nodes = 0;
  std::vector<int> coloring;  // a proper coloring using `upper` colors
};

/// Exact DSATUR branch and bound. When the node budget runs out the result
/// is a [lower, upper] bracket with exact == false.
ChromaticResult chromatic_number(const Graph& g, uint64_t budget = 100'000'000);

/// Throws Error("bad-vertex") on an unknown or repeated vertex.
Graph induced_subgraph(const Graph& g, const std::vector<size_t>& vertices);
Graph induced_subgraph(const Graph& g, const std::vector<std::string>& labels);

}  // namespace burling
