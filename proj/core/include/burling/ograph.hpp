#pragma once

#include <string>
#include <utility>
#include <vector>

#include "burling/graph.hpp"

namespace burling {

/// Oriented graph: labelled vertices and a set of arcs u -> v (no loops).
struct OGraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<size_t, size_t>> arcs;

  size_t size() const { return vertices.size(); }
  /// Throws Error("bad-graph") on loops, unknown endpoints or duplicate labels.
  void validate() const;
  Graph underlying() const;

  friend bool operator==(const OGraph&, const OGraph&) = default;
};

}  // namespace burling
