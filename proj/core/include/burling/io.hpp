#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "burling/burling_set.hpp"
#include "burling/construction.hpp"
#include "burling/graph.hpp"
#include "burling/ograph.hpp"
#include "burling/relations.hpp"

namespace burling {

inline constexpr int kSceneVersion = 1;
inline constexpr int kGraphVersion = 1;

// All readers throw Error("parse-error") with line and column for malformed
// JSON, Error("bad-version") on a version mismatch and Error("bad-document")
// for well-formed JSON of the wrong shape.

std::string write_scene(const Scene& sc);
Scene read_scene(std::string_view text);

/// Region as a list of [xlo, xhi, ylo, yhi] string quadruples.
Region read_region(std::string_view text);

struct GraphDoc {
  bool oriented = true;
  /// Arcs when oriented, edges (as stored) otherwise.
  OGraph graph;
  std::optional<PairSet> witness_prec;

  friend bool operator==(const GraphDoc&, const GraphDoc&) = default;
};

std::string write_graph(const GraphDoc& g);
GraphDoc read_graph(std::string_view text);
GraphDoc graph_doc(const Graph& g);

/// Graphviz; `attrs` become graph-level label lines.
std::string to_dot(const GraphDoc& g, const std::map<std::string, std::string>& attrs = {});

std::string report_json(const ConstraintReport& r, const std::vector<std::string>& unstable);
std::string cert_json(const Cert& c, const OGraph& g);

}  // namespace burling
