#include "burling/io.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "burling/error.hpp"

namespace burling {

using nlohmann::json;

namespace {

json rect_json(const Rect& r) { return json::array({r.xlo.str(), r.xhi.str(), r.ylo.str(), r.yhi.str()}); }

Rect rect_of(const json& j) {
  if (!j.is_array() || j.size() != 4) throw Error("bad-document", "rect must have four entries");
  return Rect::make(Rat::parse(j[0].get<std::string>()), Rat::parse(j[1].get<std::string>()),
                    Rat::parse(j[2].get<std::string>()), Rat::parse(j[3].get<std::string>()));
}

json region_json(const Region& r) {
  json a = json::array();
  for (const auto& q : r.rects()) a.push_back(rect_json(q));
  return a;
}

Region region_of(const json& j) {
  if (!j.is_array()) throw Error("bad-document", "rect list expected");
  std::vector<Rect> rs;
  for (const auto& q : j) rs.push_back(rect_of(q));
  return Region(std::move(rs));
}

json transform_json(const Transform& t) {
  return json::array({t.a().str(), t.b().str(), t.c().str(), t.d().str()});
}

Transform transform_of(const json& j) {
  if (!j.is_array() || j.size() != 4) throw Error("bad-document", "transform must have four entries");
  return Transform(Rat::parse(j[0].get<std::string>()), Rat::parse(j[1].get<std::string>()),
                   Rat::parse(j[2].get<std::string>()), Rat::parse(j[3].get<std::string>()));
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    size_t line = 1, col = 1;
    const size_t stop = std::min(text.size(), e.byte > 0 ? e.byte - 1 : 0);
    for (size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error("parse-error", "line " + std::to_string(line) + ", column " + std::to_string(col));
  }
}

void check_version(const json& j, int want) {
  if (!j.is_object() || !j.contains("version")) throw Error("bad-document", "missing version");
  if (!j["version"].is_number_integer() || j["version"].get<int>() != want)
    throw Error("bad-version", j["version"].dump());
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error("bad-document", e.what());
  }
}

using IdPairs = std::vector<std::pair<size_t, size_t>>;

json pairs_json(const IdPairs& ps, const std::vector<std::string>& names) {
  json a = json::array();
  for (const auto& [u, v] : ps) a.push_back(json::array({names[u], names[v]}));
  return a;
}

IdPairs pairs_of(const json& j, const std::map<std::string, size_t>& index) {
  IdPairs out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw Error("bad-document", "pair expected");
    auto u = index.find(e[0].get<std::string>());
    auto v = index.find(e[1].get<std::string>());
    if (u == index.end() || v == index.end()) throw Error("bad-document", "unknown vertex in " + e.dump());
    out.emplace_back(u->second, v->second);
  }
  return out;
}

}  // namespace

std::string write_scene(const Scene& sc) {
  json j;
  j["version"] = kSceneVersion;
  j["level"] = sc.level;
  j["reflected"] = sc.reflected;
  j["base_shape"] = region_json(sc.family.base->region());
  json w = json::array();
  for (const auto& r : sc.sub.crossing_witness) w.push_back(rect_json(r));
  j["subterritory"] = {{"rect", rect_json(sc.sub.rect)}, {"witness", w}};
  json shapes = json::array();
  for (size_t i = 0; i < sc.family.shapes.size(); ++i) {
    const auto& s = sc.family.shapes[i];
    const auto& p = sc.provenance[i];
    shapes.push_back({{"id", s.id()},
                      {"rects", region_json(s.region())},
                      {"provenance", {{"level", p.level}, {"prob", p.prob}, {"transform", transform_json(p.from_base)}}}});
  }
  j["shapes"] = shapes;
  json probs = json::array();
  for (const auto& p : sc.probs) probs.push_back({{"id", p.id}, {"rect", rect_json(p.rect)}});
  j["probs"] = probs;
  return j.dump(1) + "\n";
}

Scene read_scene(std::string_view text) {
  const json j = parse(text);
  check_version(j, kSceneVersion);
  return guarded([&] {
    const Shape base("base", region_of(j.at("base_shape")));
    const auto st = strongify(base);
    if (st.reflected != j.at("reflected").get<bool>()) throw Error("bad-document", "reflected flag disagrees with base");
    const Shape strong = st.shape.transformed(Transform::identity(), "s0");
    SubterritoryCert sub{rect_of(j.at("subterritory").at("rect")), {}};
    for (const auto& r : j.at("subterritory").at("witness")) sub.crossing_witness.push_back(rect_of(r));
    Scene sc{Family{{}, base}, {}, st.reflected, strong, sub, j.at("level").get<int>(), {}};
    for (const auto& s : j.at("shapes")) {
      sc.family.shapes.emplace_back(s.at("id").get<std::string>(), region_of(s.at("rects")));
      const auto& p = s.at("provenance");
      sc.provenance.push_back({p.at("level").get<int>(), p.at("prob").get<std::string>(), transform_of(p.at("transform"))});
    }
    for (const auto& p : j.at("probs")) sc.probs.push_back({rect_of(p.at("rect")), p.at("id").get<std::string>()});
    return sc;
  });
}

Region read_region(std::string_view text) {
  const json j = parse(text);
  return guarded([&] { return region_of(j.is_object() ? j.at("rects") : j); });
}

std::string write_graph(const GraphDoc& g) {
  json j;
  j["version"] = kGraphVersion;
  j["vertices"] = g.graph.vertices;
  j[g.oriented ? "arcs" : "edges"] = pairs_json(g.graph.arcs, g.graph.vertices);
  if (g.witness_prec) j["witness_prec"] = pairs_json({g.witness_prec->begin(), g.witness_prec->end()}, g.graph.vertices);
  return j.dump(1) + "\n";
}

GraphDoc read_graph(std::string_view text) {
  const json j = parse(text);
  check_version(j, kGraphVersion);
  GraphDoc g = guarded([&] {
    GraphDoc d;
    d.graph.vertices = j.at("vertices").get<std::vector<std::string>>();
    std::map<std::string, size_t> index;
    for (size_t i = 0; i < d.graph.vertices.size(); ++i) index[d.graph.vertices[i]] = i;
    const bool has_arcs = j.contains("arcs");
    const bool has_edges = j.contains("edges");
    if (has_arcs == has_edges) throw Error("bad-document", "exactly one of arcs or edges required");
    d.oriented = has_arcs;
    d.graph.arcs = pairs_of(j.at(has_arcs ? "arcs" : "edges"), index);
    if (j.contains("witness_prec")) {
      const auto w = pairs_of(j["witness_prec"], index);
      d.witness_prec = PairSet(w.begin(), w.end());
    }
    return d;
  });
  try {
    g.graph.validate();
  } catch (const Error& e) {
    throw Error("bad-document", e.what());
  }
  return g;
}

GraphDoc graph_doc(const Graph& g) {
  GraphDoc d;
  d.oriented = false;
  d.graph.vertices = g.labels();
  d.graph.arcs = g.edges();
  return d;
}

std::string to_dot(const GraphDoc& g, const std::map<std::string, std::string>& attrs) {
  std::ostringstream os;
  const char* edge = g.oriented ? " -> " : " -- ";
  os << (g.oriented ? "digraph" : "graph") << " burling {\n";
  for (const auto& [k, v] : attrs) os << "  // " << k << ": " << v << "\n";
  if (!attrs.empty()) {
    os << "  label=\"";
    bool first = true;
    for (const auto& [k, v] : attrs) {
      os << (first ? "" : "\\n") << k << ": " << v;
      first = false;
    }
    os << "\";\n";
  }
  for (const auto& v : g.graph.vertices) os << "  \"" << v << "\";\n";
  for (const auto& [u, v] : g.graph.arcs) os << "  \"" << g.graph.vertices[u] << "\"" << edge << "\"" << g.graph.vertices[v] << "\";\n";
  os << "}\n";
  return os.str();
}

std::string report_json(const ConstraintReport& r, const std::vector<std::string>& unstable) {
  json j;
  j["pass"] = r.pass() && unstable.empty();
  j["sampled"] = r.sampled;
  json cs = json::object();
  for (int k = 1; k <= 6; ++k) {
    const auto& c = r.c(k);
    cs["C" + std::to_string(k)] = {{"checked", c.checked},
                                   {"pass", c.pass},
                                   {"violations", c.violation_count},
                                   {"examples", c.violations}};
  }
  j["constraints"] = cs;
  j["unstable_probs"] = unstable;
  return j.dump(1) + "\n";
}

std::string cert_json(const Cert& c, const OGraph& g) {
  json j;
  j["verdict"] = to_string(c.verdict);
  j["nodes"] = c.nodes;
  const OGraph& named = c.orientation ? *c.orientation : g;
  if (c.orientation) j["orientation"] = pairs_json(c.orientation->arcs, named.vertices);
  if (c.witness_prec) j["witness_prec"] = pairs_json({c.witness_prec->begin(), c.witness_prec->end()}, named.vertices);
  if (c.violated) j["violated"] = {{"kind", c.violated->kind}, {"ids", c.violated->ids}};
  return j.dump(1) + "\n";
}

}  // namespace burling
