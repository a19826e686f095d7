#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "burling/burling_set.hpp"
#include "burling/construction.hpp"
#include "burling/error.hpp"
#include "burling/graph.hpp"
#include "burling/io.hpp"
#include "burling/relations.hpp"
#include "burling/render.hpp"

namespace {

using namespace burling;

constexpr int kExitError = 3;

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io-error", "cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("io-error", "cannot write " + path);
  out << text;
}

Region shape_arg(const std::string& spec) {
  if (spec.rfind("file:", 0) == 0) return read_region(slurp(spec.substr(5)));
  return named_shape(spec);
}

struct GenerateArgs {
  std::string shape = "frame";
  int k = 1;
  int max_k = 5;
  std::string out;
  size_t verify_limit = 200;
};

int generate(const GenerateArgs& a) {
  BuildOptions opts;
  opts.max_k = a.max_k;
  opts.verify_limit = a.verify_limit;
  emit(a.out, write_scene(burling_sequence(shape_arg(a.shape), a.k, opts)));
  return 0;
}

struct CheckArgs {
  std::string scene = "-";
  bool constraints = false;
  bool stability = false;
  size_t samples = 0;
  uint64_t seed = 1;
};

int check(const CheckArgs& a) {
  const Scene sc = read_scene(slurp(a.scene));
  const bool both = !a.constraints && !a.stability;
  ConstraintReport rep;
  if (a.constraints || both) {
    CheckOptions opts;
    if (a.samples > 0) opts.samples = a.samples;
    opts.seed = a.seed;
    rep = check_constraints(sc.family, opts);
  }
  std::vector<std::string> unstable;
  if (a.stability || both) {
    unstable = unstable_probs(sc);
    if (!probs_disjoint(sc.probs)) unstable.push_back("(overlap)");
  }
  const std::string out = report_json(rep, unstable);
  std::cout << out;
  return rep.pass() && unstable.empty() ? 0 : 1;
}

struct GraphArgs {
  std::string scene = "-";
  std::string out;
  std::string dot;
  bool witness = true;
};

int graph(const GraphArgs& a) {
  const Scene sc = read_scene(slurp(a.scene));
  GraphDoc doc;
  doc.graph = oriented_intersection_graph(sc.family);
  if (a.witness) doc.witness_prec = derive_triple(sc.family).prec;
  emit(a.out, write_graph(doc));
  if (!a.dot.empty()) emit(a.dot, to_dot(doc, {{"level", std::to_string(sc.level)}}));
  return 0;
}

struct RecognizeArgs {
  std::string graph = "-";
  bool oriented = false;
  uint64_t budget = kDefaultRecognitionBudget;
};

int recognize(const RecognizeArgs& a) {
  const GraphDoc doc = read_graph(slurp(a.graph));
  Cert cert;
  if (a.oriented) {
    if (!doc.oriented) throw Error("bad-document", "--oriented needs a graph with arcs");
    cert = recognize_oriented(doc.graph, a.budget);
  } else {
    cert = recognize_unoriented(doc.graph.underlying(), a.budget);
  }
  auto j = nlohmann::json::parse(cert_json(cert, doc.graph));
  if (doc.witness_prec && doc.oriented) {
    const PairSet arcs(doc.graph.arcs.begin(), doc.graph.arcs.end());
    j["stored_witness_valid"] = check_axioms({doc.graph.vertices, *doc.witness_prec, arcs}).empty();
  }
  std::cout << j.dump(1) << "\n";
  switch (cert.verdict) {
    case Verdict::accepted: return 0;
    case Verdict::rejected: return 1;
    case Verdict::budget_exceeded: return 2;
  }
  return kExitError;
}

struct AnalyzeArgs {
  std::string graph = "-";
  bool chi = false;
  bool triangle = false;
  uint64_t budget = 100'000'000;
  std::string dot;
};

int analyze(const AnalyzeArgs& a) {
  const GraphDoc doc = read_graph(slurp(a.graph));
  const Graph g = doc.graph.underlying();
  const bool all = !a.chi && !a.triangle;
  nlohmann::json j;
  j["vertices"] = g.size();
  j["edges"] = g.edge_count();
  std::map<std::string, std::string> notes;
  if (a.triangle || all) {
    j["triangle_free"] = triangle_free(g);
    j["clique_number"] = clique_number(g);
    notes["triangle_free"] = triangle_free(g) ? "yes" : "no";
  }
  if (a.chi || all) {
    const auto r = chromatic_number(g, a.budget);
    j["chi"] = {{"lower", r.lower}, {"upper", r.upper}, {"exact", r.exact}, {"nodes", r.nodes}};
    notes["chi"] = r.exact ? std::to_string(r.lower) : "[" + std::to_string(r.lower) + ", " + std::to_string(r.upper) + "]";
  }
  std::cout << j.dump(1) << "\n";
  if (!a.dot.empty()) emit(a.dot, to_dot(doc, notes));
  return 0;
}

struct RenderArgs {
  std::string scene = "-";
  std::string svg;
  bool territories = false;
};

int render(const RenderArgs& a) {
  RenderOptions opts;
  opts.territories = a.territories;
  emit(a.svg, render_svg(read_scene(slurp(a.scene)), opts));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Burling graph constructions on rectilinear Pouna shapes"};
  app.require_subcommand(1);

  GenerateArgs ga;
  auto* gen = app.add_subcommand("generate", "build (F_k, P_k) and write a scene");
  gen->add_option("--shape", ga.shape, "frame, gamma or file:PATH")->capture_default_str();
  gen->add_option("--k", ga.k, "level")->capture_default_str();
  gen->add_option("--max-k", ga.max_k, "refuse levels above this")->capture_default_str();
  gen->add_option("--verify-limit", ga.verify_limit, "full invariant checks up to this many shapes")->capture_default_str();
  gen->add_option("--out,-o", ga.out, "output file (default stdout)");

  CheckArgs ca;
  auto* chk = app.add_subcommand("check", "verify constraints and prob stability");
  chk->add_option("scene", ca.scene, "scene file or -")->capture_default_str();
  chk->add_flag("--constraints", ca.constraints);
  chk->add_flag("--stability", ca.stability);
  chk->add_option("--samples", ca.samples, "random pairs/triples instead of all");
  chk->add_option("--seed", ca.seed)->capture_default_str();

  GraphArgs gra;
  auto* gr = app.add_subcommand("graph", "oriented intersection graph of a scene");
  gr->add_option("scene", gra.scene)->capture_default_str();
  gr->add_option("--out,-o", gra.out);
  gr->add_option("--dot", gra.dot);
  gr->add_flag("!--no-witness", gra.witness, "omit the geometric prec relation");

  RecognizeArgs ra;
  auto* rec = app.add_subcommand("recognize", "abstract Burling graph recognition");
  rec->add_option("graph", ra.graph)->capture_default_str();
  rec->add_flag("--oriented", ra.oriented, "keep the given orientation");
  rec->add_option("--budget", ra.budget)->capture_default_str();

  AnalyzeArgs aa;
  auto* an = app.add_subcommand("analyze", "clique and chromatic number");
  an->add_option("graph", aa.graph)->capture_default_str();
  an->add_flag("--chi", aa.chi);
  an->add_flag("--triangle-free", aa.triangle);
  an->add_option("--budget", aa.budget)->capture_default_str();
  an->add_option("--dot", aa.dot);

  RenderArgs rna;
  auto* rn = app.add_subcommand("render", "draw a scene as SVG");
  rn->add_option("scene", rna.scene)->capture_default_str();
  rn->add_option("--svg", rna.svg)->required();
  rn->add_flag("--territories", rna.territories);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return generate(ga);
    if (*chk) return check(ca);
    if (*gr) return graph(gra);
    if (*rec) return recognize(ra);
    if (*an) return analyze(aa);
    if (*rn) return render(rna);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
