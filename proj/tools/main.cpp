#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "canonwit/bounds.hpp"
#include "canonwit/canonical.hpp"
#include "canonwit/error.hpp"
#include "canonwit/extraction.hpp"
#include "canonwit/graph.hpp"
#include "canonwit/oracles.hpp"

using nlohmann::json;
using namespace canonwit;

namespace {

enum Exit : int {
  kOk = 0,
  kInputError = 1,
  kInconclusive = 2,
  kVerificationFailed = 3,
  kResourceLimit = 4,
};

struct Global {
  bool human = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string join(const std::vector<Vertex>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

void print_witness_human(const Witness& w, bool verified) {
  std::cout << "type      " << w.type() << "\n";
  if (auto* p = std::get_if<InducedPathWitness>(&w.value)) {
    std::cout << "vertices  " << join(p->vertices) << "\n";
  } else if (auto* b = std::get_if<Biclique>(&w.value)) {
    std::cout << "sideA     " << join(b->side_a) << "\nsideB     " << join(b->side_b) << "\n";
  } else if (auto* c = std::get_if<CanonicalWitness>(&w.value)) {
    std::cout << "descriptor " << to_string(c->descriptor) << "\n";
    std::cout << "vertices  " << join(c->embedding.image) << "\n";
  } else if (auto* r = std::get_if<RakeEmbedding>(&w.value)) {
    std::cout << "base      " << join(r->base) << "\nteeth    ";
    for (auto [t, idx] : r->teeth) std::cout << " " << t << "@" << idx;
    std::cout << "\n";
  } else if (auto* i = std::get_if<Inconclusive>(&w.value)) {
    std::cout << "reason    " << i->reason << "\n";
  }
  std::cout << "verified  " << (verified ? "yes" : "no") << "\n";
  for (const auto& line : w.stage_log) std::cout << "  | " << line << "\n";
}

// --- extract ---------------------------------------------------------------

struct ExtractArgs {
  std::string input;
  std::size_t s = 0, q = 0;
  std::string stage = "pipeline";
  std::size_t grid_order = 3;
};

int run_extract(const Global& global, const ExtractArgs& a) {
  Graph g = parse_edge_list_file(a.input);
  PipelineOptions opts;
  opts.stage = parse_stage(a.stage);
  opts.searched_grid_order = a.grid_order;
  opts.limits.search = SearchLimits::from_environment();
  Witness w = witness_pipeline(g, a.s, a.q, opts);
  const bool verified = w.conclusive() && verify_witness(g, w.value).ok;
  if (global.human)
    print_witness_human(w, verified);
  else
    std::cout << witness_to_json(w, verified) << "\n";
  return w.conclusive() ? kOk : kInconclusive;
}

// --- verify ----------------------------------------------------------------

int run_verify(const Global& global, const std::string& input, const std::string& witness) {
  Graph g = parse_edge_list_file(input);
  Witness w = witness_from_json(read_file(witness));
  Check c = verify_witness(g, w.value);
  if (global.human) {
    std::cout << (c ? "valid" : "invalid: " + c.diagnostic) << "\n";
  } else {
    json j{{"type", w.type()}, {"valid", c.ok}};
    if (!c) j["diagnostic"] = c.diagnostic;
    std::cout << j.dump(2) << "\n";
  }
  if (!c) std::cerr << "verify: " << c.diagnostic << "\n";
  return c ? kOk : kVerificationFailed;
}

// --- bounds ----------------------------------------------------------------

int run_bounds(const Global& global, const NamedBoundRequest& req, bool as_json) {
  BoundValue v = evaluate_named(req);
  auto flags = v.flags.names();
  if (as_json && !global.human) {
    json j{{"function", req.function}, {"args", req.args},     {"value", v.decimal()},
           {"exact", v.exact()},       {"flags", flags},       {"provenance", v.provenance}};
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << v.decimal() << "\n";
  std::string line;
  for (std::size_t i = 0; i < flags.size(); ++i) line += (i ? "," : "") + flags[i];
  std::cout << "flags: " << (line.empty() ? "none" : line) << "\n";
  if (global.human) std::cout << "provenance: " << v.provenance << "\n";
  return kOk;
}

// --- gen -------------------------------------------------------------------

struct GenArgs {
  std::string kind;
  std::size_t order = 0;
  std::size_t dense = 1;
  double p = 0.3;
  std::uint64_t seed = 0;
  bool seed_given = false;
};

int run_gen(const GenArgs& a) {
  Graph g;
  if (a.kind == "hole") {
    g = make_canonical(CanonicalDescriptor::hole(a.order));
  } else if (a.kind == "h" || a.kind == "h-semi" || a.kind == "h-tight") {
    Tightness t = a.kind == "h" ? Tightness::kPlain
                  : a.kind == "h-semi" ? Tightness::kSemiTight
                                       : Tightness::kTight;
    g = make_canonical(CanonicalDescriptor::h_graph(a.order, t), CanonicalOptions{kHGraphOrderFloor});
  } else if (a.kind == "rake") {
    g = rake_graph(a.order, a.dense);
  } else if (a.kind == "grid") {
    if (a.order == 0) throw MalformedInput("grid order must be positive");
    g = grid_graph(a.order, a.order);
  } else if (a.kind == "random") {
    if (!a.seed_given) throw MalformedInput("random graphs need an explicit --seed");
    if (a.p < 0 || a.p > 1) throw MalformedInput("--p must lie in [0,1]");
    std::mt19937_64 rng(a.seed);
    std::bernoulli_distribution coin(a.p);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < a.order; ++u)
      for (Vertex v = u + 1; v < a.order; ++v)
        if (coin(rng)) edges.emplace_back(u, v);
    g = Graph::from_edge_list(a.order, edges);
  } else {
    throw MalformedInput("unknown kind \"" + a.kind + "\"");
  }
  write_edge_list(std::cout, g);
  return kOk;
}

// --- antichain -------------------------------------------------------------

int run_antichain(const Global& global, std::size_t max_order, std::size_t minimum) {
  CanonicalOptions copts{minimum};
  if (minimum < kHGraphOrderFloor) throw MalformedInput("H-graph minimum below the floor");
  auto descriptors = enumerate_canonical(max_order, copts);
  SearchLimits limits = SearchLimits::from_environment();
  limits.pattern_vertices = std::max<std::size_t>(limits.pattern_vertices, max_order + 4);
  AntichainReport report = verify_antichain(descriptors, limits);
  if (global.human || report.ok()) {
    if (report.ok()) {
      std::cout << "OK " << report.pairs_checked << " pairs\n";
    } else {
      for (const auto& v : report.violations)
        std::cout << to_string(v.pattern) << " embeds in " << to_string(v.host) << " at "
                  << join(v.embedding.image) << "\n";
      std::cout << "FAIL " << report.violations.size() << " of " << report.pairs_checked
                << " pairs\n";
    }
  } else {
    json vs = json::array();
    for (const auto& v : report.violations)
      vs.push_back({{"pattern", to_string(v.pattern)},
                    {"host", to_string(v.host)},
                    {"image", v.embedding.image}});
    std::cout << json{{"pairs", report.pairs_checked}, {"violations", vs}}.dump(2) << "\n";
  }
  return report.ok() ? kOk : kVerificationFailed;
}

// --- oracle ----------------------------------------------------------------

struct OracleArgs {
  std::string input;
  std::string query;
  std::string pattern;
  std::string mode = "induced";
  std::size_t a = 0, b = 0;
};

int run_oracle(const Global& global, const OracleArgs& o) {
  Graph g = parse_edge_list_file(o.input);
  SearchLimits limits = SearchLimits::from_environment();
  json out{{"query", o.query}};
  std::string text;
  auto seq = [&](const char* key, const std::optional<std::vector<Vertex>>& v) {
    out["found"] = v.has_value();
    if (v) out[key] = *v;
    text = v ? join(*v) : "none";
  };
  if (o.query == "embed") {
    if (o.pattern.empty()) throw MalformedInput("embed needs --pattern");
    Graph pattern = parse_edge_list_file(o.pattern);
    std::optional<Embedding> e;
    if (o.mode == "induced")
      e = find_induced_embedding(g, pattern, limits);
    else if (o.mode == "subgraph")
      e = find_subgraph_embedding(g, pattern, limits);
    else if (o.mode == "minor")
      e = find_minor_model(g, pattern, limits);
    else
      throw MalformedInput("unknown mode \"" + o.mode + "\"");
    out["mode"] = o.mode;
    out["found"] = e.has_value();
    if (e && o.mode == "minor") {
      out["branchSets"] = e->branch_sets;
      text.clear();
      for (const auto& bs : e->branch_sets) text += "{" + join(bs, ",") + "} ";
    } else if (e) {
      out["image"] = e->image;
      text = join(e->image);
    } else {
      text = "none";
    }
  } else if (o.query == "longest-path") {
    seq("vertices", longest_path(g, limits));
  } else if (o.query == "longest-induced-path") {
    seq("vertices", longest_induced_path(g, limits));
  } else if (o.query == "hole") {
    seq("vertices", find_hole(g, o.a, limits));
  } else if (o.query == "clique") {
    seq("vertices", find_clique(g, o.a, limits));
  } else if (o.query == "independent-set") {
    seq("vertices", find_independent_set(g, o.a, limits));
  } else if (o.query == "biclique") {
    auto bc = find_biclique(g, o.a, o.b, limits);
    out["found"] = bc.has_value();
    if (bc) {
      out["sideA"] = bc->side_a;
      out["sideB"] = bc->side_b;
    }
    text = bc ? join(bc->side_a) + " | " + join(bc->side_b) : "none";
  } else if (o.query == "treewidth") {
    std::size_t tw = treewidth_exact(g, limits);
    out["treewidth"] = tw;
    text = std::to_string(tw);
  } else if (o.query == "canonical") {
    auto c = find_canonical(g, o.a, limits);
    out["found"] = c.has_value();
    if (c) {
      out["descriptor"] = to_string(c->descriptor);
      out["vertices"] = c->embedding.image;
    }
    text = c ? to_string(c->descriptor) + ": " + join(c->embedding.image) : "none";
  } else {
    throw MalformedInput("unknown query \"" + o.query + "\"");
  }
  if (global.human)
    std::cout << o.query << ": " << text << "\n";
  else
    std::cout << out.dump(2) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified witness extraction for canonical graph families"};
  app.require_subcommand(1);
  app.fallthrough();
  Global global;
  app.add_flag("--human", global.human, "Tabular text instead of JSON");

  ExtractArgs ex;
  auto* extract = app.add_subcommand("extract", "Extract a verified witness from a graph");
  extract->add_option("--input", ex.input, "Edge-list file")->required();
  extract->add_option("--s", ex.s, "Target order s")->required();
  extract->add_option("--q", ex.q, "Biclique order q")->required();
  extract->add_option("--stage", ex.stage, "pipeline | path | dense-rake")
      ->check(CLI::IsMember({"pipeline", "path", "dense-rake"}));
  extract->add_option("--grid-order", ex.grid_order, "Grid minor order searched for rakes");

  std::string v_input, v_witness;
  auto* verify = app.add_subcommand("verify", "Check a witness against a graph");
  verify->add_option("--input", v_input, "Edge-list file")->required();
  verify->add_option("--witness", v_witness, "Witness JSON file")->required();

  NamedBoundRequest req;
  bool bounds_json = false;
  auto* bounds = app.add_subcommand("bounds", "Evaluate a bound function exactly");
  bounds->add_option("--fn", req.function, "P R C Y Z b c D X")->required();
  bounds->add_option("--args", req.args, "Integer arguments")->required();
  bounds->add_flag("--literal", req.literal, "Literal Y base case");
  bounds->add_option("--f-exponent", req.f_exponent, "Exponent of the grid-minor placeholder");
  bounds->add_flag("--json", bounds_json, "JSON instead of the value and flags lines");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Write a generated graph as an edge list");
  gen->add_option("--kind", gen_args.kind, "hole | h | h-semi | h-tight | rake | grid | random")
      ->required();
  gen->add_option("--order,-k", gen_args.order, "Order, teeth count or grid side")->required();
  gen->add_option("--dense", gen_args.dense, "Rake density");
  gen->add_option("--p", gen_args.p, "Edge probability for random graphs");
  auto* seed_opt = gen->add_option("--seed", gen_args.seed, "Seed for random graphs");

  std::size_t max_order = 0, minimum = kDefaultHGraphMinimumOrder;
  auto* antichain = app.add_subcommand("antichain", "Check the canonical family is an antichain");
  antichain->add_option("--max-order", max_order, "Largest order checked")->required();
  antichain->add_option("--hgraph-minimum", minimum, "Smallest H-graph order included");

  OracleArgs oa;
  auto* oracle = app.add_subcommand("oracle", "Run an exhaustive oracle on a graph");
  oracle->add_option("--input", oa.input, "Edge-list file")->required();
  oracle->add_option("--query", oa.query,
                     "embed | longest-path | longest-induced-path | hole | clique | "
                     "independent-set | biclique | treewidth | canonical")
      ->required();
  oracle->add_option("--pattern", oa.pattern, "Pattern edge-list file for embed");
  oracle->add_option("--mode", oa.mode, "induced | subgraph | minor");
  oracle->add_option("-a", oa.a, "First size argument");
  oracle->add_option("-b", oa.b, "Second size argument");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*extract) return run_extract(global, ex);
    if (*verify) return run_verify(global, v_input, v_witness);
    if (*bounds) return run_bounds(global, req, bounds_json);
    if (*gen) {
      gen_args.seed_given = seed_opt->count() > 0;
      return run_gen(gen_args);
    }
    if (*antichain) return run_antichain(global, max_order, minimum);
    if (*oracle) return run_oracle(global, oa);
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const InsufficientInput& e) {
    std::cerr << "insufficient input: " << e.what() << "\n";
    return kInconclusive;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
