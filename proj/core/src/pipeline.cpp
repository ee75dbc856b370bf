#include <string>

#include "canonwit/error.hpp"
#include "canonwit/extraction.hpp"

namespace canonwit {

std::string to_string(PipelineStage s) {
  switch (s) {
    case PipelineStage::kPipeline:
      return "pipeline";
    case PipelineStage::kPath:
      return "path";
    case PipelineStage::kDenseRake:
      return "dense-rake";
  }
  return "pipeline";
}

PipelineStage parse_stage(const std::string& text) {
  if (text == "pipeline") return PipelineStage::kPipeline;
  if (text == "path") return PipelineStage::kPath;
  if (text == "dense-rake") return PipelineStage::kDenseRake;
  throw MalformedInput("unknown stage \"" + text + "\"");
}

namespace {

// Walks from the least vertex of minimum degree, always stepping to the
// unvisited neighbour with the most unvisited neighbours.
VertexSequence greedy_path(const Graph& g) {
  if (g.order() == 0) return {};
  Vertex start = 0;
  for (Vertex v = 1; v < g.order(); ++v)
    if (g.degree(v) < g.degree(start)) start = v;
  std::vector<bool> seen(g.order(), false);
  VertexSequence path{start};
  seen[start] = true;
  while (true) {
    std::optional<Vertex> best;
    std::size_t best_free = 0;
    for (Vertex w : g.adjacent(path.back())) {
      if (seen[w]) continue;
      std::size_t free = 0;
      for (Vertex x : g.adjacent(w)) free += !seen[x];
      if (!best || free > best_free) {
        best = w;
        best_free = free;
      }
    }
    if (!best) return path;
    seen[*best] = true;
    path.push_back(*best);
  }
}

class Pipeline {
 public:
  Pipeline(const Graph& g, std::size_t s, std::size_t q, const PipelineOptions& options)
      : g_(g), s_(s), q_(q), options_(options) {}

  Witness run();

 private:
  bool accept(WitnessValue value, const std::string& stage) {
    if (auto c = verify_witness(g_, value); !c) {
      log_.push_back(stage + ": discarded unverified result: " + c.diagnostic);
      return false;
    }
    result_ = std::move(value);
    return true;
  }
  bool direct();
  bool rakes();
  bool through_rake(const RakeEmbedding& rake, const std::string& source);
  bool paths();
  std::optional<RakeEmbedding> rake_on_longest_path();

  const Graph& g_;
  std::size_t s_, q_;
  const PipelineOptions& options_;
  std::vector<std::string> log_;
  std::optional<WitnessValue> result_;
};

Witness Pipeline::run() {
  const auto stage = options_.stage;
  bool done = false;
  if (stage == PipelineStage::kPipeline) done = direct();
  if (!done && stage != PipelineStage::kPath) done = rakes();
  if (!done && stage != PipelineStage::kDenseRake) done = paths();
  Witness w;
  w.stage_log = std::move(log_);
  w.value = done ? *result_ : WitnessValue{Inconclusive{"no stage produced a witness"}};
  return w;
}

bool Pipeline::direct() {
  try {
    auto found = find_canonical(g_, s_, options_.limits.search, options_.canonical);
    if (!found) {
      log_.push_back("direct: no canonical graph of order >= " + std::to_string(s_));
      return false;
    }
    log_.push_back("direct: found " + to_string(found->descriptor));
    return accept(*found, "direct");
  } catch (const ResourceLimit& e) {
    log_.push_back(std::string("direct: ") + e.what());
    return false;
  }
}

bool Pipeline::rakes() {
  std::optional<std::pair<Embedding, std::size_t>> model = options_.grid_model;
  if (model) {
    log_.push_back("rake: explicit " + std::to_string(model->second) + "x" +
                   std::to_string(model->second) + " grid model");
  } else if (std::size_t k = options_.searched_grid_order;
             k >= 2 && g_.order() >= k * k) {
    try {
      if (auto m = find_minor_model(g_, grid_graph(k, k), options_.limits.search))
        model.emplace(*m, k);
      log_.push_back("rake: " + std::string(model ? "found" : "no") + " " + std::to_string(k) +
                     "x" + std::to_string(k) + " grid minor");
    } catch (const ResourceLimit& e) {
      log_.push_back(std::string("rake: grid minor search: ") + e.what());
    }
  }
  if (model) {
    for (auto strategy : {RakeStrategy::kRows, RakeStrategy::kRing}) {
      RakeEmbedding rake;
      try {
        rake = rake_from_grid_model(g_, model->first, model->second, strategy, &log_);
      } catch (const Error& e) {
        log_.push_back("rake: " + to_string(strategy) + ": " + e.what());
        continue;
      }
      if (through_rake(rake, "grid " + to_string(strategy))) return true;
    }
  }
  if (auto rake = rake_on_longest_path()) return through_rake(*rake, "longest path");
  return false;
}

bool Pipeline::through_rake(const RakeEmbedding& rake, const std::string& source) {
  log_.push_back("rake: " + source + " gives " + std::to_string(rake.teeth.size()) +
                 " teeth on a base of " + std::to_string(rake.base.size()));
  try {
    auto dense = densify_rake(g_, rake, s_, &log_, options_.canonical);
    if (auto* c = std::get_if<CanonicalWitness>(&dense)) return accept(*c, "densify");
    auto res = canonical_from_dense_rake(g_, std::get<RakeEmbedding>(dense), s_, q_, &log_,
                                         options_.limits, options_.canonical);
    if (auto* c = std::get_if<CanonicalWitness>(&res)) return accept(*c, "dense rake");
    return accept(std::get<Biclique>(res), "dense rake");
  } catch (const Error& e) {
    log_.push_back("rake: " + source + ": " + e.what());
    return false;
  }
}

std::optional<RakeEmbedding> Pipeline::rake_on_longest_path() {
  VertexSequence base;
  try {
    base = longest_path(g_, options_.limits.search);
  } catch (const ResourceLimit& e) {
    log_.push_back(std::string("rake: longest path: ") + e.what() + "; using a greedy path");
    base = greedy_path(g_);
  }
  if (base.empty()) return std::nullopt;
  std::vector<bool> taken(g_.order(), false);
  for (Vertex v : base) taken[v] = true;
  RakeEmbedding rake;
  rake.base = base;
  for (std::size_t i = 0; i < base.size(); ++i)
    for (Vertex w : g_.adjacent(base[i]))
      if (!taken[w]) {
        taken[w] = true;
        rake.teeth.emplace_back(w, i);
        break;
      }
  if (rake.teeth.size() < 3) {
    log_.push_back("rake: longest path carries " + std::to_string(rake.teeth.size()) + " teeth");
    return std::nullopt;
  }
  return rake;
}

bool Pipeline::paths() {
  VertexSequence p;
  try {
    p = longest_path(g_, options_.limits.search);
  } catch (const ResourceLimit& e) {
    log_.push_back(std::string("path: ") + e.what() + "; using a greedy path");
    p = greedy_path(g_);
  }
  if (p.empty()) return false;
  log_.push_back("path: longest path has " + std::to_string(p.size()) + " vertices");
  // Asking for order 2q makes the biclique branch return K_{q,q}.
  Witness w = induced_path_or_biclique(g_, p, s_, 2 * q_, options_.limits);
  for (auto& line : w.stage_log) log_.push_back("path: " + line);
  if (!w.conclusive()) {
    log_.push_back("path: " + std::get<Inconclusive>(w.value).reason);
    return false;
  }
  return accept(w.value, "path");
}

}  // namespace

Witness witness_pipeline(const Graph& g, std::size_t s, std::size_t q,
                         const PipelineOptions& options) {
  if (s == 0 || q == 0) throw MalformedInput("s and q must be positive");
  return Pipeline(g, s, q, options).run();
}

}  // namespace canonwit
