#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "canonwit/canonical.hpp"
#include "canonwit/graph.hpp"
#include "canonwit/oracles.hpp"

namespace canonwit {

// A rake as a subgraph of a host: a base path with pendant teeth. teeth[i] is
// (tooth vertex, index of its root in base).
struct RakeEmbedding {
  VertexSequence base;
  std::vector<std::pair<Vertex, std::size_t>> teeth;
  std::optional<std::size_t> density;

  friend bool operator==(const RakeEmbedding&, const RakeEmbedding&) = default;
};

struct InducedPathWitness {
  VertexSequence vertices;
  friend bool operator==(const InducedPathWitness&, const InducedPathWitness&) = default;
};

struct Inconclusive {
  std::string reason;
  friend bool operator==(const Inconclusive&, const Inconclusive&) = default;
};

using WitnessValue =
    std::variant<InducedPathWitness, Biclique, CanonicalWitness, RakeEmbedding, Inconclusive>;

struct Witness {
  WitnessValue value;
  std::vector<std::string> stage_log;

  bool conclusive() const { return !std::holds_alternative<Inconclusive>(value); }
  // "induced-path", "biclique", "canonical", "rake" or "inconclusive".
  std::string type() const;
};

// Rake invariants in subgraph semantics: base is a path, every tooth is
// adjacent to its root, teeth distinct and off the base, roots distinct, and
// with a density every window of that many base vertices holds a root.
Check check_rake(const Graph& g, const RakeEmbedding& r);

// Independent validation of any witness variant.
Check verify_witness(const Graph& g, const WitnessValue& w);

// --- JSON ------------------------------------------------------------------

std::string witness_to_json(const Witness& w, bool verified);
// Parses the witness document; malformed documents raise MalformedInput.
Witness witness_from_json(const std::string& text);

// --- generators ------------------------------------------------------------

// The rake graph with k teeth as a host of its own: the base is 0..m-1 with
// m = ell*(k-1)+3, and tooth i (numbered m+i) hangs from base vertex
// 1 + ell*i. ell = 1 gives the base 0..k+1 with every inner vertex a root.
Graph rake_graph(std::size_t k, std::size_t ell = 1);
RakeEmbedding rake_graph_embedding(std::size_t k, std::size_t ell = 1);

// --- extraction ------------------------------------------------------------

// Lower-level budget shared by the extraction routines; the oracle ceilings
// also apply to every sub-search.
struct ExtractionLimits {
  SearchLimits search;
  std::uint64_t step_budget = 200000;
};

std::optional<Biclique> biclique_from_families(const Graph& g,
                                               const std::vector<VertexSet>& fam_a,
                                               const std::vector<VertexSet>& fam_b,
                                               std::size_t q,
                                               const ExtractionLimits& limits = {});

// Induced path on s vertices or a K_{floor(q/2),ceil(q/2)} from a path, or
// Inconclusive. The log receives one line per recursion decision.
Witness induced_path_or_biclique(const Graph& g, const VertexSequence& path, std::size_t s,
                                 std::size_t q, const ExtractionLimits& limits = {});

enum class RakeStrategy {
  kRows,  // base material from model row 0, teeth from row 1
  kRing,  // base along the outer ring of the model, teeth from the next ring
};

std::string to_string(RakeStrategy s);

// The model is a minor model of the k x k grid, or (with 2k branch sets) of
// the k-comb: path 0..k-1 with pendant k+i on i.
RakeEmbedding rake_from_grid_model(const Graph& g, const Embedding& model, std::size_t k,
                                   RakeStrategy strategy = RakeStrategy::kRows,
                                   std::vector<std::string>* log = nullptr);

// An H-graph sitting in a host as a subgraph: body path plus the wing pairs
// at its first and last vertex.
struct HGraphEmbedding {
  VertexSequence body;
  std::pair<Vertex, Vertex> left_wings;
  std::pair<Vertex, Vertex> right_wings;
};

struct ShortPath {
  VertexSequence vertices;  // wing, body vertices..., wing
};

using ShortenResult = std::variant<ShortPath, CanonicalWitness>;

ShortenResult shorten_hgraph(const Graph& g, const HGraphEmbedding& h, std::size_t s,
                             const CanonicalOptions& options = {});

using DensifyResult = std::variant<RakeEmbedding, CanonicalWitness>;

DensifyResult densify_rake(const Graph& g, const RakeEmbedding& r, std::size_t s,
                           std::vector<std::string>* log = nullptr,
                           const CanonicalOptions& options = {});

using DenseRakeResult = std::variant<CanonicalWitness, Biclique>;

// Raises InsufficientInput when no branch of the case analysis applies.
DenseRakeResult canonical_from_dense_rake(const Graph& g, const RakeEmbedding& r,
                                          std::size_t s, std::size_t q,
                                          std::vector<std::string>* log = nullptr,
                                          const ExtractionLimits& limits = {},
                                          const CanonicalOptions& options = {});

enum class PipelineStage {
  kPipeline,   // direct search, then rakes, then paths
  kPath,       // longest path fed to induced_path_or_biclique only
  kDenseRake,  // rake route only
};

std::string to_string(PipelineStage s);
PipelineStage parse_stage(const std::string& text);

struct PipelineOptions {
  PipelineStage stage = PipelineStage::kPipeline;
  // Explicit grid model for the rake route; when absent a small grid minor
  // is searched for.
  std::optional<std::pair<Embedding, std::size_t>> grid_model;
  std::size_t searched_grid_order = 3;
  ExtractionLimits limits;
  CanonicalOptions canonical;
};

Witness witness_pipeline(const Graph& g, std::size_t s, std::size_t q,
                         const PipelineOptions& options = {});

}  // namespace canonwit
