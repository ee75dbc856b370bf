#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "canonwit/graph.hpp"

namespace canonwit {

enum class EmbeddingMode { kInduced, kSubgraph, kMinor };

std::string to_string(EmbeddingMode mode);

// Pattern vertex i maps to image[i] (induced/subgraph mode) or to the
// connected host set branch_sets[i] (minor mode).
struct Embedding {
  EmbeddingMode mode = EmbeddingMode::kInduced;
  std::vector<Vertex> image;
  std::vector<VertexSet> branch_sets;

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

// Resource ceilings for the exhaustive procedures. Exceeding one raises
// ResourceLimit rather than guessing.
struct SearchLimits {
  std::size_t pattern_vertices = 12;    // induced / subgraph patterns
  std::size_t minor_pattern_vertices = 16;
  std::size_t longest_path_vertices = 20;
  std::size_t induced_path_vertices = 24;
  std::size_t treewidth_vertices = 16;
  std::size_t exhaustive_host_vertices = 64;  // holes, cliques, bicliques
  // Search-node budget for a single call; 0 means unlimited.
  std::uint64_t node_budget = 0;

  // Defaults, with pattern_vertices overridden by CANONICAL_WITNESS_CEILING
  // when that variable holds a positive integer.
  static SearchLimits from_environment();
};

inline constexpr const char* kCeilingEnvVar = "CANONICAL_WITNESS_CEILING";

// Lexicographically least image vector (pattern vertices in ascending order),
// or nullopt when the pattern does not embed.
std::optional<Embedding> find_induced_embedding(const Graph& host, const Graph& pattern,
                                                const SearchLimits& limits = {});
std::optional<Embedding> find_subgraph_embedding(const Graph& host, const Graph& pattern,
                                                 const SearchLimits& limits = {});
std::optional<Embedding> find_minor_model(const Graph& host, const Graph& pattern,
                                          const SearchLimits& limits = {});

// Independent validator shared by every witness checker. Never calls the
// searchers.
Check validate_embedding(const Graph& host, const Graph& pattern, const Embedding& e);

// Maximum-cardinality (induced) path, lexicographically least among maxima.
// Lengths count vertices.
VertexSequence longest_path(const Graph& g, const SearchLimits& limits = {});
VertexSequence longest_induced_path(const Graph& g, const SearchLimits& limits = {});

struct Biclique {
  VertexSet side_a;
  VertexSet side_b;
  friend bool operator==(const Biclique&, const Biclique&) = default;
};

// K_{a,b} as a subgraph (sides disjoint, every cross pair adjacent, sides
// need not be independent). Least side_a first, then least side_b.
std::optional<Biclique> find_biclique(const Graph& g, std::size_t a, std::size_t b,
                                      const SearchLimits& limits = {});
std::optional<VertexSet> find_clique(const Graph& g, std::size_t t,
                                     const SearchLimits& limits = {});
std::optional<VertexSet> find_independent_set(const Graph& g, std::size_t t,
                                              const SearchLimits& limits = {});
// Largest independent set restricted to the given candidates, least among
// the maxima.
VertexSet maximum_independent_set(const Graph& g, const VertexSet& candidates,
                                  const SearchLimits& limits = {});
VertexSet maximum_clique(const Graph& g, const VertexSet& candidates,
                         const SearchLimits& limits = {});

std::size_t treewidth_exact(const Graph& g, const SearchLimits& limits = {});

// Induced cycle on at least max(4, min_len) vertices, rotated to start at its
// smallest vertex with the smaller neighbour second; least such sequence.
std::optional<VertexSequence> find_hole(const Graph& g, std::size_t min_len,
                                        const SearchLimits& limits = {});

// Direct checks used by witness validation.
Check check_biclique(const Graph& g, const VertexSet& a, const VertexSet& b);
Check check_hole(const Graph& g, std::span<const Vertex> cycle);

}  // namespace canonwit
