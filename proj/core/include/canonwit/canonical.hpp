#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "canonwit/graph.hpp"
#include "canonwit/oracles.hpp"

namespace canonwit {

// Members of the canonical family: holes (chordless cycles on >= 4
// vertices) and H-graphs (a chordless body path whose two ends each carry
// two pendant wings; semi-tight joins one wing pair, tight joins both).
enum class CanonicalKind { kHole = 0, kHGraph = 1 };
enum class Tightness { kPlain = 0, kSemiTight = 1, kTight = 2 };

struct CanonicalDescriptor {
  CanonicalKind kind = CanonicalKind::kHole;
  // Vertex count of a hole; body vertex count of an H-graph.
  std::size_t order = 4;
  Tightness tightness = Tightness::kPlain;  // ignored for holes

  static CanonicalDescriptor hole(std::size_t order) {
    return {CanonicalKind::kHole, order, Tightness::kPlain};
  }
  static CanonicalDescriptor h_graph(std::size_t order, Tightness t = Tightness::kPlain) {
    return {CanonicalKind::kHGraph, order, t};
  }

  std::size_t vertex_count() const { return kind == CanonicalKind::kHole ? order : order + 4; }

  friend bool operator==(const CanonicalDescriptor& a, const CanonicalDescriptor& b) {
    return a.kind == b.kind && a.order == b.order &&
           (a.kind == CanonicalKind::kHole || a.tightness == b.tightness);
  }
  // Enumeration order: kind, then tightness, then order.
  friend std::strong_ordering operator<=>(const CanonicalDescriptor& a,
                                          const CanonicalDescriptor& b) {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    if (a.kind == CanonicalKind::kHGraph) {
      if (auto c = a.tightness <=> b.tightness; c != 0) return c;
    }
    return a.order <=> b.order;
  }
};

inline constexpr std::size_t kHoleMinimumOrder = 4;
inline constexpr std::size_t kDefaultHGraphMinimumOrder = 4;
inline constexpr std::size_t kHGraphOrderFloor = 2;

struct CanonicalOptions {
  // Smallest H-graph order admitted to the family; values below
  // kHGraphOrderFloor are rejected.
  std::size_t hgraph_minimum_order = kDefaultHGraphMinimumOrder;
};

// "C7", "H5", "H'5", "H''9".
std::string to_string(const CanonicalDescriptor& d);
CanonicalDescriptor parse_descriptor(std::string_view text);

// Hole: C_order on 0..order-1 in cyclic order. H-graph of order k: body
// 0..k-1, wings k, k+1 on vertex 0 and k+2, k+3 on vertex k-1; semi-tight
// joins k+2 and k+3, tight also joins k and k+1.
Graph make_canonical(const CanonicalDescriptor& d, const CanonicalOptions& options = {});

std::optional<CanonicalDescriptor> recognize_canonical(const Graph& g,
                                                       const CanonicalOptions& options = {});

// All descriptors with order in [minimum, max_order], sorted by
// (kind, tightness, order).
std::vector<CanonicalDescriptor> enumerate_canonical(std::size_t max_order,
                                                     const CanonicalOptions& options = {});

struct AntichainViolation {
  CanonicalDescriptor pattern;
  CanonicalDescriptor host;
  Embedding embedding;
};

struct AntichainReport {
  std::size_t pairs_checked = 0;
  std::vector<AntichainViolation> violations;  // sorted by (pattern, host)
  bool ok() const { return violations.empty(); }
};

// Checks every ordered pair of distinct descriptors for an induced
// embedding. The descriptors are built with the H-graph floor so that any
// list (including sub-minimum orders) can be probed.
AntichainReport verify_antichain(const std::vector<CanonicalDescriptor>& descriptors,
                                 const SearchLimits& limits = {});

// Smallest H-graph minimum m in [floor, max_order] such that holes of order
// 4..max_order together with H-graphs of order m..max_order form an
// antichain; nullopt if none does.
std::optional<std::size_t> smallest_safe_hgraph_minimum(std::size_t max_order,
                                                        const SearchLimits& limits = {});

// A canonical graph embedded (induced mode) into a host: image[i] is the host
// vertex playing vertex i of make_canonical(descriptor).
struct CanonicalWitness {
  CanonicalDescriptor descriptor;
  Embedding embedding;
};

Check check_canonical_witness(const Graph& host, const CanonicalWitness& w,
                              const CanonicalOptions& options = {});

// Builds the witness for a hole given in cyclic order.
CanonicalWitness hole_witness(std::span<const Vertex> cycle);

// Builds the witness for an H-graph from its body (in order) and the wing
// pairs at the first and last body vertex. Tightness is read off the host;
// the body is reversed when only the first pair is joined. Not validated.
CanonicalWitness h_graph_witness(const Graph& host, std::span<const Vertex> body,
                                 std::pair<Vertex, Vertex> first_wings,
                                 std::pair<Vertex, Vertex> last_wings);

// Direct search for an induced canonical graph of order >= min_order: holes
// first (shortest qualifying search order), then H-graphs.
std::optional<CanonicalWitness> find_canonical(const Graph& g, std::size_t min_order,
                                               const SearchLimits& limits = {},
                                               const CanonicalOptions& options = {});

}  // namespace canonwit
