#include "canonwit/canonical.hpp"

#include <algorithm>
#include <limits>

#include "canonwit/error.hpp"

namespace canonwit {

std::string to_string(const CanonicalDescriptor& d) {
  if (d.kind == CanonicalKind::kHole) return "C" + std::to_string(d.order);
  switch (d.tightness) {
    case Tightness::kPlain: return "H" + std::to_string(d.order);
    case Tightness::kSemiTight: return "H'" + std::to_string(d.order);
    case Tightness::kTight: return "H''" + std::to_string(d.order);
  }
  return "?";
}

CanonicalDescriptor parse_descriptor(std::string_view text) {
  auto fail = [&]() -> CanonicalDescriptor {
    throw MalformedInput("bad canonical descriptor '" + std::string(text) + "'");
  };
  if (text.empty()) return fail();
  CanonicalDescriptor d;
  std::size_t pos = 1;
  if (text[0] == 'C') {
    d.kind = CanonicalKind::kHole;
  } else if (text[0] == 'H') {
    d.kind = CanonicalKind::kHGraph;
    while (pos < text.size() && text[pos] == '\'') ++pos;
    if (pos - 1 > 2) return fail();
    d.tightness = static_cast<Tightness>(pos - 1);
  } else {
    return fail();
  }
  if (pos == text.size()) return fail();
  std::size_t order = 0;
  for (; pos < text.size(); ++pos) {
    if (text[pos] < '0' || text[pos] > '9') return fail();
    order = order * 10 + static_cast<std::size_t>(text[pos] - '0');
    if (order > 1'000'000) return fail();
  }
  d.order = order;
  return d;
}

namespace {

void check_descriptor(const CanonicalDescriptor& d, const CanonicalOptions& options) {
  if (options.hgraph_minimum_order < kHGraphOrderFloor) {
    throw MalformedInput("H-graph minimum order " + std::to_string(options.hgraph_minimum_order) +
                         " is below the floor of " + std::to_string(kHGraphOrderFloor));
  }
  const std::size_t minimum =
      d.kind == CanonicalKind::kHole ? kHoleMinimumOrder : options.hgraph_minimum_order;
  if (d.order < minimum) {
    throw MalformedInput(to_string(d) + " is below the minimum order " + std::to_string(minimum));
  }
}

}  // namespace

Graph make_canonical(const CanonicalDescriptor& d, const CanonicalOptions& options) {
  check_descriptor(d, options);
  const std::size_t k = d.order;
  if (d.kind == CanonicalKind::kHole) return cycle_graph(k);

  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, k);
  edges.emplace_back(0, k + 1);
  edges.emplace_back(k - 1, k + 2);
  edges.emplace_back(k - 1, k + 3);
  if (d.tightness != Tightness::kPlain) edges.emplace_back(k + 2, k + 3);
  if (d.tightness == Tightness::kTight) edges.emplace_back(k, k + 1);
  return Graph::from_edge_list(k + 4, edges, std::max(k + 4, kDefaultVertexCeiling));
}

std::optional<CanonicalDescriptor> recognize_canonical(const Graph& g,
                                                       const CanonicalOptions& options) {
  const std::size_t n = g.order();
  std::vector<std::size_t> degrees(n);
  for (Vertex v = 0; v < n; ++v) degrees[v] = g.degree(v);
  std::sort(degrees.begin(), degrees.end());

  std::optional<CanonicalDescriptor> candidate;
  if (n >= kHoleMinimumOrder && g.edge_count() == n &&
      std::all_of(degrees.begin(), degrees.end(), [](auto d) { return d == 2; })) {
    candidate = CanonicalDescriptor::hole(n);
  } else if (n >= options.hgraph_minimum_order + 4) {
    const std::size_t k = n - 4;
    const std::size_t plain_edges = k - 1 + 4;
    if (g.edge_count() >= plain_edges && g.edge_count() <= plain_edges + 2) {
      candidate = CanonicalDescriptor::h_graph(
          k, static_cast<Tightness>(g.edge_count() - plain_edges));
    }
  }
  if (!candidate) return std::nullopt;

  Graph model = make_canonical(*candidate, options);
  std::vector<std::size_t> model_degrees(n);
  for (Vertex v = 0; v < n; ++v) model_degrees[v] = model.degree(v);
  std::sort(model_degrees.begin(), model_degrees.end());
  if (model_degrees != degrees) return std::nullopt;

  SearchLimits unlimited;
  unlimited.pattern_vertices = std::numeric_limits<std::size_t>::max();
  if (find_induced_embedding(g, model, unlimited)) return candidate;
  return std::nullopt;
}

std::vector<CanonicalDescriptor> enumerate_canonical(std::size_t max_order,
                                                     const CanonicalOptions& options) {
  check_descriptor(CanonicalDescriptor::hole(kHoleMinimumOrder), options);
  std::vector<CanonicalDescriptor> out;
  for (std::size_t k = kHoleMinimumOrder; k <= max_order; ++k)
    out.push_back(CanonicalDescriptor::hole(k));
  for (auto t : {Tightness::kPlain, Tightness::kSemiTight, Tightness::kTight})
    for (std::size_t k = options.hgraph_minimum_order; k <= max_order; ++k)
      out.push_back(CanonicalDescriptor::h_graph(k, t));
  return out;
}

AntichainReport verify_antichain(const std::vector<CanonicalDescriptor>& descriptors,
                                 const SearchLimits& limits) {
  CanonicalOptions floor_options{kHGraphOrderFloor};
  std::vector<CanonicalDescriptor> sorted = descriptors;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<Graph> graphs;
  graphs.reserve(sorted.size());
  for (const auto& d : sorted) graphs.push_back(make_canonical(d, floor_options));

  AntichainReport report;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = 0; j < sorted.size(); ++j) {
      if (i == j) continue;
      ++report.pairs_checked;
      if (auto e = find_induced_embedding(graphs[j], graphs[i], limits))
        report.violations.push_back({sorted[i], sorted[j], std::move(*e)});
    }
  }
  return report;
}

std::optional<std::size_t> smallest_safe_hgraph_minimum(std::size_t max_order,
                                                        const SearchLimits& limits) {
  for (std::size_t m = kHGraphOrderFloor; m <= max_order; ++m) {
    std::vector<CanonicalDescriptor> family;
    for (std::size_t k = kHoleMinimumOrder; k <= max_order; ++k)
      family.push_back(CanonicalDescriptor::hole(k));
    for (auto t : {Tightness::kPlain, Tightness::kSemiTight, Tightness::kTight})
      for (std::size_t k = m; k <= max_order; ++k)
        family.push_back(CanonicalDescriptor::h_graph(k, t));
    if (verify_antichain(family, limits).ok()) return m;
  }
  return std::nullopt;
}

Check check_canonical_witness(const Graph& host, const CanonicalWitness& w,
                              const CanonicalOptions& options) {
  if (w.embedding.mode != EmbeddingMode::kInduced)
    return Check::fail("canonical witness must use an induced embedding");
  Graph model;
  try {
    model = make_canonical(w.descriptor, options);
  } catch (const MalformedInput& e) {
    return Check::fail(e.what());
  }
  return validate_embedding(host, model, w.embedding);
}

CanonicalWitness hole_witness(std::span<const Vertex> cycle) {
  return {CanonicalDescriptor::hole(cycle.size()),
          Embedding{EmbeddingMode::kInduced, {cycle.begin(), cycle.end()}, {}}};
}

CanonicalWitness h_graph_witness(const Graph& host, std::span<const Vertex> body,
                                 std::pair<Vertex, Vertex> first_wings,
                                 std::pair<Vertex, Vertex> last_wings) {
  const bool first_joined = host.has_edge(first_wings.first, first_wings.second);
  const bool last_joined = host.has_edge(last_wings.first, last_wings.second);
  std::vector<Vertex> ordered(body.begin(), body.end());
  if (first_joined && !last_joined) {
    std::reverse(ordered.begin(), ordered.end());
    std::swap(first_wings, last_wings);
  }
  Tightness t = first_joined && last_joined ? Tightness::kTight
                : (first_joined || last_joined) ? Tightness::kSemiTight
                                                : Tightness::kPlain;
  ordered.push_back(first_wings.first);
  ordered.push_back(first_wings.second);
  ordered.push_back(last_wings.first);
  ordered.push_back(last_wings.second);
  return {CanonicalDescriptor::h_graph(body.size(), t),
          Embedding{EmbeddingMode::kInduced, std::move(ordered), {}}};
}

namespace {

// Enumerates chordless paths as H-graph bodies and looks for two wing pairs.
class HGraphSearch {
 public:
  HGraphSearch(const Graph& g, std::size_t min_order, std::uint64_t budget)
      : g_(g), min_order_(min_order), budget_(budget) {}

  std::optional<CanonicalWitness> run() {
    for (Vertex s = 0; s < g_.order(); ++s) {
      body_ = {s};
      Bitset blocked = g_.empty_set();
      blocked.set(s);
      if (grow(blocked)) return found_;
    }
    return std::nullopt;
  }

 private:
  bool grow(const Bitset& blocked) {
    if (budget_ != 0 && ++ticks_ > budget_)
      throw ResourceLimit("H-graph search budget of " + std::to_string(budget_) + " nodes exhausted");
    if (body_.size() >= min_order_ && try_wings()) return true;
    const Vertex last = body_.back();
    Bitset candidates = g_.neighbours(last);
    candidates.subtract(blocked);
    for (std::size_t w = candidates.first(); w != Bitset::kNpos; w = candidates.next(w + 1)) {
      Bitset next = blocked;
      next.set(w);
      next |= g_.neighbours(last);
      body_.push_back(static_cast<Vertex>(w));
      if (grow(next)) return true;
      body_.pop_back();
    }
    return false;
  }

  // Vertices adjacent to body[end] and to no other body vertex.
  Bitset private_neighbours(std::size_t end) const {
    Bitset out = g_.neighbours(body_[end]);
    for (std::size_t i = 0; i < body_.size(); ++i) {
      out.reset(body_[i]);
      if (i != end) out.subtract(g_.neighbours(body_[i]));
    }
    return out;
  }

  bool try_wings() {
    const Bitset left = private_neighbours(0);
    const Bitset right = private_neighbours(body_.size() - 1);
    if (left.count() < 2 || right.count() < 2) return false;
    auto l = left.to_vector();
    auto r = right.to_vector();
    for (std::size_t a = 0; a < l.size(); ++a) {
      for (std::size_t b = a + 1; b < l.size(); ++b) {
        Vertex l1 = static_cast<Vertex>(l[a]), l2 = static_cast<Vertex>(l[b]);
        for (std::size_t c = 0; c < r.size(); ++c) {
          Vertex r1 = static_cast<Vertex>(r[c]);
          if (g_.has_edge(l1, r1) || g_.has_edge(l2, r1)) continue;
          for (std::size_t d = c + 1; d < r.size(); ++d) {
            Vertex r2 = static_cast<Vertex>(r[d]);
            if (g_.has_edge(l1, r2) || g_.has_edge(l2, r2)) continue;
            found_ = h_graph_witness(g_, body_, {l1, l2}, {r1, r2});
            return true;
          }
        }
      }
    }
    return false;
  }

  const Graph& g_;
  std::size_t min_order_;
  std::uint64_t budget_;
  std::uint64_t ticks_ = 0;
  VertexSequence body_;
  CanonicalWitness found_;
};

}  // namespace

std::optional<CanonicalWitness> find_canonical(const Graph& g, std::size_t min_order,
                                               const SearchLimits& limits,
                                               const CanonicalOptions& options) {
  if (g.order() > limits.exhaustive_host_vertices) {
    throw ResourceLimit("canonical search host order of " + std::to_string(g.order()) +
                        " exceeds the ceiling of " +
                        std::to_string(limits.exhaustive_host_vertices));
  }
  if (auto cycle = find_hole(g, std::max(min_order, kHoleMinimumOrder), limits))
    return hole_witness(*cycle);
  const std::size_t body = std::max(min_order, options.hgraph_minimum_order);
  return HGraphSearch(g, body, limits.node_budget).run();
}

}  // namespace canonwit
