#include "canonwit/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "canonwit/error.hpp"

namespace canonwit {

std::string to_string(EmbeddingMode mode) {
  switch (mode) {
    case EmbeddingMode::kInduced: return "induced";
    case EmbeddingMode::kSubgraph: return "subgraph";
    case EmbeddingMode::kMinor: return "minor";
  }
  return "unknown";
}

SearchLimits SearchLimits::from_environment() {
  SearchLimits limits;
  if (const char* raw = std::getenv(kCeilingEnvVar); raw != nullptr) {
    char* end = nullptr;
    long long value = std::strtoll(raw, &end, 10);
    if (end != raw && *end == '\0' && value > 0)
      limits.pattern_vertices = static_cast<std::size_t>(value);
  }
  return limits;
}

namespace {

class Budget {
 public:
  Budget(std::uint64_t limit, const char* what) : limit_(limit), what_(what) {}

  void tick() {
    if (limit_ != 0 && ++used_ > limit_) {
      throw ResourceLimit(std::string(what_) + ": search budget of " + std::to_string(limit_) +
                          " nodes exhausted");
    }
  }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
  const char* what_;
};

void require_at_most(std::size_t value, std::size_t ceiling, const std::string& what) {
  if (value > ceiling) {
    throw ResourceLimit(what + " of " + std::to_string(value) + " exceeds the ceiling of " +
                        std::to_string(ceiling));
  }
}

std::size_t component_count(const Graph& g) {
  std::vector<bool> seen(g.order(), false);
  std::size_t components = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    ++components;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.adjacent(v))
        if (!seen[w]) seen[w] = true, stack.push_back(w);
    }
  }
  return components;
}

// Cycle rank m - n + c; never increases under deletion or contraction.
long long cycle_rank(const Graph& g) {
  return static_cast<long long>(g.edge_count()) - static_cast<long long>(g.order()) +
         static_cast<long long>(component_count(g));
}

class EmbeddingSearch {
 public:
  EmbeddingSearch(const Graph& host, const Graph& pattern, bool induced, Budget& budget)
      : host_(host), pattern_(pattern), induced_(induced), budget_(budget),
        image_(pattern.order()), used_(host.order()) {}

  std::optional<std::vector<Vertex>> run() {
    if (extend(0)) return image_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t i) {
    if (i == pattern_.order()) return true;
    budget_.tick();
    Bitset candidates = used_.complement();
    for (std::size_t j = 0; j < i; ++j) {
      if (pattern_.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j))) {
        candidates &= host_.neighbours(image_[j]);
      } else if (induced_) {
        candidates.subtract(host_.neighbours(image_[j]));
      }
    }
    const std::size_t need = pattern_.degree(static_cast<Vertex>(i));
    for (std::size_t v = candidates.first(); v != Bitset::kNpos; v = candidates.next(v + 1)) {
      if (host_.degree(static_cast<Vertex>(v)) < need) continue;
      image_[i] = static_cast<Vertex>(v);
      used_.set(v);
      if (extend(i + 1)) return true;
      used_.reset(v);
    }
    return false;
  }

  const Graph& host_;
  const Graph& pattern_;
  bool induced_;
  Budget& budget_;
  std::vector<Vertex> image_;
  Bitset used_;
};

std::optional<Embedding> find_embedding(const Graph& host, const Graph& pattern,
                                        const SearchLimits& limits, bool induced,
                                        bool check_ceiling) {
  if (pattern.order() > host.order() || pattern.edge_count() > host.edge_count()) return std::nullopt;
  if (induced && pattern.order() == host.order() && pattern.edge_count() != host.edge_count())
    return std::nullopt;
  if (check_ceiling) require_at_most(pattern.order(), limits.pattern_vertices, "pattern order");
  Budget budget(limits.node_budget, induced ? "induced embedding" : "subgraph embedding");
  EmbeddingSearch search(host, pattern, induced, budget);
  if (auto image = search.run()) {
    return Embedding{induced ? EmbeddingMode::kInduced : EmbeddingMode::kSubgraph,
                     std::move(*image), {}};
  }
  return std::nullopt;
}

}  // namespace

std::optional<Embedding> find_induced_embedding(const Graph& host, const Graph& pattern,
                                                const SearchLimits& limits) {
  return find_embedding(host, pattern, limits, true, true);
}

std::optional<Embedding> find_subgraph_embedding(const Graph& host, const Graph& pattern,
                                                 const SearchLimits& limits) {
  return find_embedding(host, pattern, limits, false, true);
}

namespace {

// Depth-first search over edge contractions of the host; at each quotient the
// pattern is sought as a subgraph, which accounts for deletions.
class MinorSearch {
 public:
  MinorSearch(const Graph& host, const Graph& pattern, Budget& budget, std::uint64_t inner_budget)
      : host_(host), pattern_(pattern), budget_(budget), inner_budget_(inner_budget) {}

  std::optional<std::vector<VertexSet>> run() {
    std::vector<Vertex> label(host_.order());
    std::iota(label.begin(), label.end(), Vertex{0});
    return visit(label);
  }

 private:
  std::optional<std::vector<VertexSet>> visit(const std::vector<Vertex>& label) {
    budget_.tick();
    Vertex groups = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
    std::vector<Edge> quotient_edges;
    for (auto [u, v] : host_.edges()) {
      if (label[u] != label[v])
        quotient_edges.emplace_back(std::min(label[u], label[v]), std::max(label[u], label[v]));
    }
    Graph quotient = Graph::from_edge_list(groups, quotient_edges, host_.order());
    if (quotient.edge_count() < pattern_.edge_count()) return std::nullopt;
    if (cycle_rank(quotient) < cycle_rank(pattern_)) return std::nullopt;

    SearchLimits unlimited;
    unlimited.pattern_vertices = std::numeric_limits<std::size_t>::max();
    unlimited.node_budget = inner_budget_;
    if (auto e = find_embedding(quotient, pattern_, unlimited, false, false)) {
      std::vector<VertexSet> sets(pattern_.order());
      for (std::size_t i = 0; i < pattern_.order(); ++i)
        for (Vertex v = 0; v < host_.order(); ++v)
          if (label[v] == e->image[i]) sets[i].push_back(v);
      return sets;
    }
    if (quotient.order() <= pattern_.order()) return std::nullopt;

    for (auto [a, b] : quotient.edges()) {
      std::vector<Vertex> next = label;
      for (auto& l : next) {
        if (l == b) l = a;
      }
      normalize(next);
      if (!seen_.insert(next).second) continue;
      if (auto found = visit(next)) return found;
    }
    return std::nullopt;
  }

  // Renumber groups by first occurrence so equal partitions compare equal.
  static void normalize(std::vector<Vertex>& label) {
    std::vector<Vertex> remap(label.size(), static_cast<Vertex>(-1));
    Vertex next = 0;
    for (auto& l : label) {
      if (remap[l] == static_cast<Vertex>(-1)) remap[l] = next++;
      l = remap[l];
    }
  }

  const Graph& host_;
  const Graph& pattern_;
  Budget& budget_;
  std::uint64_t inner_budget_;
  std::set<std::vector<Vertex>> seen_;
};

}  // namespace

std::optional<Embedding> find_minor_model(const Graph& host, const Graph& pattern,
                                          const SearchLimits& limits) {
  if (pattern.order() > host.order() || pattern.edge_count() > host.edge_count()) return std::nullopt;
  if (cycle_rank(pattern) > cycle_rank(host)) return std::nullopt;
  require_at_most(pattern.order(), limits.minor_pattern_vertices, "minor pattern order");
  Budget budget(limits.node_budget, "minor model");
  MinorSearch search(host, pattern, budget, limits.node_budget);
  if (auto sets = search.run()) return Embedding{EmbeddingMode::kMinor, {}, std::move(*sets)};
  return std::nullopt;
}

namespace {

std::string pair_text(Vertex a, Vertex b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

Check validate_injective_map(const Graph& host, const Graph& pattern, const Embedding& e) {
  if (e.image.size() != pattern.order()) return Check::fail("image size differs from pattern order");
  Bitset used = host.empty_set();
  for (Vertex v : e.image) {
    if (!host.contains(v)) return Check::fail("image vertex " + std::to_string(v) + " out of range");
    if (used.test(v)) return Check::fail("image vertex " + std::to_string(v) + " used twice");
    used.set(v);
  }
  for (Vertex i = 0; i < pattern.order(); ++i) {
    for (Vertex j = i + 1; j < pattern.order(); ++j) {
      bool pe = pattern.has_edge(i, j);
      bool he = host.has_edge(e.image[i], e.image[j]);
      if (pe && !he) return Check::fail("pattern edge " + pair_text(i, j) + " missing in host");
      if (!pe && he && e.mode == EmbeddingMode::kInduced)
        return Check::fail("host edge " + pair_text(e.image[i], e.image[j]) +
                           " not in pattern");
    }
  }
  return Check::pass();
}

bool connected_within(const Graph& host, const VertexSet& set) {
  if (set.empty()) return false;
  Bitset in = host.empty_set();
  for (Vertex v : set) in.set(v);
  Bitset reached = host.empty_set();
  reached.set(set.front());
  std::vector<Vertex> stack{set.front()};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : host.adjacent(v)) {
      if (in.test(w) && !reached.test(w)) {
        reached.set(w);
        stack.push_back(w);
      }
    }
  }
  return reached.count() == set.size();
}

Check validate_minor(const Graph& host, const Graph& pattern, const Embedding& e) {
  if (e.branch_sets.size() != pattern.order())
    return Check::fail("branch set count differs from pattern order");
  std::vector<int> owner(host.order(), -1);
  for (std::size_t i = 0; i < e.branch_sets.size(); ++i) {
    const auto& set = e.branch_sets[i];
    if (set.empty()) return Check::fail("branch set " + std::to_string(i) + " is empty");
    for (Vertex v : set) {
      if (!host.contains(v)) return Check::fail("branch vertex " + std::to_string(v) + " out of range");
      if (owner[v] != -1) {
        return Check::fail("vertex " + std::to_string(v) + " lies in branch sets " +
                           std::to_string(owner[v]) + " and " + std::to_string(i));
      }
      owner[v] = static_cast<int>(i);
    }
    if (!connected_within(host, set))
      return Check::fail("branch set " + std::to_string(i) + " is not connected");
  }
  for (auto [a, b] : pattern.edges()) {
    bool linked = false;
    for (Vertex u : e.branch_sets[a]) {
      for (Vertex w : host.adjacent(u)) {
        if (owner[w] == static_cast<int>(b)) {
          linked = true;
          break;
        }
      }
      if (linked) break;
    }
    if (!linked) return Check::fail("no host edge between branch sets " + pair_text(a, b));
  }
  return Check::pass();
}

}  // namespace

Check validate_embedding(const Graph& host, const Graph& pattern, const Embedding& e) {
  if (e.mode == EmbeddingMode::kMinor) return validate_minor(host, pattern, e);
  return validate_injective_map(host, pattern, e);
}

namespace {

class PathSearch {
 public:
  PathSearch(const Graph& g, bool induced, Budget& budget)
      : g_(g), induced_(induced), budget_(budget) {}

  VertexSequence run() {
    const std::size_t n = g_.order();
    if (n == 0) return {};
    upper_ = n;
    for (Vertex s = 0; s < n && best_.size() < upper_; ++s) {
      Bitset blocked = g_.empty_set();
      blocked.set(s);
      current_ = {s};
      if (current_.size() > best_.size()) best_ = current_;
      extend(s, blocked);
    }
    return best_;
  }

 private:
  // blocked: vertices that may not be appended next (on the path, or for
  // induced paths adjacent to a non-final path vertex).
  void extend(Vertex last, const Bitset& blocked) {
    if (best_.size() == upper_) return;
    budget_.tick();
    Bitset free = blocked.complement();
    if (current_.size() + reachable(last, free) <= best_.size()) return;

    Bitset candidates = g_.neighbours(last) & free;
    for (std::size_t w = candidates.first(); w != Bitset::kNpos; w = candidates.next(w + 1)) {
      Bitset next = blocked;
      next.set(w);
      if (induced_) next |= g_.neighbours(last);
      current_.push_back(static_cast<Vertex>(w));
      if (current_.size() > best_.size()) best_ = current_;
      extend(static_cast<Vertex>(w), next);
      current_.pop_back();
      if (best_.size() == upper_) return;
    }
  }

  std::size_t reachable(Vertex from, const Bitset& free) const {
    Bitset seen = g_.empty_set();
    Bitset frontier = g_.neighbours(from) & free;
    std::size_t count = 0;
    while (frontier.any()) {
      seen |= frontier;
      count += frontier.count();
      Bitset next = g_.empty_set();
      frontier.for_each([&](std::size_t v) { next |= g_.neighbours(static_cast<Vertex>(v)); });
      next &= free;
      next.subtract(seen);
      frontier = std::move(next);
    }
    return count;
  }

  const Graph& g_;
  bool induced_;
  Budget& budget_;
  VertexSequence current_;
  VertexSequence best_;
  std::size_t upper_ = 0;
};

}  // namespace

VertexSequence longest_path(const Graph& g, const SearchLimits& limits) {
  require_at_most(g.order(), limits.longest_path_vertices, "longest-path host order");
  Budget budget(limits.node_budget, "longest path");
  return PathSearch(g, false, budget).run();
}

VertexSequence longest_induced_path(const Graph& g, const SearchLimits& limits) {
  require_at_most(g.order(), limits.induced_path_vertices, "induced-path host order");
  Budget budget(limits.node_budget, "longest induced path");
  return PathSearch(g, true, budget).run();
}

namespace {

// Lexicographically first k-subset of `pool` (ascending) all of whose members
// lie in the running intersection; `adjacency` selects clique vs. independent.
class SubsetSearch {
 public:
  SubsetSearch(const Graph& g, bool independent, Budget& budget)
      : g_(g), independent_(independent), budget_(budget) {}

  std::optional<VertexSet> first_of_size(const Bitset& pool, std::size_t k) {
    target_ = k;
    chosen_.clear();
    if (grow(pool)) return chosen_;
    return std::nullopt;
  }

  VertexSet maximum(const Bitset& pool) {
    best_.clear();
    chosen_.clear();
    grow_max(pool);
    return best_;
  }

 private:
  Bitset compatible(Vertex v, const Bitset& pool) const {
    Bitset next = pool;
    if (independent_) {
      next.subtract(g_.neighbours(v));
    } else {
      next &= g_.neighbours(v);
    }
    return next;
  }

  bool grow(const Bitset& pool) {
    if (chosen_.size() == target_) return true;
    budget_.tick();
    if (chosen_.size() + pool.count() < target_) return false;
    for (std::size_t v = pool.first(); v != Bitset::kNpos; v = pool.next(v + 1)) {
      Bitset rest = compatible(static_cast<Vertex>(v), pool);
      // Only later vertices, so subsets are generated in ascending order.
      for (std::size_t u = rest.first(); u != Bitset::kNpos && u <= v; u = rest.next(u + 1)) rest.reset(u);
      chosen_.push_back(static_cast<Vertex>(v));
      if (grow(rest)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  void grow_max(const Bitset& pool) {
    budget_.tick();
    if (chosen_.size() > best_.size()) best_ = chosen_;
    if (chosen_.size() + pool.count() <= best_.size()) return;
    for (std::size_t v = pool.first(); v != Bitset::kNpos; v = pool.next(v + 1)) {
      Bitset rest = compatible(static_cast<Vertex>(v), pool);
      for (std::size_t u = rest.first(); u != Bitset::kNpos && u <= v; u = rest.next(u + 1)) rest.reset(u);
      chosen_.push_back(static_cast<Vertex>(v));
      grow_max(rest);
      chosen_.pop_back();
    }
  }

  const Graph& g_;
  bool independent_;
  Budget& budget_;
  std::size_t target_ = 0;
  VertexSet chosen_;
  VertexSet best_;
};

Bitset pool_of(const Graph& g, const VertexSet& candidates) {
  Bitset pool = g.empty_set();
  for (Vertex v : candidates) {
    if (!g.contains(v)) throw MalformedInput("candidate vertex " + std::to_string(v) + " out of range");
    pool.set(v);
  }
  return pool;
}

}  // namespace

std::optional<VertexSet> find_clique(const Graph& g, std::size_t t, const SearchLimits& limits) {
  require_at_most(g.order(), limits.exhaustive_host_vertices, "clique host order");
  Budget budget(limits.node_budget, "clique");
  return SubsetSearch(g, false, budget).first_of_size(g.full_set(), t);
}

std::optional<VertexSet> find_independent_set(const Graph& g, std::size_t t,
                                              const SearchLimits& limits) {
  require_at_most(g.order(), limits.exhaustive_host_vertices, "independent-set host order");
  Budget budget(limits.node_budget, "independent set");
  return SubsetSearch(g, true, budget).first_of_size(g.full_set(), t);
}

VertexSet maximum_independent_set(const Graph& g, const VertexSet& candidates,
                                  const SearchLimits& limits) {
  require_at_most(candidates.size(), limits.exhaustive_host_vertices, "independent-set candidates");
  Budget budget(limits.node_budget, "maximum independent set");
  return SubsetSearch(g, true, budget).maximum(pool_of(g, candidates));
}

VertexSet maximum_clique(const Graph& g, const VertexSet& candidates, const SearchLimits& limits) {
  require_at_most(candidates.size(), limits.exhaustive_host_vertices, "clique candidates");
  Budget budget(limits.node_budget, "maximum clique");
  return SubsetSearch(g, false, budget).maximum(pool_of(g, candidates));
}

std::optional<Biclique> find_biclique(const Graph& g, std::size_t a, std::size_t b,
                                      const SearchLimits& limits) {
  require_at_most(g.order(), limits.exhaustive_host_vertices, "biclique host order");
  Budget budget(limits.node_budget, "biclique");
  if (a + b > g.order()) return std::nullopt;

  VertexSet side_a;
  auto finish = [&](const Bitset& common) -> std::optional<Biclique> {
    if (common.count() < b) return std::nullopt;
    VertexSet side_b;
    for (std::size_t v = common.first(); side_b.size() < b; v = common.next(v + 1))
      side_b.push_back(static_cast<Vertex>(v));
    return Biclique{side_a, side_b};
  };

  // common: vertices adjacent to every member of side_a chosen so far (all
  // vertices while side_a is empty, minus side_a itself).
  auto grow = [&](auto&& self, std::size_t from, const Bitset& common) -> std::optional<Biclique> {
    if (side_a.size() == a) return finish(common);
    budget.tick();
    for (std::size_t v = from; v < g.order(); ++v) {
      Bitset next = common & g.neighbours(static_cast<Vertex>(v));
      if (side_a.empty()) next = g.neighbours(static_cast<Vertex>(v));
      next.reset(v);
      if (next.count() < b) continue;
      side_a.push_back(static_cast<Vertex>(v));
      if (auto found = self(self, v + 1, next)) return found;
      side_a.pop_back();
    }
    return std::nullopt;
  };
  if (a == 0) return finish(g.full_set());
  return grow(grow, 0, g.full_set());
}

std::size_t treewidth_exact(const Graph& g, const SearchLimits& limits) {
  require_at_most(g.order(), std::min<std::size_t>(limits.treewidth_vertices, 25), "treewidth host order");
  const std::size_t n = g.order();
  if (n <= 1) return 0;
  std::vector<std::uint32_t> adj(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.adjacent(v)) adj[v] |= std::uint32_t{1} << w;

  // Elimination-ordering recurrence: tw(S) = min over v in S of
  // max(tw(S - v), |Q(S - v, v)|), where Q(S, v) are the vertices outside
  // S + v reachable from v through S.
  const std::uint32_t full = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
  auto q_size = [&](std::uint32_t s, Vertex v) {
    std::uint32_t reached = std::uint32_t{1} << v;
    std::uint32_t frontier = reached;
    std::uint32_t outside = 0;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
      next &= ~reached;
      reached |= next;
      outside |= next & ~s;
      frontier = next & s;
    }
    return static_cast<int>(std::popcount(outside & full));
  };

  std::vector<std::int8_t> tw(std::size_t{1} << n, std::numeric_limits<std::int8_t>::max());
  tw[0] = -1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    int best = std::numeric_limits<int>::max();
    for (std::uint32_t bits = s; bits != 0; bits &= bits - 1) {
      Vertex v = static_cast<Vertex>(std::countr_zero(bits));
      std::uint32_t rest = s & ~(std::uint32_t{1} << v);
      int value = std::max<int>(tw[rest], q_size(rest, v));
      best = std::min(best, value);
    }
    tw[s] = static_cast<std::int8_t>(best);
    if (s == full) break;
  }
  return static_cast<std::size_t>(std::max<int>(0, tw[full]));
}

std::optional<VertexSequence> find_hole(const Graph& g, std::size_t min_len,
                                        const SearchLimits& limits) {
  require_at_most(g.order(), limits.exhaustive_host_vertices, "hole host order");
  Budget budget(limits.node_budget, "hole");
  const std::size_t need = std::max<std::size_t>(4, min_len);
  if (need > g.order()) return std::nullopt;

  VertexSequence path;
  // Path start s is the cycle minimum; every later vertex is > s. A vertex
  // adjacent to s can only close the cycle.
  auto grow = [&](auto&& self, Vertex s, const Bitset& blocked) -> bool {
    budget.tick();
    const Vertex last = path.back();
    Bitset candidates = g.neighbours(last);
    candidates.subtract(blocked);
    for (std::size_t w = candidates.first(); w != Bitset::kNpos; w = candidates.next(w + 1)) {
      const bool closes = path.size() >= 2 && g.has_edge(s, static_cast<Vertex>(w));
      if (closes) {
        if (path.size() + 1 >= need && path[1] < w) {
          path.push_back(static_cast<Vertex>(w));
          return true;
        }
        continue;
      }
      Bitset next = blocked;
      if (last != s) next |= g.neighbours(last);
      next.set(w);
      path.push_back(static_cast<Vertex>(w));
      if (self(self, s, next)) return true;
      path.pop_back();
    }
    return false;
  };

  for (Vertex s = 0; s < g.order(); ++s) {
    Bitset blocked = g.empty_set();
    for (Vertex v = 0; v <= s; ++v) blocked.set(v);
    path = {s};
    if (grow(grow, s, blocked)) return path;
  }
  return std::nullopt;
}

Check check_biclique(const Graph& g, const VertexSet& a, const VertexSet& b) {
  for (Vertex v : a)
    if (!g.contains(v)) return Check::fail("vertex " + std::to_string(v) + " out of range");
  for (Vertex v : b)
    if (!g.contains(v)) return Check::fail("vertex " + std::to_string(v) + " out of range");
  for (Vertex u : a)
    for (Vertex v : b)
      if (u == v) return Check::fail("sides intersect at " + std::to_string(u));
  for (Vertex u : a)
    for (Vertex v : b)
      if (!g.has_edge(u, v)) return Check::fail("missing edge " + pair_text(u, v));
  return Check::pass();
}

Check check_hole(const Graph& g, std::span<const Vertex> cycle) {
  if (cycle.size() < 4) return Check::fail("hole needs at least 4 vertices");
  if (auto c = is_chordless_path(g, cycle.subspan(0, cycle.size() - 1)); !c) return c;
  if (auto c = is_chordless_path(g, cycle.subspan(1)); !c) return c;
  Vertex first = cycle.front(), last = cycle.back();
  if (first == last) return Check::fail("vertex " + std::to_string(first) + " repeated");
  if (!g.has_edge(first, last)) return Check::fail("missing closing edge " + pair_text(last, first));
  return Check::pass();
}

}  // namespace canonwit
