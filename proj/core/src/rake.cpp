#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include "canonwit/error.hpp"
#include "canonwit/extraction.hpp"

namespace canonwit {

namespace {

std::string vtext(Vertex v) { return std::to_string(v); }

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

std::string Witness::type() const {
  return std::visit(Overloaded{[](const InducedPathWitness&) { return "induced-path"; },
                               [](const Biclique&) { return "biclique"; },
                               [](const CanonicalWitness&) { return "canonical"; },
                               [](const RakeEmbedding&) { return "rake"; },
                               [](const Inconclusive&) { return "inconclusive"; }},
                    value);
}

Check check_rake(const Graph& g, const RakeEmbedding& r) {
  if (r.base.empty()) return Check::fail("empty base");
  if (auto c = is_path(g, r.base); !c) return Check::fail("base: " + c.diagnostic);
  std::vector<bool> on_base(g.order(), false);
  for (Vertex v : r.base) on_base[v] = true;
  std::vector<bool> tooth_seen(g.order(), false);
  std::vector<bool> root_seen(r.base.size(), false);
  std::vector<std::size_t> roots;
  for (auto [t, idx] : r.teeth) {
    if (!g.contains(t)) return Check::fail("tooth " + vtext(t) + " out of range");
    if (idx >= r.base.size())
      return Check::fail("root index " + std::to_string(idx) + " outside the base");
    if (on_base[t]) return Check::fail("tooth " + vtext(t) + " lies on the base");
    if (tooth_seen[t]) return Check::fail("tooth " + vtext(t) + " repeated");
    if (root_seen[idx]) return Check::fail("root " + vtext(r.base[idx]) + " carries two teeth");
    if (!g.has_edge(t, r.base[idx]))
      return Check::fail("tooth " + vtext(t) + " not adjacent to its root " + vtext(r.base[idx]));
    tooth_seen[t] = true;
    root_seen[idx] = true;
    roots.push_back(idx);
  }
  if (r.density) {
    const std::size_t ell = *r.density;
    if (ell == 0) return Check::fail("density must be positive");
    if (roots.empty()) return Check::fail("no root for density " + std::to_string(ell));
    std::sort(roots.begin(), roots.end());
    // The end stretches may hold up to ell non-roots; inner windows of ell
    // consecutive vertices must each meet a root.
    if (roots.front() > ell)
      return Check::fail("first " + std::to_string(roots.front()) + " base vertices hold no root");
    if (r.base.size() - 1 - roots.back() > ell)
      return Check::fail("last " + std::to_string(r.base.size() - 1 - roots.back()) +
                         " base vertices hold no root");
    for (std::size_t i = 1; i < roots.size(); ++i)
      if (roots[i] - roots[i - 1] > ell)
        return Check::fail("window of " + std::to_string(ell) + " from base position " +
                           std::to_string(roots[i - 1] + 1) + " holds no root");
  }
  return Check::pass();
}

Check verify_witness(const Graph& g, const WitnessValue& w) {
  return std::visit(
      Overloaded{
          [&](const InducedPathWitness& p) {
            if (p.vertices.empty()) return Check::fail("empty path");
            return is_chordless_path(g, p.vertices);
          },
          [&](const Biclique& b) {
            for (const VertexSet* side : {&b.side_a, &b.side_b})
              for (std::size_t i = 1; i < side->size(); ++i)
                if ((*side)[i] <= (*side)[i - 1])
                  return Check::fail("side not a sorted set at " + vtext((*side)[i]));
            return check_biclique(g, b.side_a, b.side_b);
          },
          [&](const CanonicalWitness& c) { return check_canonical_witness(g, c); },
          [&](const RakeEmbedding& r) { return check_rake(g, r); },
          [&](const Inconclusive& i) { return Check::fail("not a witness: " + i.reason); }},
      w);
}

Graph rake_graph(std::size_t k, std::size_t ell) {
  RakeEmbedding r = rake_graph_embedding(k, ell);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < r.base.size(); ++i) edges.emplace_back(r.base[i], r.base[i + 1]);
  for (auto [t, idx] : r.teeth) edges.emplace_back(r.base[idx], t);
  return Graph::from_edge_list(r.base.size() + r.teeth.size(), edges);
}

RakeEmbedding rake_graph_embedding(std::size_t k, std::size_t ell) {
  if (k == 0) throw MalformedInput("rake needs at least one tooth");
  if (ell == 0) throw MalformedInput("rake density must be positive");
  const std::size_t m = ell * (k - 1) + 3;
  RakeEmbedding r;
  for (std::size_t i = 0; i < m; ++i) r.base.push_back(static_cast<Vertex>(i));
  for (std::size_t i = 0; i < k; ++i) r.teeth.emplace_back(static_cast<Vertex>(m + i), 1 + ell * i);
  r.density = ell;
  return r;
}

std::string to_string(RakeStrategy s) { return s == RakeStrategy::kRows ? "rows" : "ring"; }

namespace {

// Shortest path from a to b inside allowed, ties broken towards smaller
// vertices.
VertexSequence shortest_path_within(const Graph& g, const std::vector<bool>& allowed, Vertex a,
                                    Vertex b) {
  std::vector<Vertex> parent(g.order(), static_cast<Vertex>(-1));
  std::deque<Vertex> queue{a};
  parent[a] = a;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    if (u == b) break;
    for (Vertex w : g.adjacent(u))
      if (allowed[w] && parent[w] == static_cast<Vertex>(-1)) {
        parent[w] = u;
        queue.push_back(w);
      }
  }
  if (parent[b] == static_cast<Vertex>(-1)) return {};
  VertexSequence path{b};
  while (path.back() != a) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

// Path 0..k-1 with a pendant k+i on every i.
Graph comb_graph(std::size_t k) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < k; ++i) {
    if (i + 1 < k) edges.emplace_back(i, i + 1);
    edges.emplace_back(i, k + i);
  }
  return Graph::from_edge_list(2 * k, edges);
}

struct Segment {
  VertexSet v;        // union of chain branch sets
  VertexSet v_prime;  // tooth branch set
};

}  // namespace

RakeEmbedding rake_from_grid_model(const Graph& g, const Embedding& model, std::size_t k,
                                   RakeStrategy strategy, std::vector<std::string>* log) {
  if (k < 2) throw MalformedInput("grid order must be at least 2");
  if (model.mode != EmbeddingMode::kMinor) throw MalformedInput("grid model must be a minor model");
  Graph grid = grid_graph(k, k);
  bool comb = false;
  if (model.branch_sets.size() == 2 * k && k != 2) {
    grid = comb_graph(k);
    comb = true;
  }
  if (auto c = validate_embedding(g, grid, model); !c)
    throw MalformedInput(std::string(comb ? "invalid comb model: " : "invalid grid model: ") +
                         c.diagnostic);

  auto cell = [k](std::size_t r, std::size_t c) { return r * k + c; };
  std::vector<std::size_t> chain;
  if (comb || strategy == RakeStrategy::kRows) {
    for (std::size_t c = 0; c < k; ++c) chain.push_back(cell(0, c));
  } else {
    for (std::size_t c = 0; c < k; ++c) chain.push_back(cell(0, c));
    for (std::size_t r = 1; r < k; ++r) chain.push_back(cell(r, k - 1));
    for (std::size_t c = k - 1; c-- > 0;) chain.push_back(cell(k - 1, c));
  }
  std::vector<bool> in_chain(k * k, false), used(k * k, false);
  for (auto id : chain) in_chain[id] = used[id] = true;

  std::vector<Segment> segments;
  VertexSet pending;
  for (auto id : chain) {
    const auto& bs = model.branch_sets[id];
    pending.insert(pending.end(), bs.begin(), bs.end());
    std::optional<std::size_t> tooth_cell;
    for (Vertex nb : grid.adjacent(static_cast<Vertex>(id)))
      if (!used[nb]) {
        tooth_cell = nb;
        break;
      }
    if (!tooth_cell) continue;
    used[*tooth_cell] = true;
    std::sort(pending.begin(), pending.end());
    segments.push_back({pending, model.branch_sets[*tooth_cell]});
    pending.clear();
  }
  if (segments.empty()) throw MalformedInput("grid model leaves no room for teeth");
  if (!pending.empty()) {
    auto& last = segments.back().v;
    last.insert(last.end(), pending.begin(), pending.end());
    std::sort(last.begin(), last.end());
  }

  const std::size_t m = segments.size();
  // x[i] in V_i joined to y[i+1] in V_{i+1}: least such host edge.
  std::vector<Vertex> x(m), y(m);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    bool found = false;
    for (Vertex a : segments[i].v) {
      for (Vertex b : segments[i + 1].v)
        if (g.has_edge(a, b)) {
          x[i] = a;
          y[i + 1] = b;
          found = true;
          break;
        }
      if (found) break;
    }
    if (!found) throw MalformedInput("no edge between consecutive base sets " + std::to_string(i));
  }

  RakeEmbedding rake;
  std::vector<VertexSequence> pieces(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (m == 1) {
      pieces[i] = {segments[i].v.front()};
    } else if (i == 0) {
      pieces[i] = {x[0]};
    } else if (i == m - 1) {
      pieces[i] = {y[i]};
    } else {
      std::vector<bool> allowed(g.order(), false);
      for (Vertex v : segments[i].v) allowed[v] = true;
      pieces[i] = shortest_path_within(g, allowed, y[i], x[i]);
    }
  }
  std::vector<std::size_t> offset(m);
  for (std::size_t i = 0; i < m; ++i) {
    offset[i] = rake.base.size();
    rake.base.insert(rake.base.end(), pieces[i].begin(), pieces[i].end());
  }

  for (std::size_t i = 0; i < m; ++i) {
    const VertexSequence& p = pieces[i];
    std::vector<bool> on_piece(g.order(), false);
    for (Vertex v : p) on_piece[v] = true;
    const bool whole = p.size() == segments[i].v.size();
    const VertexSet& pool = whole ? segments[i].v_prime : segments[i].v;
    std::optional<Vertex> tooth;
    for (Vertex t : pool) {
      if (on_piece[t]) continue;
      for (Vertex b : p)
        if (g.has_edge(t, b)) {
          tooth = t;
          break;
        }
      if (tooth) break;
    }
    if (!tooth) throw MalformedInput("no tooth available for base set " + std::to_string(i));
    std::size_t root = 0;
    while (!g.has_edge(*tooth, p[root])) ++root;
    rake.teeth.emplace_back(*tooth, offset[i] + root);
    if (log)
      log->push_back("tooth " + vtext(*tooth) + " on " + vtext(p[root]) +
                     (whole ? " from the neighbouring set" : " from inside its set"));
  }
  if (auto c = check_rake(g, rake); !c)
    throw std::logic_error("rake construction produced an invalid rake: " + c.diagnostic);
  return rake;
}

}  // namespace canonwit
