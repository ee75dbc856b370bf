#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "canonwit/graph.hpp"

namespace canonwit::testing {

inline Graph graph_of(std::size_t n, std::initializer_list<Edge> edges) {
  std::vector<Edge> list(edges);
  return Graph::from_edge_list(n, list);
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

// Labeled graph on n vertices whose edges are selected by the bits of mask,
// pairs taken in (u,v) u<v lexicographic order.
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1U) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

inline std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

// Calls visit(image) for every injective map from k pattern vertices into n
// host vertices; stops early when visit returns true.
inline bool for_each_injection(std::size_t k, std::size_t n,
                               const std::function<bool(const std::vector<Vertex>&)>& visit) {
  std::vector<Vertex> image;
  std::vector<bool> used(n, false);
  std::function<bool()> rec = [&]() -> bool {
    if (image.size() == k) return visit(image);
    for (Vertex v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      image.push_back(v);
      bool stop = rec();
      image.pop_back();
      used[v] = false;
      if (stop) return true;
    }
    return false;
  };
  return rec();
}

inline bool naive_induced(const Graph& host, const Graph& pattern) {
  if (pattern.order() > host.order()) return false;
  return for_each_injection(pattern.order(), host.order(), [&](const std::vector<Vertex>& img) {
    for (Vertex a = 0; a < pattern.order(); ++a)
      for (Vertex b = a + 1; b < pattern.order(); ++b)
        if (pattern.has_edge(a, b) != host.has_edge(img[a], img[b])) return false;
    return true;
  });
}

inline bool naive_subgraph(const Graph& host, const Graph& pattern) {
  if (pattern.order() > host.order()) return false;
  return for_each_injection(pattern.order(), host.order(), [&](const std::vector<Vertex>& img) {
    for (auto [a, b] : pattern.edges())
      if (!host.has_edge(img[a], img[b])) return false;
    return true;
  });
}

inline bool naive_isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() && naive_induced(a, b);
}

// Longest path vertex count by plain DFS from every start.
inline std::size_t naive_longest_path(const Graph& g, bool induced) {
  std::size_t best = g.order() == 0 ? 0 : 1;
  std::vector<Vertex> path;
  std::function<void()> rec = [&]() {
    best = std::max(best, path.size());
    Vertex last = path.back();
    for (Vertex w : g.adjacent(last)) {
      if (std::find(path.begin(), path.end(), w) != path.end()) continue;
      bool ok = true;
      if (induced)
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
          if (g.has_edge(path[i], w)) ok = false;
      if (!ok) continue;
      path.push_back(w);
      rec();
      path.pop_back();
    }
  };
  for (Vertex s = 0; s < g.order(); ++s) {
    path = {s};
    rec();
  }
  return best;
}

}  // namespace canonwit::testing
