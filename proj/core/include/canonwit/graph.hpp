#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "canonwit/bitset.hpp"

namespace canonwit {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Sorted, duplicate-free vertex identifiers of some host graph.
using VertexSet = std::vector<Vertex>;
// Ordered, pairwise distinct vertex identifiers (paths, rake bases).
using VertexSequence = std::vector<Vertex>;

inline constexpr std::size_t kDefaultVertexCeiling = 4096;

// Immutable simple undirected graph on vertices 0..n-1 with constant-time
// adjacency through a bit matrix.
class Graph {
 public:
  Graph() = default;

  // Rejects endpoints >= n and loops; duplicate pairs (in either
  // orientation) collapse.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> pairs,
                              std::size_t vertex_ceiling = kDefaultVertexCeiling);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  bool has_edge(Vertex u, Vertex v) const { return rows_[u].test(v); }
  bool contains(Vertex v) const { return v < order(); }

  const Bitset& neighbours(Vertex v) const { return rows_[v]; }
  std::span<const Vertex> adjacent(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

  // Edges as (u, v) with u < v in ascending lexicographic order.
  std::vector<Edge> edges() const;

  Bitset empty_set() const { return Bitset(order()); }
  Bitset full_set() const {
    Bitset b(order());
    b.set_all();
    return b;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Bitset> rows_;
  std::size_t edge_count_ = 0;
};

struct Relabeled {
  Graph graph;
  // new identifier -> host identifier
  std::vector<Vertex> to_host;
};

// Subgraph induced by s; vertex i of the result is the i-th smallest member
// of s.
Relabeled induced_subgraph(const Graph& g, std::span<const Vertex> s);

struct Contracted {
  Graph graph;
  // host identifier -> new identifier; all members of u map to the new
  // vertex, which is numbered last.
  std::vector<Vertex> from_host;
};

Contracted contract(const Graph& g, std::span<const Vertex> u);

struct Check {
  bool ok = true;
  std::string diagnostic;

  explicit operator bool() const { return ok; }
  static Check pass() { return {}; }
  static Check fail(std::string why) { return {false, std::move(why)}; }
};

// Consecutive items adjacent, non-consecutive items non-adjacent, items
// distinct and in range.
Check is_chordless_path(const Graph& g, std::span<const Vertex> p);

// Consecutive items adjacent, items distinct and in range.
Check is_path(const Graph& g, std::span<const Vertex> p);

// Normalizes an arbitrary vertex list into a VertexSet (sorted, unique) after
// range-checking every member against g.
VertexSet make_vertex_set(const Graph& g, std::span<const Vertex> members);

// Text edge-list format: first non-comment line "n m", then m lines "u v".
// Lines starting with '#' and blank lines are skipped.
Graph parse_edge_list(std::istream& in, std::size_t vertex_ceiling = kDefaultVertexCeiling);
Graph parse_edge_list_file(const std::string& path,
                           std::size_t vertex_ceiling = kDefaultVertexCeiling);
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list_string(const Graph& g);

// Small constructors shared by tests, generators and the CLI.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t a, std::size_t b);
// Vertex (r, c) is r * cols + c.
Graph grid_graph(std::size_t rows, std::size_t cols);

}  // namespace canonwit
