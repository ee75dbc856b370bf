#include "canonwit/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "canonwit/error.hpp"

namespace canonwit {

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> pairs,
                            std::size_t vertex_ceiling) {
  if (n > vertex_ceiling) {
    throw MalformedInput("graph has " + std::to_string(n) +
                         " vertices, above the ceiling of " + std::to_string(vertex_ceiling));
  }
  Graph g;
  g.adjacency_.assign(n, {});
  g.rows_.assign(n, Bitset(n));
  for (auto [u, v] : pairs) {
    if (u >= n || v >= n) {
      throw MalformedInput("edge (" + std::to_string(u) + "," + std::to_string(v) +
                           ") has an endpoint >= " + std::to_string(n));
    }
    if (u == v) throw MalformedInput("loop at vertex " + std::to_string(u));
    if (g.rows_[u].test(v)) continue;
    g.rows_[u].set(v);
    g.rows_[v].set(u);
    ++g.edge_count_;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& adj = g.adjacency_[v];
    g.rows_[v].for_each([&](std::size_t w) { adj.push_back(static_cast<Vertex>(w)); });
  }
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

VertexSet make_vertex_set(const Graph& g, std::span<const Vertex> members) {
  VertexSet s(members.begin(), members.end());
  for (Vertex v : s) {
    if (!g.contains(v)) {
      throw MalformedInput("vertex " + std::to_string(v) + " is outside a graph of order " +
                           std::to_string(g.order()));
    }
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

Relabeled induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  VertexSet members = make_vertex_set(g, s);
  std::vector<Vertex> index(g.order(), static_cast<Vertex>(-1));
  for (std::size_t i = 0; i < members.size(); ++i) index[members[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Vertex w : g.adjacent(members[i])) {
      Vertex j = index[w];
      if (j != static_cast<Vertex>(-1) && i < j) edges.emplace_back(static_cast<Vertex>(i), j);
    }
  }
  return {Graph::from_edge_list(members.size(), edges, std::max(members.size(), g.order())),
          std::move(members)};
}

Contracted contract(const Graph& g, std::span<const Vertex> u) {
  if (u.empty()) throw MalformedInput("contraction set is empty");
  VertexSet merged = make_vertex_set(g, u);
  Bitset in_u = g.empty_set();
  for (Vertex v : merged) in_u.set(v);

  std::vector<Vertex> from_host(g.order());
  Vertex next = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!in_u.test(v)) from_host[v] = next++;
  const Vertex merged_id = next;
  for (Vertex v : merged) from_host[v] = merged_id;

  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) {
    Vertex x = from_host[a], y = from_host[b];
    if (x != y) edges.emplace_back(std::min(x, y), std::max(x, y));
  }
  return {Graph::from_edge_list(merged_id + 1, edges, g.order()), std::move(from_host)};
}

namespace {

Check check_members(const Graph& g, std::span<const Vertex> p) {
  Bitset seen = g.empty_set();
  for (Vertex v : p) {
    if (!g.contains(v)) return Check::fail("vertex " + std::to_string(v) + " out of range");
    if (seen.test(v)) return Check::fail("vertex " + std::to_string(v) + " repeated");
    seen.set(v);
  }
  return Check::pass();
}

std::string edge_text(Vertex a, Vertex b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

Check is_path(const Graph& g, std::span<const Vertex> p) {
  if (auto c = check_members(g, p); !c) return c;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (!g.has_edge(p[i], p[i + 1])) return Check::fail("missing edge " + edge_text(p[i], p[i + 1]));
  return Check::pass();
}

Check is_chordless_path(const Graph& g, std::span<const Vertex> p) {
  if (auto c = is_path(g, p); !c) return c;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 2; j < p.size(); ++j)
      if (g.has_edge(p[i], p[j])) return Check::fail("chord " + edge_text(p[i], p[j]));
  return Check::pass();
}

Graph parse_edge_list(std::istream& in, std::size_t vertex_ceiling) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0, m = 0;
  std::vector<Edge> edges;

  auto fail = [&](const std::string& why) {
    throw MalformedInput("line " + std::to_string(line_no) + ": " + why);
  };

  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long long a = 0, b = 0;
    if (!(fields >> a >> b)) fail("expected two integers");
    std::string extra;
    if (fields >> extra) fail("unexpected trailing text '" + extra + "'");
    if (a < 0 || b < 0) fail("negative value");
    if (!have_header) {
      have_header = true;
      n = static_cast<std::size_t>(a);
      m = static_cast<std::size_t>(b);
      if (n > vertex_ceiling) {
        fail("vertex count " + std::to_string(n) + " exceeds the ceiling of " +
             std::to_string(vertex_ceiling));
      }
      continue;
    }
    if (edges.size() == m) fail("more edge lines than the declared " + std::to_string(m));
    if (static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n)
      fail("endpoint out of range for " + std::to_string(n) + " vertices");
    if (a == b) fail("loop at vertex " + std::to_string(a));
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (!have_header) {
    ++line_no;
    fail("missing \"n m\" header");
  }
  if (edges.size() != m) {
    throw MalformedInput("line " + std::to_string(line_no) + ": expected " + std::to_string(m) +
                         " edge lines, found " + std::to_string(edges.size()));
  }
  return Graph::from_edge_list(n, edges, vertex_ceiling);
}

Graph parse_edge_list_file(const std::string& path, std::size_t vertex_ceiling) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open " + path);
  try {
    return parse_edge_list(in, vertex_ceiling);
  } catch (const MalformedInput& e) {
    throw MalformedInput(path + ": " + e.what());
  }
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string to_edge_list_string(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, e, std::max(n, kDefaultVertexCeiling));
}

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  if (n >= 3) e.emplace_back(0, n - 1);
  return Graph::from_edge_list(n, e, std::max(n, kDefaultVertexCeiling));
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edge_list(n, e, std::max(n, kDefaultVertexCeiling));
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph::from_edge_list(a + b, e, std::max(a + b, kDefaultVertexCeiling));
}

Graph grid_graph(std::size_t rows, std::size_t cols) {
  std::vector<Edge> e;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      Vertex v = static_cast<Vertex>(r * cols + c);
      if (c + 1 < cols) e.emplace_back(v, v + 1);
      if (r + 1 < rows) e.emplace_back(v, v + cols);
    }
  }
  return Graph::from_edge_list(rows * cols, e, std::max(rows * cols, kDefaultVertexCeiling));
}

}  // namespace canonwit
