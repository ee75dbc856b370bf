#include <algorithm>
#include <deque>
#include <map>
#include <string>

#include "canonwit/bounds.hpp"
#include "canonwit/error.hpp"
#include "canonwit/extraction.hpp"

namespace canonwit {

namespace {

std::string vtext(Vertex v) { return std::to_string(v); }

std::string seq_text(const VertexSequence& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + vtext(p[i]);
  return s + "]";
}

std::optional<std::uint64_t> small_value(const BoundValue& b, std::uint64_t cap) {
  if (!b.exact() || b.number.value() > cap) return std::nullopt;
  return static_cast<std::uint64_t>(b.number.value());
}

Biclique sorted_biclique(VertexSet a, VertexSet b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return {a, b};
}

std::optional<Biclique> literal_families(const Graph& g, const std::vector<VertexSet>& fam_a,
                                         const std::vector<VertexSet>& fam_b, std::size_t q) {
  std::size_t p = 1;
  for (const auto* fam : {&fam_a, &fam_b})
    for (const auto& s : *fam) p = std::max(p, s.size());
  BoundCalculator calc(BoundOptions{false, 64});
  // r = P(p^q, q); fewer sets are used when the family is smaller.
  auto colours = calc.number(1);
  for (std::size_t i = 0; i < q; ++i) colours = colours * calc.number(p);
  auto r_bound = calc.pigeonhole_P(colours, calc.number(q));
  std::size_t r = fam_a.size();
  if (auto v = small_value(r_bound, fam_a.size())) r = static_cast<std::size_t>(*v);

  auto first_neighbour = [&](const VertexSet& in, const VertexSet& of) -> Vertex {
    for (Vertex a : in)
      for (Vertex b : of)
        if (g.has_edge(a, b)) return a;
    return static_cast<Vertex>(-1);
  };

  // Colour the B sets by their first neighbours in the r chosen A sets.
  std::map<std::vector<Vertex>, std::vector<std::size_t>> by_colour;
  std::vector<std::vector<Vertex>> order;
  for (std::size_t j = 0; j < fam_b.size(); ++j) {
    std::vector<Vertex> colour;
    for (std::size_t i = 0; i < r; ++i) colour.push_back(first_neighbour(fam_a[i], fam_b[j]));
    auto& cls = by_colour[colour];
    if (cls.empty()) order.push_back(colour);
    cls.push_back(j);
  }
  const std::vector<Vertex>* u = nullptr;
  std::vector<std::size_t> chosen_b;
  for (const auto& colour : order)
    if (by_colour[colour].size() >= q) {
      u = &colour;
      chosen_b.assign(by_colour[colour].begin(), by_colour[colour].begin() + q);
      break;
    }
  if (!u) return std::nullopt;

  // Colour U by first neighbours in the chosen B sets.
  std::map<std::vector<Vertex>, std::vector<Vertex>> u_colour;
  std::vector<std::vector<Vertex>> u_order;
  for (Vertex x : *u) {
    std::vector<Vertex> colour;
    VertexSet single{x};
    for (std::size_t j : chosen_b) colour.push_back(first_neighbour(fam_b[j], single));
    auto& cls = u_colour[colour];
    if (cls.empty()) u_order.push_back(colour);
    cls.push_back(x);
  }
  for (const auto& colour : u_order) {
    const auto& cls = u_colour[colour];
    if (cls.size() < q) continue;
    VertexSet u1(cls.begin(), cls.begin() + q);
    Biclique b = sorted_biclique(u1, colour);
    if (check_biclique(g, b.side_a, b.side_b)) return b;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Biclique> biclique_from_families(const Graph& g, const std::vector<VertexSet>& fam_a,
                                               const std::vector<VertexSet>& fam_b, std::size_t q,
                                               const ExtractionLimits& limits) {
  if (q == 0) throw MalformedInput("biclique order must be positive");
  std::vector<std::string> owner(g.order());
  auto claim = [&](const std::vector<VertexSet>& fam, const char* name) {
    for (std::size_t i = 0; i < fam.size(); ++i) {
      const std::string label = std::string(name) + "[" + std::to_string(i) + "]";
      if (fam[i].empty()) throw MalformedInput("set " + label + " is empty");
      for (Vertex v : fam[i]) {
        if (!g.contains(v)) throw MalformedInput("vertex " + vtext(v) + " out of range");
        if (!owner[v].empty())
          throw MalformedInput("sets " + owner[v] + " and " + label + " share vertex " + vtext(v));
        owner[v] = label;
      }
    }
  };
  claim(fam_a, "A");
  claim(fam_b, "B");
  for (std::size_t i = 0; i < fam_a.size(); ++i)
    for (std::size_t j = 0; j < fam_b.size(); ++j) {
      bool joined = false;
      for (Vertex a : fam_a[i]) {
        for (Vertex b : fam_b[j])
          if (g.has_edge(a, b)) {
            joined = true;
            break;
          }
        if (joined) break;
      }
      if (!joined)
        throw MalformedInput("no edge between A[" + std::to_string(i) + "] and B[" +
                             std::to_string(j) + "]");
    }
  if (fam_a.empty() || fam_b.empty()) return std::nullopt;

  if (auto b = literal_families(g, fam_a, fam_b, q)) return b;

  VertexSet all;
  for (const auto* fam : {&fam_a, &fam_b})
    for (const auto& s : *fam) all.insert(all.end(), s.begin(), s.end());
  std::sort(all.begin(), all.end());
  auto sub = induced_subgraph(g, all);
  auto found = find_biclique(sub.graph, q, q, limits.search);
  if (!found) return std::nullopt;
  VertexSet a, b;
  for (Vertex v : found->side_a) a.push_back(sub.to_host[v]);
  for (Vertex v : found->side_b) b.push_back(sub.to_host[v]);
  return sorted_biclique(a, b);
}

namespace {

using Found = std::variant<VertexSequence, Biclique>;

class PathSolver {
 public:
  PathSolver(const ExtractionLimits& limits, std::vector<std::string>& log)
      : limits_(limits), log_(log), bounds_(BoundOptions{false, 64}) {}

  std::optional<Found> solve(const Graph& g, const VertexSequence& p, std::size_t s, std::size_t q,
                             int depth);

 private:
  void tick(std::uint64_t n = 1) {
    steps_ += n;
    if (limits_.step_budget && steps_ > limits_.step_budget)
      throw ResourceLimit("extraction step budget " + std::to_string(limits_.step_budget) +
                          " exhausted");
  }
  void note(int depth, const std::string& line) {
    log_.push_back(std::string(static_cast<std::size_t>(depth) * 2, ' ') + line);
  }
  std::optional<Found> try_split(const Graph& g, const VertexSequence& p, std::size_t s,
                                 std::size_t q, std::size_t t, int depth);
  std::optional<Found> direct(const Graph& g, const VertexSequence& p, std::size_t s,
                              std::size_t q, int depth);

  const ExtractionLimits& limits_;
  std::vector<std::string>& log_;
  BoundCalculator bounds_;
  std::uint64_t steps_ = 0;
};

std::optional<Found> PathSolver::solve(const Graph& g, const VertexSequence& p, std::size_t s,
                                       std::size_t q, int depth) {
  tick();
  if (s <= 1) return Found{VertexSequence{p.front()}};
  if (q <= 1) return Found{Biclique{{}, {p.front()}}};
  if (s == 2 && p.size() >= 2) return Found{VertexSequence{p[0], p[1]}};

  std::vector<std::size_t> candidates;
  auto y = bounds_.thm_main2_Y(bounds_.number(s), bounds_.number(q - 1));
  if (auto t = small_value(y, p.size()); t && *t >= 1 && p.size() / *t >= s - 1)
    candidates.push_back(static_cast<std::size_t>(*t));
  if (std::size_t t = p.size() / (s - 1); t >= 1) candidates.push_back(t);
  candidates.push_back(1);
  std::vector<std::size_t> tried;
  for (std::size_t t : candidates) {
    if (std::find(tried.begin(), tried.end(), t) != tried.end()) continue;
    tried.push_back(t);
    if (p.size() / t < s - 1) continue;
    if (auto f = try_split(g, p, s, q, t, depth)) return f;
  }
  return direct(g, p, s, q, depth);
}

std::optional<Found> PathSolver::try_split(const Graph& g, const VertexSequence& p, std::size_t s,
                                           std::size_t q, std::size_t t, int depth) {
  const std::size_t k = p.size() / t;
  std::vector<VertexSet> sets(k);
  std::vector<int> set_of(g.order(), -1);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i * t; j < (i + 1) * t; ++j) {
      sets[i].push_back(p[j]);
      set_of[p[j]] = static_cast<int>(i);
    }
  std::vector<Edge> h_edges;
  for (std::size_t i = 0; i < k; ++i)
    for (Vertex v : sets[i]) {
      tick(g.degree(v));
      for (Vertex w : g.adjacent(v))
        if (set_of[w] > static_cast<int>(i)) h_edges.emplace_back(i, set_of[w]);
    }
  Graph h = Graph::from_edge_list(k, h_edges);
  std::size_t q_h = q;
  if (auto c = small_value(bounds_.lemma_grid_C(bounds_.number(t), bounds_.number(q)), k))
    q_h = static_cast<std::size_t>(*c);
  note(depth, "split " + std::to_string(p.size()) + " vertices into " + std::to_string(k) +
                  " sets of " + std::to_string(t) + "; quotient search for P" +
                  std::to_string(s - 1) + " or biclique of order " + std::to_string(q_h));
  VertexSequence h_path(k);
  for (std::size_t i = 0; i < k; ++i) h_path[i] = static_cast<Vertex>(i);
  auto sub = solve(h, h_path, s - 1, q_h, depth + 1);
  if (!sub) return std::nullopt;

  if (auto* hb = std::get_if<Biclique>(&*sub)) {
    if (hb->side_a.empty() || hb->side_b.empty()) return std::nullopt;
    std::vector<VertexSet> fam_a, fam_b;
    for (Vertex i : hb->side_a) fam_a.push_back(sets[i]);
    for (Vertex i : hb->side_b) fam_b.push_back(sets[i]);
    note(depth, "quotient biclique; combining " + std::to_string(fam_a.size()) + "+" +
                    std::to_string(fam_b.size()) + " sets");
    std::optional<Biclique> b;
    try {
      b = biclique_from_families(g, fam_a, fam_b, (q + 1) / 2, limits_);
    } catch (const ResourceLimit& e) {
      note(depth, std::string("family search skipped: ") + e.what());
    }
    if (!b) return std::nullopt;
    b->side_a.resize(q / 2);
    b->side_b.resize((q + 1) / 2);
    return Found{*b};
  }

  const auto& hp = std::get<VertexSequence>(*sub);
  std::vector<bool> in_w(g.order(), false);
  for (Vertex i : hp)
    for (Vertex v : sets[i]) in_w[v] = true;
  const VertexSet& first = sets[hp.front()];
  const VertexSet& last = sets[hp.back()];

  auto bfs = [&](Vertex from) {
    std::vector<Vertex> parent(g.order(), static_cast<Vertex>(-1));
    std::vector<std::size_t> dist(g.order(), static_cast<std::size_t>(-1));
    std::deque<Vertex> queue{from};
    parent[from] = from;
    dist[from] = 0;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      tick();
      for (Vertex w : g.adjacent(u))
        if (in_w[w] && dist[w] == static_cast<std::size_t>(-1)) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        }
    }
    return std::make_pair(parent, dist);
  };
  auto trace = [](const std::vector<Vertex>& parent, Vertex from, Vertex to) {
    VertexSequence path{to};
    while (path.back() != from) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
  };

  // Distance analysis between the end sets.
  for (Vertex v : first) {
    auto [parent, dist] = bfs(v);
    for (Vertex u : last)
      if (dist[u] != static_cast<std::size_t>(-1) && dist[u] >= s - 1) {
        VertexSequence path = trace(parent, v, u);
        path.resize(s);
        note(depth, "end sets at distance " + std::to_string(dist[u]) + "; shortest path " +
                        seq_text(path));
        return Found{path};
      }
  }
  auto [parent, dist] = bfs(first.front());
  std::optional<Vertex> target;
  for (Vertex u : last)
    if (dist[u] != static_cast<std::size_t>(-1) && (!target || dist[u] < dist[*target])) target = u;
  if (!target) return std::nullopt;
  VertexSequence w = trace(parent, first.front(), *target);
  if (w.size() != s - 1) return std::nullopt;

  for (Vertex y : first) {
    if (!g.has_edge(y, w[1])) continue;
    for (Vertex x : g.adjacent(y)) {
      if (set_of[x] != static_cast<int>(hp.front()) || g.has_edge(x, w[1])) continue;
      VertexSequence path{x, y};
      path.insert(path.end(), w.begin() + 1, w.end());
      if (!is_chordless_path(g, path)) continue;
      note(depth, "first set vertex " + vtext(x) + " misses " + vtext(w[1]) + "; path " +
                      seq_text(path));
      return Found{path};
    }
  }

  note(depth, vtext(w[1]) + " dominates the first set; recursing inside it with q=" +
                  std::to_string(q - 1));
  auto inner = solve(g, first, s, q - 1, depth + 1);
  if (!inner) return std::nullopt;
  if (auto* path = std::get_if<VertexSequence>(&*inner)) return Found{*path};
  Biclique b = std::get<Biclique>(*inner);
  if (b.side_a.size() <= b.side_b.size())
    b.side_a.push_back(w[1]);
  else
    b.side_b.push_back(w[1]);
  if (b.side_a.size() > b.side_b.size()) std::swap(b.side_a, b.side_b);
  return Found{sorted_biclique(b.side_a, b.side_b)};
}

std::optional<Found> PathSolver::direct(const Graph& g, const VertexSequence& p, std::size_t s,
                                        std::size_t q, int depth) {
  VertexSet members(p.begin(), p.end());
  std::sort(members.begin(), members.end());
  auto sub = induced_subgraph(g, members);
  try {
    tick(members.size());
    VertexSequence lip = longest_induced_path(sub.graph, limits_.search);
    if (lip.size() >= s) {
      VertexSequence path;
      for (std::size_t i = 0; i < s; ++i) path.push_back(sub.to_host[lip[i]]);
      note(depth, "direct search on " + std::to_string(p.size()) + " vertices: path " +
                      seq_text(path));
      return Found{path};
    }
    if (auto b = find_biclique(sub.graph, q / 2, (q + 1) / 2, limits_.search)) {
      VertexSet a, c;
      for (Vertex v : b->side_a) a.push_back(sub.to_host[v]);
      for (Vertex v : b->side_b) c.push_back(sub.to_host[v]);
      note(depth, "direct search on " + std::to_string(p.size()) + " vertices: biclique");
      return Found{sorted_biclique(a, c)};
    }
  } catch (const ResourceLimit& e) {
    note(depth, std::string("direct search skipped: ") + e.what());
    return std::nullopt;
  }
  note(depth, "no P" + std::to_string(s) + " or biclique among " + std::to_string(p.size()) +
                  " vertices");
  return std::nullopt;
}

}  // namespace

Witness induced_path_or_biclique(const Graph& g, const VertexSequence& path, std::size_t s,
                                 std::size_t q, const ExtractionLimits& limits) {
  if (path.empty()) throw MalformedInput("path is empty");
  if (auto c = is_path(g, path); !c) throw MalformedInput("not a path: " + c.diagnostic);
  if (s == 0 || q == 0) throw MalformedInput("s and q must be positive");
  Witness out;
  PathSolver solver(limits, out.stage_log);
  std::optional<Found> found;
  try {
    found = solver.solve(g, path, s, q, 0);
  } catch (const ResourceLimit& e) {
    out.value = Inconclusive{std::string("resource limit: ") + e.what()};
    return out;
  }
  if (!found) {
    out.value = Inconclusive{"no induced P" + std::to_string(s) + " or biclique reached from a " +
                             std::to_string(path.size()) + "-vertex path"};
    return out;
  }
  if (auto* p = std::get_if<VertexSequence>(&*found))
    out.value = InducedPathWitness{*p};
  else
    out.value = std::get<Biclique>(*found);
  if (auto c = verify_witness(g, out.value); !c) {
    out.stage_log.push_back("discarded unverified result: " + c.diagnostic);
    out.value = Inconclusive{"result failed verification"};
  }
  return out;
}

}  // namespace canonwit
