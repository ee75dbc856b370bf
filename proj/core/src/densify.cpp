#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

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

void note(std::vector<std::string>* log, std::string line) {
  if (log) log->push_back(std::move(line));
}

VertexSequence shortest_within(const Graph& g, const VertexSequence& allowed_list, Vertex a,
                               Vertex b) {
  std::vector<bool> allowed(g.order(), false);
  for (Vertex v : allowed_list) allowed[v] = true;
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
  VertexSequence path{b};
  while (path.back() != a) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<CanonicalWitness> validated(const Graph& g, CanonicalWitness w,
                                          const CanonicalOptions& options) {
  if (check_canonical_witness(g, w, options)) return w;
  return std::nullopt;
}

}  // namespace

ShortenResult shorten_hgraph(const Graph& g, const HGraphEmbedding& h, std::size_t s,
                             const CanonicalOptions& options) {
  if (s < 2) throw MalformedInput("s must be at least 2");
  const VertexSequence& u = h.body;
  if (u.empty()) throw MalformedInput("empty body");
  if (auto c = is_chordless_path(g, u); !c) throw MalformedInput("body not chordless: " + c.diagnostic);
  const Vertex wings[4] = {h.left_wings.first, h.left_wings.second, h.right_wings.first,
                           h.right_wings.second};
  for (int i = 0; i < 4; ++i) {
    if (!g.contains(wings[i])) throw MalformedInput("wing " + vtext(wings[i]) + " out of range");
    if (std::find(u.begin(), u.end(), wings[i]) != u.end())
      throw MalformedInput("wing " + vtext(wings[i]) + " lies on the body");
    for (int j = 0; j < i; ++j)
      if (wings[i] == wings[j]) throw MalformedInput("wing " + vtext(wings[i]) + " repeated");
    Vertex end = i < 2 ? u.front() : u.back();
    if (!g.has_edge(wings[i], end))
      throw MalformedInput("wing " + vtext(wings[i]) + " not adjacent to body end " + vtext(end));
  }

  const std::size_t m = u.size();
  auto positions = [&](Vertex w) {
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < m; ++i)
      if (g.has_edge(w, u[i])) pos.push_back(i);
    return pos;
  };
  struct Choice {
    std::size_t left, right, i, j;
  };
  std::optional<Choice> best;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 2; b < 4; ++b) {
      auto np = positions(wings[a]);
      auto nq = positions(wings[b]);
      for (std::size_t i : np) {
        auto j = std::lower_bound(nq.begin(), nq.end(), i);
        if (j == nq.end()) continue;
        auto next_left = std::upper_bound(np.begin(), np.end(), i);
        if (next_left != np.end() && *next_left <= *j) continue;
        if (!best || *j - i < best->j - best->i) best = Choice{a, b, i, *j};
      }
    }
  // The wings touch both body ends, so a window always exists.
  const std::size_t i = best->i, j = best->j, t = j - i;
  const Vertex wl = wings[best->left], wr = wings[best->right];
  VertexSequence window(u.begin() + static_cast<std::ptrdiff_t>(i),
                        u.begin() + static_cast<std::ptrdiff_t>(j) + 1);
  if (t < s) {
    VertexSequence path{wl};
    path.insert(path.end(), window.begin(), window.end());
    path.push_back(wr);
    return ShortPath{path};
  }
  const Vertex prev = i > 0 ? u[i - 1] : wings[1 - best->left];
  const Vertex next = j + 1 < m ? u[j + 1] : wings[5 - best->right];
  auto cycle_through = [&](Vertex a, Vertex b) {
    VertexSequence c{a};
    c.insert(c.end(), window.begin(), window.end());
    c.push_back(b);
    return c;
  };
  const std::pair<Vertex, Vertex> closers[4] = {{wl, wr}, {wl, next}, {prev, wr}, {prev, next}};
  for (auto [a, b] : closers) {
    if (!g.has_edge(a, b)) continue;
    auto cycle = cycle_through(a, b);
    if (auto w = validated(g, hole_witness(cycle), options)) return *w;
  }
  auto w = h_graph_witness(g, window, {wl, prev}, {wr, next});
  if (auto c = check_canonical_witness(g, w, options); !c) {
    if (window.size() < options.hgraph_minimum_order)
      throw InsufficientInput("H-graph of order " + std::to_string(window.size()) +
                              " is below the family minimum");
    throw std::logic_error("shortened H-graph failed validation: " + c.diagnostic);
  }
  return w;
}

DensifyResult densify_rake(const Graph& g, const RakeEmbedding& r, std::size_t s,
                           std::vector<std::string>* log, const CanonicalOptions& options) {
  if (auto c = check_rake(g, r); !c) throw MalformedInput("invalid rake: " + c.diagnostic);
  if (s < 2) throw MalformedInput("s must be at least 2");

  // Preprocessing: drop teeth on the base ends, trim the base around the
  // outermost remaining roots.
  auto teeth = r.teeth;
  std::sort(teeth.begin(), teeth.end(), [](auto a, auto b) { return a.second < b.second; });
  std::erase_if(teeth, [&](auto tr) { return tr.second == 0 || tr.second + 1 == r.base.size(); });
  if (teeth.size() < 3)
    throw InsufficientInput("densify needs three teeth away from the base ends, found " +
                            std::to_string(teeth.size()));
  note(log, "kept " + std::to_string(teeth.size()) + " of " + std::to_string(r.teeth.size()) +
                " teeth");

  // Chord cutting between consecutive roots.
  const std::size_t kk = teeth.size();
  VertexSequence base{r.base[teeth.front().second - 1]};
  std::vector<std::size_t> root_pos;
  for (std::size_t j = 0; j + 1 < kk; ++j) {
    const std::size_t a = teeth[j].second, b = teeth[j + 1].second;
    VertexSequence segment(r.base.begin() + static_cast<std::ptrdiff_t>(a),
                           r.base.begin() + static_cast<std::ptrdiff_t>(b) + 1);
    VertexSequence sp = shortest_within(g, segment, r.base[a], r.base[b]);
    if (sp.size() < segment.size())
      note(log, "cut chords between roots " + vtext(r.base[a]) + " and " + vtext(r.base[b]) +
                    ": " + std::to_string(segment.size()) + " -> " + std::to_string(sp.size()) +
                    " vertices");
    root_pos.push_back(base.size());
    base.insert(base.end(), sp.begin(), sp.end() - 1);
  }
  root_pos.push_back(base.size());
  base.push_back(r.base[teeth.back().second]);
  base.push_back(r.base[teeth.back().second + 1]);

  // One H-graph per consecutive root pair, shortened.
  std::vector<VertexSequence> paths;
  for (std::size_t j = 0; j + 1 < kk; ++j) {
    const std::size_t a = root_pos[j], b = root_pos[j + 1];
    HGraphEmbedding h;
    h.body.assign(base.begin() + static_cast<std::ptrdiff_t>(a),
                  base.begin() + static_cast<std::ptrdiff_t>(b) + 1);
    h.left_wings = {teeth[j].first, base[a - 1]};
    h.right_wings = {teeth[j + 1].first, base[b + 1]};
    auto res = shorten_hgraph(g, h, s, options);
    if (auto* c = std::get_if<CanonicalWitness>(&res)) {
      note(log, "H-graph between roots " + vtext(base[a]) + " and " + vtext(base[b]) +
                    " yields " + to_string(c->descriptor));
      return *c;
    }
    paths.push_back(std::get<ShortPath>(res).vertices);
    note(log, "short path " + seq_text(paths.back()));
  }

  // Glue consecutive short paths at every inner root.
  VertexSequence out;
  std::vector<std::pair<Vertex, Vertex>> new_teeth;  // (tooth, root)
  VertexSequence cur = paths.front();
  for (std::size_t j = 1; j + 1 < kk; ++j) {
    const std::size_t pos = root_pos[j];
    const Vertex ui = base[pos], um = base[pos - 1], up = base[pos + 1], v = teeth[j].first;
    VertexSequence left = cur, right = paths[j];
    const std::string at = "at root " + vtext(ui) + ": ";
    if (right[0] == um && right.size() > 1 && right[1] == ui) {
      right[0] = v;
      note(log, at + "right path restarted at tooth " + vtext(v));
    } else if (right[0] == um && right.size() > 1 && right[1] == up) {
      right[0] = v;
      right.insert(right.begin() + 1, ui);
      note(log, at + "right path restarted at tooth " + vtext(v) + " through " + vtext(ui));
    }
    if (right[0] == v && right.size() > 1 && right[1] == up) {
      right.insert(right.begin() + 1, ui);
      note(log, at + "inserted " + vtext(ui) + " after the tooth on the right path");
    }
    const std::size_t n = left.size();
    if (left[n - 1] == up && n > 1 && left[n - 2] == ui) {
      left[n - 1] = v;
      note(log, at + "left path redirected to tooth " + vtext(v));
    } else if (left[n - 1] == up && n > 1 && left[n - 2] == um) {
      left.back() = ui;
      left.push_back(v);
      note(log, at + "left path redirected to tooth " + vtext(v) + " through " + vtext(ui));
    }
    if (left.back() == v && left.size() > 1 && left[left.size() - 2] == um) {
      left.insert(left.end() - 1, ui);
      note(log, at + "inserted " + vtext(ui) + " before the tooth on the left path");
    }

    const bool lu = std::find(left.begin(), left.end(), ui) != left.end();
    const bool ru = std::find(right.begin(), right.end(), ui) != right.end();
    const Vertex a = left.back(), b = right.front();
    VertexSequence lf = left, rf = right;
    Vertex root = ui, tooth = v;
    std::string how;
    if (lu && ru) {
      lf.pop_back();
      rf.erase(rf.begin());
      how = "both paths through the root; glued at " + vtext(ui);
    } else if (lu) {
      const bool through_prev = left.size() >= 3 && left[left.size() - 3] == um;
      if (b == um && through_prev) {
        lf.resize(lf.size() - 2);
        root = um;
        tooth = ui;
        how = "left path cut back to " + vtext(um);
      } else if (b == um) {
        lf.back() = um;
        how = "tooth replaced by " + vtext(um) + " on the left path";
      } else {
        tooth = up;
        how = "left path glued at the tooth";
      }
    } else if (ru) {
      const bool through_next = right.size() >= 3 && right[2] == up;
      if (a == up && through_next) {
        rf.erase(rf.begin(), rf.begin() + 2);
        root = up;
        tooth = ui;
        how = "right path cut back to " + vtext(up);
      } else if (a == up) {
        rf.front() = up;
        how = "tooth replaced by " + vtext(up) + " on the right path";
      } else {
        tooth = um;
        how = "right path glued at the tooth";
      }
    } else if (a == v && b == v) {
      root = v;
      tooth = ui;
      how = "both paths end at the tooth";
    } else {
      lf.push_back(ui);
      rf.insert(rf.begin(), ui);
      tooth = a == v ? up : (b == v ? um : v);
      how = "joined through " + vtext(ui) +
            (a == v ? " from the tooth" : b == v ? " to the tooth" : " between base neighbours");
    }
    note(log, at + how + "; new root " + vtext(root) + " with tooth " + vtext(tooth));
    out.insert(out.end(), lf.begin(), lf.end() - 1);
    new_teeth.emplace_back(tooth, root);
    cur = rf;
  }
  out.insert(out.end(), cur.begin(), cur.end());

  RakeEmbedding dense;
  dense.base = out;
  dense.density = s + 5;
  for (auto [tooth, root] : new_teeth) {
    auto it = std::find(out.begin(), out.end(), root);
    if (it == out.end())
      throw InsufficientInput("glued base lost root " + vtext(root));
    dense.teeth.emplace_back(tooth, static_cast<std::size_t>(it - out.begin()));
  }
  if (auto c = check_rake(g, dense); !c)
    throw InsufficientInput("glued rake does not validate: " + c.diagnostic);
  note(log, "dense rake: base of " + std::to_string(out.size()) + " vertices, " +
                std::to_string(dense.teeth.size()) + " teeth");
  return dense;
}

namespace {

struct InducedRake {
  VertexSequence base;
  std::vector<std::pair<Vertex, std::size_t>> teeth;  // sorted by root index
};

InducedRake induced_base_rake(const Graph& g, const RakeEmbedding& r,
                              std::vector<std::string>* log) {
  const auto& base = r.base;
  auto sorted_teeth = [](InducedRake x) {
    std::sort(x.teeth.begin(), x.teeth.end(), [](auto a, auto b) { return a.second < b.second; });
    return x;
  };
  if (is_chordless_path(g, base)) return sorted_teeth({base, r.teeth});

  // Longest chordless stretch of the base by number of roots.
  InducedRake block;
  for (std::size_t a = 0; a < base.size(); ++a) {
    std::size_t b = a;
    while (b + 1 < base.size()) {
      bool chord = false;
      for (std::size_t x = a; x + 1 <= b && !chord; ++x) chord = g.has_edge(base[x], base[b + 1]);
      if (chord) break;
      ++b;
    }
    InducedRake cand;
    cand.base.assign(base.begin() + static_cast<std::ptrdiff_t>(a),
                     base.begin() + static_cast<std::ptrdiff_t>(b) + 1);
    for (auto [t, idx] : r.teeth)
      if (idx >= a && idx <= b) cand.teeth.emplace_back(t, idx - a);
    if (cand.teeth.size() > block.teeth.size()) block = cand;
  }

  // Blocks of a chordless path through the base vertices.
  InducedRake blocks;
  blocks.base = shortest_within(g, base, base.front(), base.back());
  std::vector<std::size_t> where(g.order(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < blocks.base.size(); ++i) where[blocks.base[i]] = i;
  for (std::size_t i = 0; i + 1 < base.size(); ++i)
    if (where[base[i]] != static_cast<std::size_t>(-1) &&
        where[base[i + 1]] == static_cast<std::size_t>(-1))
      blocks.teeth.emplace_back(base[i + 1], where[base[i]]);

  note(log, "base has chords; stretch keeps " + std::to_string(block.teeth.size()) +
                " teeth, block decomposition gives " + std::to_string(blocks.teeth.size()));
  return sorted_teeth(blocks.teeth.size() > block.teeth.size() ? blocks : block);
}

}  // namespace

DenseRakeResult canonical_from_dense_rake(const Graph& g, const RakeEmbedding& r, std::size_t s,
                                          std::size_t q, std::vector<std::string>* log,
                                          const ExtractionLimits& limits,
                                          const CanonicalOptions& options) {
  if (!r.density) throw MalformedInput("rake carries no density");
  if (auto c = check_rake(g, r); !c) throw MalformedInput("invalid rake: " + c.diagnostic);
  if (q == 0) throw MalformedInput("q must be positive");

  InducedRake ir = induced_base_rake(g, r, log);
  const VertexSequence& u = ir.base;
  const std::size_t len = u.size();
  std::vector<std::size_t> pos(g.order(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < len; ++i) pos[u[i]] = i;
  auto base_neighbours = [&](Vertex t) {
    std::vector<std::size_t> p;
    for (Vertex w : g.adjacent(t))
      if (pos[w] != static_cast<std::size_t>(-1)) p.push_back(pos[w]);
    std::sort(p.begin(), p.end());
    return p;
  };
  if (ir.teeth.empty()) throw InsufficientInput("no teeth left on an induced base");

  VertexSet tooth_set;
  for (auto [t, idx] : ir.teeth) tooth_set.push_back(t);
  std::sort(tooth_set.begin(), tooth_set.end());

  // Teeth clique of size 2q.
  try {
    auto sub = induced_subgraph(g, tooth_set);
    if (auto clique = find_clique(sub.graph, 2 * q, limits.search)) {
      VertexSet a, b;
      for (std::size_t i = 0; i < clique->size(); ++i)
        (i < q ? a : b).push_back(sub.to_host[(*clique)[i]]);
      note(log, "teeth contain a clique of size " + std::to_string(2 * q));
      return Biclique{a, b};
    }
  } catch (const ResourceLimit& e) {
    note(log, std::string("teeth clique search skipped: ") + e.what());
  }
  VertexSet independent = maximum_independent_set(g, tooth_set, limits.search);
  note(log, "independent teeth: " + std::to_string(independent.size()) + " of " +
                std::to_string(tooth_set.size()));

  const std::size_t min_hole = std::max<std::size_t>(s, kHoleMinimumOrder);
  for (auto [t, idx] : ir.teeth) {
    auto p = base_neighbours(t);
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
      if (p[k + 1] - p[k] < 2 || p[k + 1] - p[k] + 2 < min_hole) continue;
      VertexSequence cycle{t};
      cycle.insert(cycle.end(), u.begin() + static_cast<std::ptrdiff_t>(p[k]),
                   u.begin() + static_cast<std::ptrdiff_t>(p[k + 1]) + 1);
      if (auto w = validated(g, hole_witness(cycle), options)) {
        note(log, "tooth " + vtext(t) + " has base neighbours on both sides of a gap of " +
                      std::to_string(p[k + 1] - p[k] - 1));
        return *w;
      }
    }
  }

  const std::size_t min_body = std::max(s, options.hgraph_minimum_order);
  std::vector<std::pair<Vertex, std::vector<std::size_t>>> kept;
  for (auto [t, idx] : ir.teeth)
    if (std::binary_search(independent.begin(), independent.end(), t))
      kept.emplace_back(t, base_neighbours(t));
  for (std::size_t a = 0; a < kept.size(); ++a)
    for (std::size_t b = kept.size(); b-- > a + 1;) {
      const std::size_t i = kept[a].second.back(), j = kept[b].second.front();
      if (i >= j || i == 0 || j + 1 >= len || j - i + 1 < min_body) continue;
      VertexSequence body(u.begin() + static_cast<std::ptrdiff_t>(i),
                          u.begin() + static_cast<std::ptrdiff_t>(j) + 1);
      auto w = h_graph_witness(g, body, {kept[a].first, u[i - 1]}, {kept[b].first, u[j + 1]});
      if (auto ok = validated(g, w, options)) {
        note(log, "teeth " + vtext(kept[a].first) + " and " + vtext(kept[b].first) +
                      " span a body of " + std::to_string(body.size()));
        return *ok;
      }
    }

  try {
    VertexSet all(u.begin(), u.end());
    all.insert(all.end(), tooth_set.begin(), tooth_set.end());
    std::sort(all.begin(), all.end());
    auto sub = induced_subgraph(g, all);
    if (auto b = find_biclique(sub.graph, q, q, limits.search)) {
      VertexSet x, y;
      for (Vertex v : b->side_a) x.push_back(sub.to_host[v]);
      for (Vertex v : b->side_b) y.push_back(sub.to_host[v]);
      note(log, "biclique among base and teeth");
      return Biclique{x, y};
    }
  } catch (const ResourceLimit& e) {
    note(log, std::string("biclique search skipped: ") + e.what());
  }
  throw InsufficientInput("rake too small: no hole through a tooth, no tooth pair spanning a body "
                          "of order " + std::to_string(min_body) + ", no biclique of order " +
                          std::to_string(q));
}

}  // namespace canonwit
