#include "twr/problems.hpp"

#include <algorithm>

#include "twr/check.hpp"
#include "twr/classes.hpp"
#include "twr/separation.hpp"

namespace twr {

std::optional<VertexSet> stable_st_cut(const Graph& g, Vertex s, Vertex t, int k) {
  auto w = g_mincut(g, s, t, k, classes::edgeless());
  if (!w) return std::nullopt;
  return w->deletion_set;
}

namespace {

// Digit i of `code` in base 3: 0 = removed, 1 = black, 2 = white.
void split_by_code(const VertexSet& w, long long code, std::vector<Vertex>& removed,
                   std::vector<Vertex>& black, std::vector<Vertex>& white) {
  for (Vertex v : w) {
    int digit = static_cast<int>(code % 3);
    code /= 3;
    (digit == 0 ? removed : digit == 1 ? black : white).push_back(v);
  }
}

long long power_of_three(std::size_t e) {
  long long out = 1;
  while (e--) out *= 3;
  return out;
}

struct Sides {
  VertexSet x, y;
};

// X and Y for a coloring of S0 against the 2-coloring of G - S0.
Sides separation_sides(const Graph& g, const VertexSet& s0, const VertexSet& black,
                       const VertexSet& white) {
  InducedSubgraph rest = delete_vertices(g, s0);
  auto coloring = two_coloring(rest.graph);
  if (!coloring) throw DomainError("S0 is not an odd cycle transversal");
  std::vector<char> is_black(static_cast<std::size_t>(g.num_vertices()), 0);
  for (Vertex v : coloring->black) is_black[rest.to_parent[v]] = 1;
  VertexSet need_black = set_difference(boundary(g, white), s0);
  VertexSet need_white = set_difference(boundary(g, black), s0);
  std::vector<Vertex> x, y;
  for (Vertex v : need_black) (is_black[v] ? x : y).push_back(v);
  for (Vertex v : need_white) (is_black[v] ? y : x).push_back(v);
  return {VertexSet(std::move(x)), VertexSet(std::move(y))};
}

// Shrinks the transversal `w` of size k+1 to one of size at most k.
std::optional<VertexSet> compress(const Graph& g, const VertexSet& w, int k) {
  const long long branches = power_of_three(w.size());
  for (long long code = 0; code < branches; ++code) {
    std::vector<Vertex> r, b, wh;
    split_by_code(w, code, r, b, wh);
    if (static_cast<int>(r.size()) > k) continue;
    VertexSet black(std::move(b)), white(std::move(wh));
    if (!is_independent(g, black) || !is_independent(g, white)) continue;
    Sides sides = separation_sides(g, w, black, white);

    InducedSubgraph rest = delete_vertices(g, w);
    const int m = rest.graph.num_vertices();
    std::vector<Vertex> index(static_cast<std::size_t>(g.num_vertices()), -1);
    for (int i = 0; i < m; ++i) index[rest.to_parent[i]] = i;
    std::vector<Edge> edges = rest.graph.edges();
    for (Vertex v : sides.x) edges.emplace_back(index[v], m);
    for (Vertex v : sides.y) edges.emplace_back(index[v], m + 1);
    Graph flow(m + 2, edges);
    const int budget = k - static_cast<int>(r.size());
    SeparatorResult sep = min_vertex_separator(flow, {m}, {m + 1}, budget);
    if (!sep.finite()) continue;
    for (Vertex v : sep.witness) r.push_back(rest.to_parent[v]);
    return VertexSet(std::move(r));
  }
  return std::nullopt;
}

std::optional<VertexSet> oct_with_budget(const Graph& g, int k) {
  VertexSet s;
  for (Vertex i = 0; i < g.num_vertices(); ++i) {
    s.insert(i);
    if (static_cast<int>(s.size()) <= k) continue;
    Graph prefix = induced_subgraph(g, VertexSet::range(i + 1)).graph;
    auto smaller = compress(prefix, s, k);
    if (!smaller) return std::nullopt;
    s = *smaller;
  }
  return s;
}

}  // namespace

std::optional<VertexSet> odd_cycle_transversal(const Graph& g, int k) {
  if (k < 0) throw DomainError("budget must be non-negative");
  for (int budget = 0; budget <= k; ++budget) {
    auto s = oct_with_budget(g, budget);
    if (!s) continue;
    TWR_ASSERT(is_bipartite(delete_vertices(g, *s).graph));
    return s;
  }
  return std::nullopt;
}

std::optional<BipartizationBranch> bipartization_branch(const Graph& g, const VertexSet& s0,
                                                        const VertexSet& removed,
                                                        const VertexSet& black,
                                                        const VertexSet& white) {
  require_subset(g, s0, "S0");
  if (set_union(set_union(removed, black), white) != s0 ||
      removed.size() + black.size() + white.size() != s0.size())
    throw DomainError("removed, black and white must partition S0");
  if (!is_independent(g, black) || !is_independent(g, white)) return std::nullopt;

  BipartizationBranch out;
  out.s0 = s0;
  out.removed = removed;
  out.black = black;
  out.white = white;
  Sides sides = separation_sides(g, s0, black, white);
  out.x = sides.x;
  out.y = sides.y;

  InducedSubgraph kept = delete_vertices(g, set_union(black, white));
  const int m = kept.graph.num_vertices();
  std::vector<Vertex> index(static_cast<std::size_t>(g.num_vertices()), -1);
  for (int i = 0; i < m; ++i) index[kept.to_parent[i]] = i;
  out.s = m;
  out.t = m + 1;
  std::vector<Edge> edges = kept.graph.edges();
  for (Vertex v : set_union(out.x, removed)) edges.emplace_back(index[v], out.s);
  for (Vertex v : set_union(out.y, removed)) edges.emplace_back(index[v], out.t);
  out.gprime = Graph(m + 2, edges);
  out.to_parent = kept.to_parent;
  out.to_parent.push_back(-1);
  out.to_parent.push_back(-1);
  return out;
}

std::optional<VertexSet> stable_bipartization(const Graph& g, int k) {
  if (k < 0) throw DomainError("budget must be non-negative");
  auto s0 = odd_cycle_transversal(g, k);
  if (!s0) return std::nullopt;
  if (s0->empty()) return VertexSet{};

  const HereditaryClass edgeless = classes::edgeless();
  const long long branches = power_of_three(s0->size());
  for (long long code = 0; code < branches; ++code) {
    std::vector<Vertex> r, b, w;
    split_by_code(*s0, code, r, b, w);
    VertexSet removed(std::move(r));
    if (!is_independent(g, removed)) continue;
    auto branch = bipartization_branch(g, *s0, removed, VertexSet(std::move(b)),
                                       VertexSet(std::move(w)));
    if (!branch) continue;
    auto found = g_mincut(branch->gprime, branch->s, branch->t, k, edgeless);
    if (!found) continue;
    std::vector<Vertex> s;
    for (Vertex v : found->deletion_set) s.push_back(branch->to_parent[v]);
    VertexSet result(std::move(s));
    if (is_independent(g, result) && is_bipartite(delete_vertices(g, result).graph))
      return result;
  }
  return std::nullopt;
}

namespace {

// Maximum independent set of a bipartite graph via a maximum matching and
// the vertex cover it certifies.
VertexSet bipartite_max_independent(const Graph& h) {
  auto coloring = two_coloring(h);
  TWR_ASSERT(coloring.has_value());
  const int n = h.num_vertices();
  std::vector<Vertex> mate(static_cast<std::size_t>(n), -1);
  std::vector<char> seen;
  auto augment = [&](auto&& self, Vertex u) -> bool {
    for (Vertex w : h.neighbors(u)) {
      if (seen[w]) continue;
      seen[w] = 1;
      if (mate[w] < 0 || self(self, mate[w])) {
        mate[w] = u;
        mate[u] = w;
        return true;
      }
    }
    return false;
  };
  for (Vertex u : coloring->black) {
    seen.assign(static_cast<std::size_t>(n), 0);
    augment(augment, u);
  }
  // Alternating reachability from unmatched black vertices.
  std::vector<char> reached(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack;
  for (Vertex u : coloring->black)
    if (mate[u] < 0) {
      reached[u] = 1;
      stack.push_back(u);
    }
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : h.neighbors(u)) {
      if (reached[w]) continue;
      reached[w] = 1;
      if (mate[w] >= 0 && !reached[mate[w]]) {
        reached[mate[w]] = 1;
        stack.push_back(mate[w]);
      }
    }
  }
  std::vector<Vertex> out;
  for (Vertex u : coloring->black)
    if (reached[u]) out.push_back(u);
  for (Vertex w : coloring->white)
    if (!reached[w]) out.push_back(w);
  return VertexSet(std::move(out));
}

// Vertices outside D become k+1 independent twins so that no solution of
// size at most k can use them.
std::optional<VertexSet> stable_bipartization_within(const Graph& h, const VertexSet& d, int k) {
  std::vector<std::vector<Vertex>> copies(static_cast<std::size_t>(h.num_vertices()));
  std::vector<Vertex> origin;
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    int count = d.contains(v) ? 1 : k + 1;
    for (int c = 0; c < count; ++c) {
      copies[v].push_back(static_cast<Vertex>(origin.size()));
      origin.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (auto [u, w] : h.edges())
    for (Vertex cu : copies[u])
      for (Vertex cw : copies[w]) edges.emplace_back(cu, cw);
  Graph split(static_cast<int>(origin.size()), edges);
  auto s = stable_bipartization(split, k);
  if (!s) return std::nullopt;
  // A deleted twin of a vertex outside D always has a surviving twin with the
  // same neighborhood, so dropping it keeps the rest bipartite.
  std::vector<Vertex> inside;
  for (Vertex c : *s)
    if (d.contains(origin[c])) inside.push_back(origin[c]);
  return VertexSet(std::move(inside));
}

struct ExactSearch {
  // `to_orig` maps vertices of h to the caller's graph.
  std::optional<VertexSet> run(const Graph& h, const std::vector<Vertex>& to_orig,
                               const VertexSet& d, int k) {
    auto map_out = [&](const VertexSet& s) {
      std::vector<Vertex> out;
      for (Vertex v : s) out.push_back(to_orig[v]);
      return VertexSet(std::move(out));
    };
    auto cycle = shortest_odd_cycle(h);
    if (!cycle) {
      InducedSubgraph hd = induced_subgraph(h, d);
      VertexSet mis = bipartite_max_independent(hd.graph);
      if (static_cast<int>(mis.size()) < k) return std::nullopt;
      std::vector<Vertex> pick;
      for (int i = 0; i < k; ++i) pick.push_back(hd.to_parent[mis[i]]);
      return map_out(VertexSet(std::move(pick)));
    }
    if (k == 0) return std::nullopt;

    std::vector<Vertex> on_cycle;
    for (Vertex v : *cycle)
      if (d.contains(v)) on_cycle.push_back(v);
    if (on_cycle.empty()) return std::nullopt;

    if (static_cast<int>(on_cycle.size()) <= 3 * k + 1) {
      std::sort(on_cycle.begin(), on_cycle.end());
      for (Vertex v : on_cycle) {
        InducedSubgraph rest = delete_vertices(h, {v});
        std::vector<Vertex> index(static_cast<std::size_t>(h.num_vertices()), -1);
        for (std::size_t i = 0; i < rest.to_parent.size(); ++i)
          index[rest.to_parent[i]] = static_cast<Vertex>(i);
        std::vector<Vertex> next_d;
        for (Vertex u : d)
          if (u != v && !h.has_edge(u, v)) next_d.push_back(index[u]);
        std::vector<Vertex> next_orig;
        for (Vertex u : rest.to_parent) next_orig.push_back(to_orig[u]);
        auto found = run(rest.graph, next_orig, VertexSet(std::move(next_d)), k - 1);
        if (found) {
          found->insert(to_orig[v]);
          return found;
        }
      }
      return std::nullopt;
    }

    auto partial = stable_bipartization_within(h, d, k);
    if (!partial) return std::nullopt;
    VertexSet s = *partial;
    TWR_ASSERT(s.is_subset_of(d) && is_independent(h, s));
    TWR_ASSERT(is_bipartite(delete_vertices(h, s).graph));
    // The cycle is chordless here and each chosen vertex blocks at most three
    // of its allowed vertices, so enough non-adjacent ones remain.
    const int missing = k - static_cast<int>(s.size());
    const std::vector<Vertex>& cyc = *cycle;
    const int len = static_cast<int>(cyc.size());
    std::vector<char> picked(static_cast<std::size_t>(len), 0);
    int count = 0;
    for (int i = 0; i < len && count < missing; ++i) {
      Vertex v = cyc[i];
      if (!d.contains(v) || s.contains(v)) continue;
      bool blocked = false;
      for (Vertex u : s) blocked |= h.has_edge(u, v);
      if (blocked) continue;
      if (i > 0 && picked[i - 1]) continue;
      if (i == len - 1 && picked[0]) continue;
      picked[i] = 1;
      ++count;
    }
    TWR_ASSERT(count == missing);
    for (int i = 0; i < len; ++i)
      if (picked[i]) s.insert(cyc[i]);
    return map_out(s);
  }
};

}  // namespace

std::optional<VertexSet> exact_stable_bipartization(const Graph& g, int k,
                                                    const std::optional<VertexSet>& allowed) {
  if (k < 0) throw DomainError("budget must be non-negative");
  VertexSet d = VertexSet::range(g.num_vertices());
  if (allowed) {
    require_subset(g, *allowed, "allowed set");
    d = *allowed;
  }
  std::vector<Vertex> identity(static_cast<std::size_t>(g.num_vertices()));
  for (Vertex v = 0; v < g.num_vertices(); ++v) identity[v] = v;
  auto s = ExactSearch{}.run(g, identity, d, k);
  if (s) {
    TWR_ASSERT(static_cast<int>(s->size()) == k && s->is_subset_of(d));
    TWR_ASSERT(is_independent(g, *s) && is_bipartite(delete_vertices(g, *s).graph));
  }
  return s;
}

std::optional<EdgeCutWitness> edge_induced_vertex_cut(const Graph& g, Vertex s, Vertex t, int k) {
  if (!g.has_vertex(s) || !g.has_vertex(t)) throw DomainError("terminal out of range");
  if (s == t) throw DomainError("terminals must be distinct");
  if (k < 0) throw DomainError("budget must be non-negative");
  auto w = g_mincut(g, s, t, 2 * k, classes::match_deficiency(k));
  if (!w) return std::nullopt;

  const VertexSet& sep = w->deletion_set;
  InducedSubgraph inside = induced_subgraph(g, sep);
  std::vector<Edge> edges;
  std::vector<char> matched(static_cast<std::size_t>(g.num_vertices()), 0);
  for (auto [u, v] : max_matching(inside.graph)) {
    Vertex a = inside.to_parent[u], b = inside.to_parent[v];
    matched[a] = matched[b] = 1;
    edges.push_back(make_edge(a, b));
  }
  for (Vertex v : sep) {
    if (matched[v]) continue;
    // Partner preference: another separator vertex, then any non-terminal.
    Vertex best = -1;
    int best_rank = 3;
    for (Vertex u : g.neighbors(v)) {
      int rank = sep.contains(u) ? 0 : (u != s && u != t) ? 1 : 2;
      if (rank < best_rank) {
        best_rank = rank;
        best = u;
      }
    }
    TWR_ASSERT(best >= 0);
    edges.push_back(make_edge(v, best));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  EdgeCutWitness out;
  std::vector<Vertex> ends;
  for (auto [u, v] : edges)
    for (Vertex x : {u, v})
      if (x != s && x != t) ends.push_back(x);
  out.deleted = VertexSet(std::move(ends));
  out.edges = std::move(edges);
  TWR_ASSERT(static_cast<int>(out.edges.size()) <= k);
  TWR_ASSERT(is_separator(g, out.deleted, {s}, {t}));
  return out;
}

VertexSet exact_separator_union(const Graph& g, Vertex s, Vertex t, int k) {
  if (!g.has_vertex(s) || !g.has_vertex(t)) throw DomainError("terminal out of range");
  if (s == t) throw DomainError("terminals must be distinct");
  if (g.has_edge(s, t)) throw DomainError("terminals are adjacent");
  if (k < 0) throw DomainError("budget must be non-negative");
  std::vector<Vertex> out;
  if (k == 0) return {};
  const HereditaryClass any = classes::any_graph();
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (v == s || v == t) continue;
    InducedSubgraph rest = delete_vertices(g, {v});
    auto local = [&](Vertex u) { return u < v ? u : u - 1; };
    bool member = false;
    for (Vertex v1 : g.neighbors(v)) {
      for (Vertex v2 : g.neighbors(v)) {
        if (v1 == v2) continue;
        CutConstraints cons;
        cons.cut_pairs = {{local(s), local(t)}};
        cons.uncut_pairs = {{local(s), local(v1)}, {local(t), local(v2)}};
        if (g_multicut_uncut(rest.graph, cons, k - 1, any)) {
          member = true;
          break;
        }
      }
      if (member) break;
    }
    if (member) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

}  // namespace twr
