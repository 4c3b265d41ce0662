#include "twr/reduction.hpp"

#include <algorithm>
#include <limits>

#include "twr/check.hpp"
#include "twr/separation.hpp"

namespace twr {

Torso torso(const Graph& g, const VertexSet& c) {
  require_subset(g, c, "C");
  std::vector<Vertex> index(static_cast<std::size_t>(g.num_vertices()), -1);
  for (std::size_t i = 0; i < c.size(); ++i) index[c[i]] = static_cast<Vertex>(i);

  std::vector<Edge> edges;
  for (Vertex u : c)
    for (Vertex w : g.neighbors(u))
      if (u < w && index[w] >= 0) edges.emplace_back(index[u], index[w]);

  std::vector<Edge> added;
  for (const VertexSet& comp : components(g, c)) {
    VertexSet attach = boundary(g, comp);
    for (std::size_t i = 0; i < attach.size(); ++i)
      for (std::size_t j = i + 1; j < attach.size(); ++j) {
        Vertex u = attach[i], w = attach[j];
        edges.emplace_back(index[u], index[w]);
        if (!g.has_edge(u, w)) added.emplace_back(u, w);
      }
  }
  std::sort(added.begin(), added.end());
  added.erase(std::unique(added.begin(), added.end()), added.end());
  return {Graph(static_cast<int>(c.size()), edges), c.members(), std::move(added)};
}

LayerSystem build_layers(const Graph& g, SeparatorChain chain) {
  LayerSystem sys;
  const int q = chain.q();
  for (int i = 1; i <= q + 1; ++i) {
    VertexSet layer =
        set_difference(chain.set(i), set_union(chain.set(i - 1), chain.separator(i - 1)));
    VertexSet pool = set_union(chain.separator(i), chain.separator(i - 1));
    // A layer only touches its own pool.
    TWR_ASSERT(set_difference(boundary(g, layer), pool).empty());
    sys.layers.push_back(std::move(layer));
    sys.pools.push_back(std::move(pool));
  }
  sys.chain = std::move(chain);
  return sys;
}

namespace {

constexpr std::int64_t kSaturated = std::numeric_limits<std::int64_t>::max();

std::int64_t sat_mul(std::int64_t a, std::int64_t b, bool& saturated) {
  if (a != 0 && b > kSaturated / a) {
    saturated = true;
    return kSaturated;
  }
  return a * b;
}

std::int64_t sat_add(std::int64_t a, std::int64_t b, bool& saturated) {
  if (a > kSaturated - b) {
    saturated = true;
    return kSaturated;
  }
  return a + b;
}

}  // namespace

TreewidthBounds tw_bound(int ell, int excess) {
  if (ell < 1 || excess < 0) throw DomainError("tw_bound needs ell >= 1 and excess >= 0");
  TreewidthBounds b;
  b.ell = ell;
  b.excess = excess;
  bool sat = false;
  std::int64_t pairs = 1;  // 3^{2l}
  for (int i = 0; i < 2 * ell; ++i) pairs = sat_mul(pairs, 3, sat);
  std::int64_t g = 6LL * ell;
  std::int64_t f = 1;
  for (int e = 1; e <= excess; ++e) {
    g = sat_mul(3, sat_add(2LL * ell, sat_mul(pairs, sat_add(g, 1, sat), sat), sat), sat);
    f = sat_add(sat_mul(f, pairs, sat), 1, sat);
  }
  b.g_value = g;
  b.f_value = f;
  b.saturated = sat;
  if (sat) b.warning = "bound overflowed 64 bits and was saturated";
  return b;
}

namespace {

struct CoverBuilder {
  CoverStats stats;

  VertexSet run(const Graph& g, Vertex s, Vertex t, int k, int depth) {
    ++stats.calls;
    stats.max_depth = std::max(stats.max_depth, depth);
    VertexSet result{s, t};
    if (g.has_edge(s, t) || k < 0) return result;
    SeparatorResult min_sep = min_vertex_separator(g, {s}, {t}, k);
    // No vertex lies on a minimal separator when s and t are already apart.
    if (!min_sep.finite() || min_sep.size == 0) return result;
    const int ell = min_sep.size;
    const int excess = k - ell;

    LayerSystem sys = build_layers(g, build_chain(g, s, t));
    for (int i = 0; i <= sys.chain.q() + 1; ++i) result = set_union(result, sys.chain.separator(i));
    if (excess == 0) return result;

    for (std::size_t li = 0; li < sys.layers.size(); ++li) {
      const VertexSet& layer = sys.layers[li];
      if (layer.empty()) continue;
      const VertexSet& pool = sys.pools[li];
      const std::size_t p = pool.size();
      std::size_t assignments = 1;
      for (std::size_t i = 0; i < p; ++i) assignments *= 3;
      // Digit d of the base-3 code: 0 = unused, 1 = A, 2 = B. Only codes whose
      // first used pool vertex is in A are visited; swapping A and B yields the
      // same contracted graph with a and b exchanged.
      for (std::size_t code = 0; code < assignments; ++code) {
        std::vector<Vertex> side_a, side_b;
        std::size_t rest = code;
        for (std::size_t i = 0; i < p; ++i, rest /= 3) {
          if (rest % 3 == 1) side_a.push_back(pool[i]);
          if (rest % 3 == 2) side_b.push_back(pool[i]);
        }
        if (side_a.empty() || side_b.empty() || side_b.front() < side_a.front()) continue;
        ++stats.pairs_examined;
        ContractedGraph h = contract_terminal_sets(g, layer, VertexSet(std::move(side_a)),
                                                   VertexSet(std::move(side_b)));
        if (h.graph.has_edge(h.a, h.b)) continue;
        SeparatorResult sub_sep = min_vertex_separator(h.graph, {h.a}, {h.b}, k);
        if (!sub_sep.finite()) continue;
        const int sub_k = std::min(k, sub_sep.size + excess - 1);
        ++stats.subproblems;
        for (Vertex v : run(h.graph, h.a, h.b, sub_k, depth + 1))
          if (v != h.a && v != h.b) result.insert(h.to_parent[v]);
      }
    }
    return result;
  }
};

}  // namespace

VertexSet cover_set(const Graph& g, Vertex s, Vertex t, int k, CoverStats* stats) {
  if (!g.has_vertex(s) || !g.has_vertex(t)) throw DomainError("terminal out of range");
  if (s == t) throw DomainError("terminals must be distinct");
  CoverBuilder builder;
  VertexSet out = builder.run(g, s, t, k, 0);
  if (stats) *stats = builder.stats;
  return out;
}

Vertex ReducedInstance::to_star(Vertex original) const {
  auto it = std::lower_bound(cover.begin(), cover.end(), original);
  if (it == cover.end() || *it != original) return -1;
  return static_cast<Vertex>(it - cover.begin());
}

VertexSet ReducedInstance::to_star(const VertexSet& originals) const {
  std::vector<Vertex> out;
  for (Vertex v : originals) {
    Vertex w = to_star(v);
    if (w < 0) throw DomainError("vertex is not part of the reduced instance");
    out.push_back(w);
  }
  return VertexSet(std::move(out));
}

VertexSet ReducedInstance::to_original(const VertexSet& star) const {
  std::vector<Vertex> out;
  for (Vertex v : star) {
    if (origin.at(static_cast<std::size_t>(v)) == kGadget)
      throw DomainError("gadget vertex has no original counterpart");
    out.push_back(origin[static_cast<std::size_t>(v)]);
  }
  return VertexSet(std::move(out));
}

ReducedInstance reduce_instance(const Graph& g, const VertexSet& terminals, int k) {
  if (terminals.size() < 2) throw DomainError("at least two terminals are required");
  require_subset(g, terminals, "terminal set");
  if (k < 0) throw DomainError("budget must be non-negative");

  ReducedInstance out;
  out.terminals = terminals;
  out.k = k;
  VertexSet cover = terminals;
  std::int64_t g_max = 0;
  bool sat = false;
  for (std::size_t i = 0; i < terminals.size(); ++i)
    for (std::size_t j = i + 1; j < terminals.size(); ++j) {
      Vertex s = terminals[i], t = terminals[j];
      if (g.has_edge(s, t)) continue;
      SeparatorResult sep = min_vertex_separator(g, {s}, {t}, k);
      if (!sep.finite()) continue;
      cover = set_union(cover, cover_set(g, s, t, k));
      ++out.contributing_pairs;
      if (sep.size > 0) {
        TreewidthBounds b = tw_bound(sep.size, k - sep.size);
        g_max = std::max(g_max, b.g_value);
        sat |= b.saturated;
      }
    }
  out.cover = cover;

  Torso tor = torso(g, cover);
  const int base = static_cast<int>(cover.size());
  std::vector<Edge> edges;
  for (auto [u, w] : tor.graph.edges()) {
    if (g.has_edge(tor.to_parent[u], tor.to_parent[w])) edges.emplace_back(u, w);
  }
  out.origin = cover.members();
  Vertex next = base;
  std::vector<Vertex> gadgets;
  for (auto [u, w] : tor.added) {
    Vertex su = out.to_star(u), sw = out.to_star(w);
    for (int c = 0; c <= k; ++c, ++next) {
      edges.emplace_back(su, next);
      edges.emplace_back(sw, next);
      out.origin.push_back(kGadget);
      gadgets.push_back(next);
    }
  }
  out.gstar = Graph(next, edges);
  out.undeletable = VertexSet(std::move(gadgets));

  std::int64_t pairs = std::max(1, out.contributing_pairs);
  std::int64_t bound = sat_add(sat_mul(3 * pairs, sat_add(g_max, 1, sat), sat), 1, sat);
  out.width_bound = std::max<std::int64_t>(bound, static_cast<std::int64_t>(terminals.size()));
  return out;
}

}  // namespace twr
