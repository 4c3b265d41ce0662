#pragma once

#include <optional>
#include <vector>

#include "twr/graph.hpp"
#include "twr/solver.hpp"

namespace twr {

/// Independent s-t separator of size at most k.
std::optional<VertexSet> stable_st_cut(const Graph& g, Vertex s, Vertex t, int k);

/// A minimum odd cycle transversal if its size is at most k.
std::optional<VertexSet> odd_cycle_transversal(const Graph& g, int k);

/// One branch of the compression step: the initial transversal S0 split into
/// removed, black and white parts, and the terminal sides derived from them.
struct BipartizationBranch {
  VertexSet s0, removed, black, white;
  VertexSet x, y;     // sides to separate, original ids
  Graph gprime;       // G - (black + white) plus s and t
  Vertex s = -1, t = -1;
  std::vector<Vertex> to_parent;  // gprime id -> original id (s, t map to -1)
};

/// Builds the auxiliary separation instance for one coloring of S0. Returns
/// nothing when `black` or `white` is not independent.
std::optional<BipartizationBranch> bipartization_branch(const Graph& g, const VertexSet& s0,
                                                        const VertexSet& removed,
                                                        const VertexSet& black,
                                                        const VertexSet& white);

/// Independent S, |S| <= k, with G - S bipartite.
std::optional<VertexSet> stable_bipartization(const Graph& g, int k);

/// Independent S, |S| = k, with G - S bipartite. With `allowed`, S must lie
/// inside it.
std::optional<VertexSet> exact_stable_bipartization(const Graph& g, int k,
                                                    const std::optional<VertexSet>& allowed = {});

struct EdgeCutWitness {
  std::vector<Edge> edges;
  VertexSet deleted;  // endpoints of `edges` other than s and t
};

/// At most k edges whose endpoints, terminals excluded, separate s and t.
std::optional<EdgeCutWitness> edge_induced_vertex_cut(const Graph& g, Vertex s, Vertex t, int k);

/// Every vertex lying on some minimal s-t separator of size at most k.
VertexSet exact_separator_union(const Graph& g, Vertex s, Vertex t, int k);

}  // namespace twr
