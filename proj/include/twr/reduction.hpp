#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twr/chain.hpp"
#include "twr/graph.hpp"

namespace twr {

struct Torso {
  Graph graph;                    // on the members of C, relabeled ascending
  std::vector<Vertex> to_parent;  // torso id -> original id
  std::vector<Edge> added;        // torso edges absent from G, in original ids
};

/// Graph on C joining two members when they are adjacent in G or linked by a
/// path whose internal vertices all avoid C.
Torso torso(const Graph& g, const VertexSet& c);

/// The layers between consecutive chain members and the separator pools that
/// bound them: layer i is X_i - (X_{i-1} + S_{i-1}), pool i is S_i + S_{i-1}.
struct LayerSystem {
  SeparatorChain chain;
  std::vector<VertexSet> layers;  // index i-1 holds layer i, 1 <= i <= q+1
  std::vector<VertexSet> pools;
};

LayerSystem build_layers(const Graph& g, SeparatorChain chain);

struct TreewidthBounds {
  int ell = 0;
  int excess = 0;
  std::int64_t g_value = 0;
  std::int64_t f_value = 0;
  std::int64_t reduced_width_bound = 0;
  bool saturated = false;
  std::string warning;
};

/// g(l,0) = 6l, g(l,e) = 3(2l + 3^{2l}(g(l,e-1)+1)); f(l,0) = 1,
/// f(l,e) = 3^{2l} f(l,e-1) + 1. Saturates at INT64_MAX.
TreewidthBounds tw_bound(int ell, int excess);

struct CoverStats {
  int calls = 0;
  long long pairs_examined = 0;
  long long subproblems = 0;
  int max_depth = 0;
};

/// A superset of {s,t} and of every vertex on a minimal s-t separator of size
/// at most k, whose torso has treewidth bounded by g(l, k-l).
VertexSet cover_set(const Graph& g, Vertex s, Vertex t, int k, CoverStats* stats = nullptr);

inline constexpr Vertex kGadget = -1;

struct ReducedInstance {
  Graph gstar;
  VertexSet cover;      // C' in original ids
  VertexSet terminals;  // original ids
  int k = 0;
  std::vector<Vertex> origin;  // gstar id -> original id, or kGadget
  VertexSet undeletable;       // gadget vertices (gstar ids)
  std::int64_t width_bound = 0;
  int contributing_pairs = 0;

  /// gstar id of an original vertex, or -1 when it is not part of the cover.
  Vertex to_star(Vertex original) const;
  VertexSet to_star(const VertexSet& originals) const;
  VertexSet to_original(const VertexSet& star) const;
};

/// Replacement graph whose small minimal separators between any two
/// terminals coincide with those of G, and whose treewidth is bounded in k
/// and the number of terminals.
ReducedInstance reduce_instance(const Graph& g, const VertexSet& terminals, int k);

}  // namespace twr
