#pragma once

#include <vector>

#include "twr/graph.hpp"

namespace twr {

/// Nested sets X_1 < ... < X_q whose boundaries all have the minimum s-t
/// separator size and together cover every minimum s-t separator.
struct SeparatorChain {
  int ell = 0;
  Vertex s = -1;
  Vertex t = -1;
  int num_vertices = 0;
  std::vector<VertexSet> sets;        // X_1 .. X_q, strictly increasing
  std::vector<VertexSet> boundaries;  // S_i = boundary(X_i)
  int uncrossing_steps = 0;

  int q() const { return static_cast<int>(sets.size()); }

  /// X_i for 0 <= i <= q + 1 with the sentinels X_0 = {} and X_{q+1} = V - {t}.
  VertexSet set(int i) const;
  /// S_i for 0 <= i <= q + 1 with the sentinels S_0 = {s} and S_{q+1} = {t}.
  VertexSet separator(int i) const;
};

/// Builds the chain by collecting the source side of a minimum separator
/// through every vertex that lies on one, then uncrossing until nested.
SeparatorChain build_chain(const Graph& g, Vertex s, Vertex t);

/// Checks nesting, boundary sizes, the containment bounds on every X_i, and
/// that each of `all_min_separators` lies in the union of the boundaries.
bool validate_chain(const Graph& g, Vertex s, Vertex t, const SeparatorChain& chain,
                    const std::vector<VertexSet>& all_min_separators);

}  // namespace twr
