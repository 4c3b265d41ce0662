#pragma once

#include <limits>
#include <optional>

#include "twr/graph.hpp"

namespace twr {

enum class SeparatorStatus {
  kFinite,     // a minimum separator was found
  kInfinite,   // no separator avoiding the terminal sets exists
  kExceedsCap  // the minimum is larger than the requested cap
};

struct SeparatorResult {
  static constexpr int kInfiniteSize = std::numeric_limits<int>::max();

  SeparatorStatus status = SeparatorStatus::kInfinite;
  int size = kInfiniteSize;
  VertexSet witness;      // empty unless finite
  VertexSet source_side;  // reachable from the source set once the witness is removed

  bool finite() const { return status == SeparatorStatus::kFinite; }
};

/// Minimum vertex set, disjoint from A and B, separating A from B in G minus
/// `removed`. Unit-capacity augmenting paths on the split graph; the witness
/// is the cut closest to A. With `cap`, stops once the flow exceeds it.
SeparatorResult min_vertex_separator(const Graph& g, const VertexSet& a, const VertexSet& b,
                                     std::optional<int> cap = std::nullopt,
                                     const VertexSet& removed = {});

/// True iff no component of G - S meets both A - S and B - S.
bool is_separator(const Graph& g, const VertexSet& s, const VertexSet& a, const VertexSet& b);

/// Drops removable vertices of S in ascending order; S must separate A and B.
VertexSet minimalize_separator(const Graph& g, const VertexSet& s, const VertexSet& a,
                               const VertexSet& b);

/// A minimum s-t separator containing v, if one exists.
std::optional<SeparatorResult> min_separator_containing(const Graph& g, Vertex s, Vertex t,
                                                        Vertex v);

}  // namespace twr
