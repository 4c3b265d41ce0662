#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "twr/graph.hpp"

namespace twr {

struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::vector<int>> tree;  // adjacency over bag indices

  int width() const;
  int num_bags() const { return static_cast<int>(bags.size()); }
};

/// Greedy min-fill elimination order; ties go to the lowest vertex id.
std::vector<Vertex> min_fill_order(const Graph& g);

/// Decomposition whose bags are the elimination cliques of `order`.
TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<Vertex>& order);

struct ExactTreewidth {
  int width = -1;
  std::vector<Vertex> order;  // an optimal elimination order
};

/// Exact treewidth by dynamic programming over vertex subsets (n <= 20).
ExactTreewidth exact_treewidth(const Graph& g);

/// Min-fill decomposition; for n <= 12 falls back to an exact order when the
/// heuristic width exceeds n/2.
TreeDecomposition decompose(const Graph& g);

/// Vertex coverage, edge coverage, and connectivity of every vertex's bags.
bool validate_decomposition(const Graph& g, const TreeDecomposition& td);

enum class NiceKind { kLeaf, kIntroduce, kForget, kJoin };

struct NiceNode {
  NiceKind kind = NiceKind::kLeaf;
  VertexSet bag;
  Vertex vertex = -1;         // introduced or forgotten vertex
  std::vector<int> children;  // 0, 1 or 2 node indices
};

/// Rooted nice decomposition; children precede parents and the root (last
/// node) has an empty bag.
struct NiceDecomposition {
  std::vector<NiceNode> nodes;
  int root = -1;

  int width() const;
};

/// Converts `td` rooted at bag `root_bag`. Throws DomainError when the tree is
/// malformed or some vertex's bags are not connected.
NiceDecomposition make_nice(const TreeDecomposition& td, int root_bag = 0);

/// Lowest-index bag containing v, or 0 if none does.
int bag_containing(const TreeDecomposition& td, Vertex v);

/// PACE 2017 `.td` text: `s td <bags> <width+1> <n>`, `b <id> <v...>`, edges.
std::string format_td(const TreeDecomposition& td, int num_vertices);
TreeDecomposition parse_td(std::string_view text);

}  // namespace twr
