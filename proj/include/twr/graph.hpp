#pragma once

// Simple undirected graphs, vertex sets, and the elementary operations the
// rest of the library is built on. Vertices are 0-based internally; the text
// format and every user-facing output are 1-based.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace twr {

using Vertex = int;

/// Normalized undirected edge: first < second.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Raised when an argument violates an operation's precondition.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the text parsers; the message names the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  using const_iterator = std::vector<Vertex>::const_iterator;

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs);
  explicit VertexSet(std::vector<Vertex> vs);

  static VertexSet range(Vertex n);  // {0, ..., n-1}

  bool contains(Vertex v) const;
  void insert(Vertex v);
  void erase(Vertex v);

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }
  Vertex front() const { return members_.front(); }
  Vertex back() const { return members_.back(); }
  const_iterator begin() const { return members_.begin(); }
  const_iterator end() const { return members_.end(); }
  const std::vector<Vertex>& members() const { return members_; }

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);

/// Immutable simple undirected graph with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Duplicate edges collapse; loops and out-of-range endpoints throw DomainError.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges);

  int num_vertices() const { return static_cast<int>(adjacency_.size()); }
  int num_edges() const { return num_edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;
  bool has_vertex(Vertex v) const { return v >= 0 && v < num_vertices(); }

  /// All edges sorted by (min endpoint, max endpoint).
  std::vector<Edge> edges() const;

  /// Optional per-vertex origin annotations; empty when absent.
  const std::vector<std::string>& labels() const { return labels_; }
  Graph with_labels(std::vector<std::string> labels) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
  int num_edges_ = 0;
};

/// Throws DomainError unless every member of `set` is a vertex of `g`.
void require_subset(const Graph& g, const VertexSet& set, std::string_view what);

// --- text format -----------------------------------------------------------

/// Parses `c` comments, one `p <n> <m>` header and `m` lines `e <u> <v>`.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);
/// Emits the header followed by edges in sorted order.
std::string format_graph(const Graph& g);

// --- elementary operations ---------------------------------------------------

/// Vertices outside `x` with at least one neighbor in `x`.
VertexSet boundary(const Graph& g, const VertexSet& x);

/// Connected components of g minus `removed`, each sorted, ordered by minimum.
std::vector<VertexSet> components(const Graph& g, const VertexSet& removed = {});

/// Vertices reachable from `sources` in g minus `removed` (sources in `removed` are skipped).
VertexSet reachable(const Graph& g, const VertexSet& sources, const VertexSet& removed = {});

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // new id -> original id, ascending
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x);
/// g with `removed` deleted, remaining vertices relabeled in ascending order.
InducedSubgraph delete_vertices(const Graph& g, const VertexSet& removed);

struct ContractedGraph {
  Graph graph;
  Vertex a = -1;                  // image of the contracted set A
  Vertex b = -1;                  // image of the contracted set B
  std::vector<Vertex> to_parent;  // ids 0..|keep|-1 -> original keep vertices
};

/// G[keep + A + B] with A contracted to `a` and B contracted to `b`.
ContractedGraph contract_terminal_sets(const Graph& g, const VertexSet& keep, const VertexSet& a,
                                       const VertexSet& b);

struct TwoColoring {
  VertexSet black;
  VertexSet white;
};

/// Proper 2-coloring (minimum vertex of each component is black), or nothing.
std::optional<TwoColoring> two_coloring(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_independent(const Graph& g, const VertexSet& s);

/// A minimum-length odd cycle as a vertex sequence, or nothing if bipartite.
std::optional<std::vector<Vertex>> shortest_odd_cycle(const Graph& g);

/// 1-based rendering of a set, e.g. "{1,3}".
std::string to_string(const VertexSet& s);

}  // namespace twr
