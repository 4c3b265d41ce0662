#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "twr/graph.hpp"

namespace twr {

/// A decidable graph class closed under induced subgraphs.
struct HereditaryClass {
  std::string name;
  std::function<bool(const Graph&)> contains;
  int max_check = 16;  // membership is only queried on graphs this small
};

namespace classes {

HereditaryClass any_graph();
HereditaryClass edgeless();
/// Vertex count minus maximum matching size is at most `k`.
HereditaryClass match_deficiency(int k);
HereditaryClass forest();
HereditaryClass bipartite();
HereditaryClass max_degree(int d);
/// Graphs containing none of `forbidden` as an induced subgraph.
HereditaryClass forbidden_induced(std::vector<Graph> forbidden);

}  // namespace classes

/// Parses `any`, `edgeless`, `matchdef:<k>`, `forest`, `bipartite`,
/// `maxdeg:<d>`, `forbid:<g6>[,<g6>...]`.
HereditaryClass parse_class_selector(std::string_view selector);

/// Exact maximum matching size by branching; intended for small graphs.
int max_matching_size(const Graph& g);
/// A maximum matching of a small graph, edges in ascending order.
std::vector<Edge> max_matching(const Graph& g);

/// Decodes a graph6 string (n <= 62).
Graph parse_graph6(std::string_view text);

/// True when `pattern` occurs as an induced subgraph of `host`.
bool has_induced_subgraph(const Graph& host, const Graph& pattern);

/// Spot check of closure under induced subgraphs over all labeled graphs on
/// at most `max_n` vertices. Returns false on the first violation.
bool check_hereditary(const HereditaryClass& cls, int max_n = 5);

}  // namespace twr
