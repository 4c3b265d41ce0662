#include "twr/classes.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace twr {
namespace {

// Best matching on the vertices still marked free; `lowest` is the first
// candidate vertex to decide.
int match_rec(const Graph& g, std::vector<char>& free, Vertex lowest, std::vector<Edge>* best,
              std::vector<Edge>& current, int& best_size) {
  Vertex v = lowest;
  while (v < g.num_vertices() && !free[v]) ++v;
  if (v >= g.num_vertices()) {
    int size = static_cast<int>(current.size());
    if (size > best_size) {
      best_size = size;
      if (best) *best = current;
    }
    return size;
  }
  // Upper bound: every remaining free vertex matched in pairs.
  int remaining = 0;
  for (Vertex w = v; w < g.num_vertices(); ++w) remaining += free[w];
  if (static_cast<int>(current.size()) + remaining / 2 <= best_size) return best_size;

  free[v] = 0;
  for (Vertex w : g.neighbors(v)) {
    if (w < v || !free[w]) continue;
    free[w] = 0;
    current.emplace_back(v, w);
    match_rec(g, free, v + 1, best, current, best_size);
    current.pop_back();
    free[w] = 1;
  }
  match_rec(g, free, v + 1, best, current, best_size);
  free[v] = 1;
  return best_size;
}

}  // namespace

int max_matching_size(const Graph& g) {
  std::vector<char> free(static_cast<std::size_t>(g.num_vertices()), 1);
  std::vector<Edge> current;
  int best = 0;
  match_rec(g, free, 0, nullptr, current, best);
  return best;
}

std::vector<Edge> max_matching(const Graph& g) {
  std::vector<char> free(static_cast<std::size_t>(g.num_vertices()), 1);
  std::vector<Edge> current, best;
  int best_size = -1;
  match_rec(g, free, 0, &best, current, best_size);
  return best;
}

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw DomainError("empty graph6 string");
  for (char c : text)
    if (c < 63 || c > 126) throw DomainError("invalid graph6 character");
  int n = text[0] - 63;
  if (n > 62) throw DomainError("graph6 strings are limited to 62 vertices");
  std::size_t bits_needed = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (text.size() - 1 != (bits_needed + 5) / 6) throw DomainError("graph6 length mismatch");
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++bit) {
      int chunk = text[1 + bit / 6] - 63;
      if (chunk & (1 << (5 - bit % 6))) edges.emplace_back(i, j);
    }
  return Graph(n, edges);
}

bool has_induced_subgraph(const Graph& host, const Graph& pattern) {
  const int p = pattern.num_vertices();
  const int n = host.num_vertices();
  if (p > n) return false;
  if (p == 0) return true;
  std::vector<Vertex> image(static_cast<std::size_t>(p), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto extend = [&](auto&& self, int i) -> bool {
    if (i == p) return true;
    for (Vertex h = 0; h < n; ++h) {
      if (used[h]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        ok = pattern.has_edge(i, j) == host.has_edge(h, image[j]);
      if (!ok) continue;
      used[h] = 1;
      image[i] = h;
      if (self(self, i + 1)) return true;
      used[h] = 0;
    }
    return false;
  };
  return extend(extend, 0);
}

namespace classes {

HereditaryClass any_graph() {
  return {"any", [](const Graph&) { return true; }};
}

HereditaryClass edgeless() {
  return {"edgeless", [](const Graph& g) { return g.num_edges() == 0; }};
}

HereditaryClass match_deficiency(int k) {
  if (k < 0) throw DomainError("matching deficiency bound must be non-negative");
  return {"matchdef:" + std::to_string(k),
          [k](const Graph& g) { return g.num_vertices() - max_matching_size(g) <= k; }};
}

HereditaryClass forest() {
  return {"forest", [](const Graph& g) {
            return g.num_edges() + static_cast<int>(components(g).size()) == g.num_vertices();
          }};
}

HereditaryClass bipartite() {
  return {"bipartite", [](const Graph& g) { return is_bipartite(g); }};
}

HereditaryClass max_degree(int d) {
  if (d < 0) throw DomainError("degree bound must be non-negative");
  return {"maxdeg:" + std::to_string(d), [d](const Graph& g) {
            for (Vertex v = 0; v < g.num_vertices(); ++v)
              if (g.degree(v) > d) return false;
            return true;
          }};
}

HereditaryClass forbidden_induced(std::vector<Graph> forbidden) {
  std::string name = "forbid:" + std::to_string(forbidden.size());
  return {std::move(name), [forbidden = std::move(forbidden)](const Graph& g) {
            for (const auto& f : forbidden)
              if (has_induced_subgraph(g, f)) return false;
            return true;
          }};
}

}  // namespace classes

HereditaryClass parse_class_selector(std::string_view selector) {
  auto colon = selector.find(':');
  std::string_view head = selector.substr(0, colon);
  std::string_view arg = colon == std::string_view::npos ? "" : selector.substr(colon + 1);
  auto number = [&]() {
    int value = 0;
    auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), value);
    if (arg.empty() || ec != std::errc() || ptr != arg.data() + arg.size() || value < 0)
      throw DomainError("class selector '" + std::string(selector) + "' needs a non-negative integer");
    return value;
  };
  auto no_arg = [&](HereditaryClass cls) {
    if (colon != std::string_view::npos)
      throw DomainError("class '" + std::string(head) + "' takes no argument");
    return cls;
  };
  if (head == "any") return no_arg(classes::any_graph());
  if (head == "edgeless") return no_arg(classes::edgeless());
  if (head == "forest") return no_arg(classes::forest());
  if (head == "bipartite") return no_arg(classes::bipartite());
  if (head == "matchdef") return classes::match_deficiency(number());
  if (head == "maxdeg") return classes::max_degree(number());
  if (head == "forbid") {
    std::vector<Graph> graphs;
    std::size_t pos = 0;
    while (pos <= arg.size()) {
      std::size_t end = arg.find(',', pos);
      if (end == std::string_view::npos) end = arg.size();
      graphs.push_back(parse_graph6(arg.substr(pos, end - pos)));
      pos = end + 1;
    }
    HereditaryClass cls = classes::forbidden_induced(std::move(graphs));
    cls.name = "forbid:" + std::string(arg);
    return cls;
  }
  throw DomainError("unknown class selector '" + std::string(selector) + "'");
}

bool check_hereditary(const HereditaryClass& cls, int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    std::vector<Edge> slots;
    for (Vertex j = 1; j < n; ++j)
      for (Vertex i = 0; i < j; ++i) slots.emplace_back(i, j);
    const unsigned long long graphs = 1ULL << slots.size();
    for (unsigned long long mask = 0; mask < graphs; ++mask) {
      std::vector<Edge> edges;
      for (std::size_t b = 0; b < slots.size(); ++b)
        if (mask >> b & 1ULL) edges.push_back(slots[b]);
      Graph g(n, edges);
      if (!cls.contains(g)) continue;
      for (Vertex v = 0; v < n; ++v)
        if (!cls.contains(delete_vertices(g, {v}).graph)) return false;
    }
  }
  return true;
}

}  // namespace twr
