#include "twr/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <numeric>
#include <queue>
#include <sstream>

#include "twr/check.hpp"

namespace twr {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

// --- VertexSet ---------------------------------------------------------------

VertexSet::VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {}

VertexSet::VertexSet(std::vector<Vertex> vs) : members_(std::move(vs)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::range(Vertex n) {
  std::vector<Vertex> all(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(all.begin(), all.end(), 0);
  VertexSet out;
  out.members_ = std::move(all);
  return out;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::insert(Vertex v) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) members_.insert(it, v);
}

void VertexSet::erase(Vertex v) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it != members_.end() && *it == v) members_.erase(it);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.begin(), other.end(), begin(), end());
}

bool VertexSet::intersects(const VertexSet& other) const {
  auto i = begin();
  auto j = other.begin();
  while (i != end() && j != other.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

std::string to_string(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i] + 1);
  }
  return out + "}";
}

// --- Graph -------------------------------------------------------------------

Graph::Graph(int n) {
  if (n < 0) throw DomainError("negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (!has_vertex(u) || !has_vertex(v)) throw DomainError("edge endpoint out of range");
    if (u == v) throw DomainError("self-loop on vertex " + std::to_string(u + 1));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  num_edges_ = 0;
  for (auto& nb : adjacency_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    num_edges_ += static_cast<int>(nb.size());
  }
  num_edges_ /= 2;
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& nb = adjacency_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(num_edges_));
  for (Vertex u = 0; u < num_vertices(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != adjacency_.size())
    throw DomainError("label count does not match vertex count");
  Graph out = *this;
  out.labels_ = std::move(labels);
  return out;
}

void require_subset(const Graph& g, const VertexSet& set, std::string_view what) {
  if (!set.empty() && (set.front() < 0 || set.back() >= g.num_vertices()))
    throw DomainError(std::string(what) + " is not a subset of the vertex set");
}

// --- text format -------------------------------------------------------------

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long parse_int(std::string_view tok, std::size_t line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::optional<long long> n;
  long long declared_m = 0;
  std::size_t header_line = 0;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (n) throw ParseError(line_no, "duplicate 'p' header");
      // Accept both "p <n> <m>" and the DIMACS "p edge <n> <m>" spelling.
      std::size_t off = (tok.size() == 4) ? 2 : 1;
      if (tok.size() != off + 2) throw ParseError(line_no, "malformed 'p' header");
      n = parse_int(tok[off], line_no);
      declared_m = parse_int(tok[off + 1], line_no);
      if (*n < 0 || declared_m < 0) throw ParseError(line_no, "negative count in header");
      header_line = line_no;
    } else if (tok[0] == "e") {
      if (!n) throw ParseError(line_no, "edge before 'p' header");
      if (tok.size() != 3) throw ParseError(line_no, "malformed edge line");
      long long u = parse_int(tok[1], line_no);
      long long v = parse_int(tok[2], line_no);
      if (u < 1 || u > *n || v < 1 || v > *n) throw ParseError(line_no, "vertex id out of range");
      if (u == v) throw ParseError(line_no, "self-loop on vertex " + std::to_string(u));
      edges.push_back(make_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)));
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(tok[0]) + "'");
    }
  }
  if (!n) throw ParseError(line_no, "missing 'p' header");
  if (static_cast<long long>(edges.size()) != declared_m)
    throw ParseError(header_line, "header declares " + std::to_string(declared_m) +
                                      " edges, found " + std::to_string(edges.size()));
  return Graph(static_cast<int>(*n), edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

// --- elementary operations ---------------------------------------------------

VertexSet boundary(const Graph& g, const VertexSet& x) {
  require_subset(g, x, "X");
  std::vector<Vertex> out;
  for (Vertex v : x)
    for (Vertex w : g.neighbors(v))
      if (!x.contains(w)) out.push_back(w);
  return VertexSet(std::move(out));
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
  require_subset(g, removed, "removed set");
  const int n = g.num_vertices();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Vertex v : removed) seen[v] = 1;
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> comp;
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    out.emplace_back(std::move(comp));
  }
  return out;
}

VertexSet reachable(const Graph& g, const VertexSet& sources, const VertexSet& removed) {
  std::vector<char> seen(static_cast<std::size_t>(g.num_vertices()), 0);
  for (Vertex v : removed) seen[v] = 1;
  std::vector<Vertex> stack;
  std::vector<Vertex> out;
  for (Vertex s : sources)
    if (!seen[s]) {
      seen[s] = 1;
      stack.push_back(s);
    }
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    out.push_back(v);
    for (Vertex w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return VertexSet(std::move(out));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x) {
  require_subset(g, x, "X");
  std::vector<Vertex> index(static_cast<std::size_t>(g.num_vertices()), -1);
  for (std::size_t i = 0; i < x.size(); ++i) index[x[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (Vertex u : x)
    for (Vertex w : g.neighbors(u))
      if (u < w && index[w] >= 0) edges.emplace_back(index[u], index[w]);
  return {Graph(static_cast<int>(x.size()), edges), x.members()};
}

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& removed) {
  return induced_subgraph(g, set_difference(VertexSet::range(g.num_vertices()), removed));
}

ContractedGraph contract_terminal_sets(const Graph& g, const VertexSet& keep, const VertexSet& a,
                                       const VertexSet& b) {
  if (a.empty() || b.empty()) throw DomainError("contracted sets must be non-empty");
  if (a.intersects(b)) throw DomainError("contracted sets must be disjoint");
  if (keep.intersects(a) || keep.intersects(b))
    throw DomainError("kept vertices must be disjoint from the contracted sets");
  require_subset(g, keep, "keep");
  require_subset(g, a, "A");
  require_subset(g, b, "B");

  const int m = static_cast<int>(keep.size());
  std::vector<Vertex> index(static_cast<std::size_t>(g.num_vertices()), -1);
  for (int i = 0; i < m; ++i) index[keep[i]] = i;
  const Vertex va = m;
  const Vertex vb = m + 1;
  for (Vertex v : a) index[v] = va;
  for (Vertex v : b) index[v] = vb;

  std::vector<Edge> edges;
  auto add = [&](Vertex u, Vertex w) {
    Vertex iu = index[u], iw = index[w];
    if (iu < 0 || iw < 0 || iu == iw) return;
    edges.push_back(make_edge(iu, iw));
  };
  for (Vertex u : keep)
    for (Vertex w : g.neighbors(u)) add(u, w);
  for (Vertex u : a)
    for (Vertex w : g.neighbors(u)) add(u, w);
  return {Graph(m + 2, edges), va, vb, keep.members()};
}

std::optional<TwoColoring> two_coloring(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::queue<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    queue.push(root);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop();
      for (Vertex w : g.neighbors(v)) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          queue.push(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<Vertex> black, white;
  for (Vertex v = 0; v < n; ++v) (color[v] == 0 ? black : white).push_back(v);
  return TwoColoring{VertexSet(std::move(black)), VertexSet(std::move(white))};
}

bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

bool is_independent(const Graph& g, const VertexSet& s) {
  for (Vertex v : s)
    for (Vertex w : g.neighbors(v))
      if (w > v && s.contains(w)) return false;
  return true;
}

namespace {

[[maybe_unused]] bool odd_cycle_shape_holds(const Graph& g, const std::vector<Vertex>& cycle) {
  const std::size_t len = cycle.size();
  if (len == 3) return true;
  VertexSet on_cycle(cycle);
  for (std::size_t i = 0; i < len; ++i) {
    int cycle_neighbors = 0;
    for (Vertex w : g.neighbors(cycle[i])) cycle_neighbors += on_cycle.contains(w);
    if (cycle_neighbors != 2) return false;  // chord
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (on_cycle.contains(v)) continue;
    int hits = 0;
    for (Vertex w : g.neighbors(v)) hits += on_cycle.contains(w);
    if (hits > 2) return false;
  }
  return true;
}

}  // namespace

std::optional<std::vector<Vertex>> shortest_odd_cycle(const Graph& g) {
  const int n = g.num_vertices();
  // BFS in the bipartite double cover: state 2*v + parity.
  std::vector<int> dist(static_cast<std::size_t>(2 * n));
  std::vector<int> parent(static_cast<std::size_t>(2 * n));
  int best_len = -1;
  std::vector<Vertex> best;
  for (Vertex start = 0; start < n; ++start) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<int> queue;
    dist[2 * start] = 0;
    parent[2 * start] = -1;
    queue.push(2 * start);
    const int target = 2 * start + 1;
    while (!queue.empty() && dist[target] < 0) {
      int state = queue.front();
      queue.pop();
      if (best_len >= 0 && dist[state] + 1 >= best_len) break;
      Vertex v = state / 2;
      int parity = state % 2;
      for (Vertex w : g.neighbors(v)) {
        int next = 2 * w + (1 - parity);
        if (dist[next] >= 0) continue;
        dist[next] = dist[state] + 1;
        parent[next] = state;
        queue.push(next);
      }
    }
    if (dist[target] < 0) continue;
    if (best_len >= 0 && dist[target] >= best_len) continue;
    best_len = dist[target];
    best.clear();
    for (int state = parent[target]; state >= 0; state = parent[state]) best.push_back(state / 2);
    std::reverse(best.begin(), best.end());
  }
  if (best_len < 0) return std::nullopt;
  TWR_ASSERT(static_cast<int>(best.size()) == best_len);
  TWR_ASSERT(odd_cycle_shape_holds(g, best));
  return best;
}

}  // namespace twr
