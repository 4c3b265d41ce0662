#include "twr/separation.hpp"

#include <queue>

namespace twr {
namespace {

// Residual network on the vertex-split graph. Vertex v becomes in = 2v and
// out = 2v + 1; the super source and sink take the last two ids.
class SplitFlow {
 public:
  SplitFlow(const Graph& g, const VertexSet& a, const VertexSet& b, const VertexSet& removed)
      : n_(g.num_vertices()), arcs_(static_cast<std::size_t>(2 * n_ + 2)) {
    std::vector<char> gone(static_cast<std::size_t>(n_), 0);
    for (Vertex v : removed) gone[v] = 1;
    const int big = n_ + 1;
    for (Vertex v = 0; v < n_; ++v) {
      if (gone[v]) continue;
      bool terminal = a.contains(v) || b.contains(v);
      add_arc(in(v), out(v), terminal ? big : 1);
      for (Vertex w : g.neighbors(v))
        if (!gone[w]) add_arc(out(v), in(w), big);
    }
    for (Vertex v : a)
      if (!gone[v]) add_arc(source(), in(v), big);
    for (Vertex v : b)
      if (!gone[v]) add_arc(out(v), sink(), big);
  }

  int in(Vertex v) const { return 2 * v; }
  int out(Vertex v) const { return 2 * v + 1; }
  int source() const { return 2 * n_; }
  int sink() const { return 2 * n_ + 1; }

  // One BFS augmentation; returns false when the sink is unreachable.
  bool augment() {
    std::vector<int> via(arcs_.size(), -1);
    std::vector<char> seen(arcs_.size(), 0);
    std::queue<int> queue;
    queue.push(source());
    seen[source()] = 1;
    while (!queue.empty() && !seen[sink()]) {
      int u = queue.front();
      queue.pop();
      for (int e : arcs_[u]) {
        int w = to_[e];
        if (cap_[e] > 0 && !seen[w]) {
          seen[w] = 1;
          via[w] = e;
          queue.push(w);
        }
      }
    }
    if (!seen[sink()]) return false;
    for (int w = sink(); w != source(); w = to_[via[w] ^ 1]) {
      cap_[via[w]] -= 1;
      cap_[via[w] ^ 1] += 1;
    }
    return true;
  }

  std::vector<char> residual_reachable() const {
    std::vector<char> seen(arcs_.size(), 0);
    std::vector<int> stack{source()};
    seen[source()] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int e : arcs_[u])
        if (cap_[e] > 0 && !seen[to_[e]]) {
          seen[to_[e]] = 1;
          stack.push_back(to_[e]);
        }
    }
    return seen;
  }

 private:
  void add_arc(int u, int w, int c) {
    arcs_[u].push_back(static_cast<int>(to_.size()));
    to_.push_back(w);
    cap_.push_back(c);
    arcs_[w].push_back(static_cast<int>(to_.size()));
    to_.push_back(u);
    cap_.push_back(0);
  }

  int n_;
  std::vector<std::vector<int>> arcs_;
  std::vector<int> to_;
  std::vector<int> cap_;
};

}  // namespace

SeparatorResult min_vertex_separator(const Graph& g, const VertexSet& a, const VertexSet& b,
                                     std::optional<int> cap, const VertexSet& removed) {
  if (a.empty() || b.empty()) throw DomainError("terminal sets must be non-empty");
  require_subset(g, a, "A");
  require_subset(g, b, "B");
  require_subset(g, removed, "removed set");

  SeparatorResult result;
  VertexSet live_a = set_difference(a, removed);
  VertexSet live_b = set_difference(b, removed);
  if (live_a.intersects(live_b)) return result;
  for (Vertex u : live_a)
    for (Vertex w : g.neighbors(u))
      if (live_b.contains(w)) return result;

  SplitFlow flow(g, live_a, live_b, removed);
  int value = 0;
  while (flow.augment()) {
    ++value;
    if (cap && value > *cap) {
      result.status = SeparatorStatus::kExceedsCap;
      result.size = value;  // a lower bound only
      return result;
    }
  }
  auto seen = flow.residual_reachable();
  std::vector<Vertex> witness;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (seen[flow.in(v)] && !seen[flow.out(v)]) witness.push_back(v);
  result.status = SeparatorStatus::kFinite;
  result.witness = VertexSet(std::move(witness));
  result.size = static_cast<int>(result.witness.size());
  result.source_side = reachable(g, live_a, set_union(removed, result.witness));
  return result;
}

bool is_separator(const Graph& g, const VertexSet& s, const VertexSet& a, const VertexSet& b) {
  VertexSet live_a = set_difference(a, s);
  VertexSet live_b = set_difference(b, s);
  if (live_a.intersects(live_b)) return false;
  if (live_a.empty() || live_b.empty()) return true;
  VertexSet from_a = reachable(g, live_a, s);
  return !from_a.intersects(live_b);
}

VertexSet minimalize_separator(const Graph& g, const VertexSet& s, const VertexSet& a,
                               const VertexSet& b) {
  if (!is_separator(g, s, a, b)) throw DomainError("set does not separate the terminal sets");
  VertexSet current = s;
  for (Vertex v : s) {
    VertexSet trial = current;
    trial.erase(v);
    if (is_separator(g, trial, a, b)) current = std::move(trial);
  }
  return current;
}

std::optional<SeparatorResult> min_separator_containing(const Graph& g, Vertex s, Vertex t,
                                                        Vertex v) {
  if (!g.has_vertex(s) || !g.has_vertex(t) || !g.has_vertex(v))
    throw DomainError("vertex out of range");
  if (v == s || v == t) throw DomainError("v must differ from the terminals");
  if (s == t || g.has_edge(s, t)) throw DomainError("terminals must be distinct and non-adjacent");
  SeparatorResult full = min_vertex_separator(g, {s}, {t});
  if (full.size == 0) return std::nullopt;
  SeparatorResult without = min_vertex_separator(g, {s}, {t}, full.size - 1, {v});
  if (!without.finite() || without.size != full.size - 1) return std::nullopt;
  without.witness.insert(v);
  without.size = full.size;
  without.source_side = reachable(g, {s}, without.witness);
  return without;
}

}  // namespace twr
