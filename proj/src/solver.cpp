#include "twr/solver.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <unordered_map>

#include "twr/check.hpp"
#include "twr/reduction.hpp"
#include "twr/separation.hpp"

namespace twr {

VertexSet CutConstraints::terminals() const {
  std::vector<Vertex> out;
  for (auto [u, v] : cut_pairs) out.insert(out.end(), {u, v});
  for (auto [u, v] : uncut_pairs) out.insert(out.end(), {u, v});
  return VertexSet(std::move(out));
}

namespace {

using Mask = std::uint32_t;
constexpr int kMaxTerminals = 32;
constexpr int kMaxBag = 120;
constexpr int kMaxTrackedDeletions = 31;

// Bag position -> -1 when deleted, otherwise the id of its connectivity block.
// The deleted graph lists bag-deleted vertices in bag order, then the
// forgotten ones in canonical order.
struct State {
  std::vector<std::int8_t> slot;
  std::vector<Mask> blocks;  // terminals in each block
  int forgotten = 0;
  std::vector<Mask> adj;  // empty unless the class needs the deleted graph

  int labeled() const {
    return static_cast<int>(std::count(slot.begin(), slot.end(), std::int8_t{-1}));
  }
  int deleted() const { return labeled() + forgotten; }

  std::string key() const {
    std::string out;
    out.reserve(slot.size() + 4 * (blocks.size() + adj.size()) + 8);
    for (auto x : slot) out.push_back(static_cast<char>(x));
    out.push_back('|');
    auto put = [&](Mask m) { out.append(reinterpret_cast<const char*>(&m), sizeof m); };
    for (Mask m : blocks) put(m);
    out.push_back('|');
    put(static_cast<Mask>(forgotten));
    for (Mask m : adj) put(m);
    return out;
  }
};

struct Table {
  std::vector<State> states;
  std::vector<std::pair<int, int>> back;  // child state indices (-1 when absent)
  std::unordered_map<std::string, int> index;

  void add(State&& s, int left, int right) {
    auto [it, fresh] = index.try_emplace(s.key(), static_cast<int>(states.size()));
    if (!fresh) return;
    states.push_back(std::move(s));
    back.emplace_back(left, right);
  }
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Relabels `adj` so that old vertex i becomes perm[i].
// `size` may exceed adj.size() to leave room for vertices not in `adj`.
std::vector<Mask> permute(const std::vector<Mask>& adj, const std::vector<int>& perm,
                          std::size_t size) {
  std::vector<Mask> out(size, 0);
  for (std::size_t i = 0; i < adj.size(); ++i) {
    Mask m = 0;
    for (Mask rest = adj[i]; rest; rest &= rest - 1) m |= Mask{1} << perm[std::countr_zero(rest)];
    out[perm[i]] = m;
  }
  return out;
}

void check_nice(const Graph& g, const NiceDecomposition& nice) {
  const int count = static_cast<int>(nice.nodes.size());
  if (count == 0 || nice.root != count - 1) throw DomainError("nice decomposition needs a final root");
  if (!nice.nodes.back().bag.empty()) throw DomainError("root bag must be empty");
  std::vector<int> parents(static_cast<std::size_t>(count), 0);
  std::vector<int> forgets(static_cast<std::size_t>(g.num_vertices()), 0);
  for (int i = 0; i < count; ++i) {
    const NiceNode& node = nice.nodes[i];
    if (static_cast<int>(node.bag.size()) > kMaxBag) throw DomainError("bag too large for the solver");
    require_subset(g, node.bag, "bag");
    for (int c : node.children) {
      if (c < 0 || c >= i) throw DomainError("children must precede their parent");
      ++parents[c];
    }
    auto child_bag = [&](int j) -> const VertexSet& { return nice.nodes[node.children[j]].bag; };
    bool ok = false;
    switch (node.kind) {
      case NiceKind::kLeaf:
        ok = node.children.empty() && node.bag.empty();
        break;
      case NiceKind::kIntroduce:
        ok = node.children.size() == 1 && node.bag.contains(node.vertex) &&
             !child_bag(0).contains(node.vertex) &&
             set_difference(node.bag, {node.vertex}) == child_bag(0);
        break;
      case NiceKind::kForget:
        ok = node.children.size() == 1 && child_bag(0).contains(node.vertex) &&
             set_difference(child_bag(0), {node.vertex}) == node.bag;
        if (ok) ++forgets[node.vertex];
        break;
      case NiceKind::kJoin:
        ok = node.children.size() == 2 && child_bag(0) == node.bag && child_bag(1) == node.bag;
        break;
    }
    if (!ok) throw DomainError("malformed nice decomposition node " + std::to_string(i));
  }
  for (int i = 0; i + 1 < count; ++i)
    if (parents[i] != 1) throw DomainError("nice decomposition is not a tree");
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (forgets[v] != 1) throw DomainError("every vertex must be forgotten exactly once");
  std::vector<char> covered(static_cast<std::size_t>(g.num_edges()), 0);
  std::vector<Edge> edges = g.edges();
  for (const NiceNode& node : nice.nodes) {
    if (node.kind != NiceKind::kIntroduce) continue;
    for (Vertex w : g.neighbors(node.vertex))
      if (node.bag.contains(w)) {
        auto it = std::lower_bound(edges.begin(), edges.end(), make_edge(node.vertex, w));
        covered[it - edges.begin()] = 1;
      }
  }
  if (std::find(covered.begin(), covered.end(), 0) != covered.end())
    throw DomainError("nice decomposition misses an edge");
}

class ConstrainedCutDp {
 public:
  ConstrainedCutDp(const Graph& g, const NiceDecomposition& nice, const CutConstraints& cons, int k,
                   const HereditaryClass& cls, const VertexSet& undeletable,
                   const DpOptions& options)
      : g_(g),
        nice_(nice),
        k_(k),
        cls_(cls),
        options_(options),
        track_graph_(cls.name != "any"),
        term_bit_(static_cast<std::size_t>(g.num_vertices()), 0),
        forbidden_(static_cast<std::size_t>(g.num_vertices()), 0) {
    VertexSet terminals = cons.terminals();
    if (static_cast<int>(terminals.size()) > kMaxTerminals)
      throw DomainError("too many terminals for the solver");
    for (std::size_t i = 0; i < terminals.size(); ++i) {
      term_bit_[terminals[i]] = Mask{1} << i;
      forbidden_[terminals[i]] = 1;
    }
    for (Vertex v : undeletable) forbidden_[v] = 1;
    for (auto [u, v] : cons.cut_pairs) cut_.push_back(term_bit_[u] | term_bit_[v]);
    for (auto [u, v] : cons.uncut_pairs) uncut_.push_back(term_bit_[u] | term_bit_[v]);
  }

  std::optional<DPWitness> run() {
    tables_.resize(nice_.nodes.size());
    DpStats stats;
    for (std::size_t i = 0; i < nice_.nodes.size(); ++i) {
      const NiceNode& node = nice_.nodes[i];
      Table& out = tables_[i];
      switch (node.kind) {
        case NiceKind::kLeaf:
          out.add(State{}, -1, -1);
          break;
        case NiceKind::kIntroduce:
          introduce(node, tables_[node.children[0]], out);
          break;
        case NiceKind::kForget:
          forget(node, tables_[node.children[0]], out);
          break;
        case NiceKind::kJoin:
          join(node, tables_[node.children[0]], tables_[node.children[1]], out);
          break;
      }
      out.index.clear();
      stats.total_states += static_cast<std::int64_t>(out.states.size());
      stats.peak_table = std::max<std::int64_t>(stats.peak_table, out.states.size());
    }

    const Table& root = tables_[nice_.root];
    for (std::size_t i = 0; i < root.states.size(); ++i) {
      const State& s = root.states[i];
      if (track_graph_ && !in_class(s.adj)) continue;
      if (!track_graph_ && !cls_.contains(Graph(s.forgotten))) continue;
      DPWitness w;
      w.deletion_set = reconstruct(static_cast<int>(i));
      w.induced_graph = induced_subgraph(g_, w.deletion_set).graph;
      // The tracked graph must be the real induced subgraph.
      TWR_ASSERT(static_cast<int>(w.deletion_set.size()) == s.forgotten);
      if (track_graph_) {
        int edges = 0;
        for (Mask m : s.adj) edges += std::popcount(m);
        TWR_ASSERT(edges == 2 * w.induced_graph.num_edges());
      }
      w.stats = stats;
      return w;
    }
    return std::nullopt;
  }

 private:
  bool cut_violated(Mask block) const {
    for (Mask pair : cut_)
      if ((block & pair) == pair) return true;
    return false;
  }

  bool uncut_violated(Mask closed_block) const {
    for (Mask pair : uncut_)
      if (std::popcount(closed_block & pair) == 1) return true;
    return false;
  }

  bool in_class(const std::vector<Mask>& adj) {
    std::string key(reinterpret_cast<const char*>(adj.data()), adj.size() * sizeof(Mask));
    auto it = class_cache_.find(key);
    if (it != class_cache_.end()) return it->second;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < adj.size(); ++i)
      for (Mask rest = adj[i]; rest; rest &= rest - 1) {
        int j = std::countr_zero(rest);
        if (static_cast<int>(i) < j) edges.emplace_back(static_cast<Vertex>(i), j);
      }
    bool member = cls_.contains(Graph(static_cast<int>(adj.size()), edges));
    class_cache_.emplace(std::move(key), member);
    return member;
  }

  // Puts the forgotten part of the deleted graph into a canonical order:
  // sort by (neighbors among labeled vertices, degree among forgotten), then
  // take the lexicographically least encoding over orders within ties.
  std::vector<Mask> canonical(const std::vector<Mask>& adj, int labeled) {
    const int m = static_cast<int>(adj.size());
    const int f = m - labeled;
    if (f <= 1) return adj;
    std::string key(reinterpret_cast<const char*>(adj.data()), adj.size() * sizeof(Mask));
    key.push_back(static_cast<char>(labeled));
    auto it = canon_cache_.find(key);
    if (it != canon_cache_.end()) return it->second;

    const Mask lab = (Mask{1} << labeled) - 1;
    auto signature = [&](int v) {
      return std::pair<Mask, int>(adj[v] & lab, std::popcount(adj[v] & ~lab));
    };
    std::vector<int> order(static_cast<std::size_t>(f));
    std::iota(order.begin(), order.end(), labeled);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return signature(a) < signature(b); });
    std::vector<std::pair<int, int>> groups;  // [begin, end) ranges of ties
    for (int i = 0; i < f;) {
      int j = i + 1;
      while (j < f && signature(order[j]) == signature(order[i])) ++j;
      if (j - i > 1) groups.emplace_back(i, j);
      i = j;
    }

    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.begin() + labeled, 0);
    std::vector<Mask> best;
    while (true) {
      for (int j = 0; j < f; ++j) perm[order[j]] = labeled + j;
      std::vector<Mask> candidate = permute(adj, perm, adj.size());
      if (best.empty() || candidate < best) best = std::move(candidate);
      std::size_t gi = 0;
      for (; gi < groups.size(); ++gi) {
        auto [b, e] = groups[gi];
        if (std::next_permutation(order.begin() + b, order.begin() + e)) break;
      }
      if (gi == groups.size()) break;
    }
    canon_cache_.emplace(std::move(key), best);
    return best;
  }

  // Relabels blocks by first occurrence over the bag and drops unused ones.
  static void normalize_blocks(State& s) {
    std::vector<int> relabel(s.blocks.size(), -1);
    std::vector<Mask> blocks;
    for (auto& x : s.slot) {
      if (x < 0) continue;
      if (relabel[x] < 0) {
        relabel[x] = static_cast<int>(blocks.size());
        blocks.push_back(s.blocks[x]);
      }
      x = static_cast<std::int8_t>(relabel[x]);
    }
    s.blocks = std::move(blocks);
  }

  // Labeled index of bag position p: deleted positions before it.
  static int labeled_index(const std::vector<std::int8_t>& slot, int p) {
    return static_cast<int>(std::count(slot.begin(), slot.begin() + p, std::int8_t{-1}));
  }

  static int position(const VertexSet& bag, Vertex v) {
    return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
  }

  void introduce(const NiceNode& node, const Table& child, Table& out) {
    const Vertex v = node.vertex;
    const int p = position(node.bag, v);
    std::vector<int> nbr_pos;
    for (Vertex w : g_.neighbors(v))
      if (w != v && node.bag.contains(w)) nbr_pos.push_back(position(node.bag, w));

    for (std::size_t ci = 0; ci < child.states.size(); ++ci) {
      const State& cs = child.states[ci];
      // Keep v: it opens a block merged with every kept neighbor.
      {
        State s;
        s.slot = cs.slot;
        s.slot.insert(s.slot.begin() + p, static_cast<std::int8_t>(cs.blocks.size()));
        UnionFind uf(static_cast<int>(cs.blocks.size()) + 1);
        for (int q : nbr_pos)
          if (s.slot[q] >= 0) uf.unite(s.slot[q], s.slot[p]);
        std::vector<Mask> merged(cs.blocks.size() + 1, 0);
        for (std::size_t b = 0; b < cs.blocks.size(); ++b) merged[uf.find(static_cast<int>(b))] |= cs.blocks[b];
        merged[uf.find(s.slot[p])] |= term_bit_[v];
        if (!cut_violated(merged[uf.find(s.slot[p])])) {
          for (auto& x : s.slot)
            if (x >= 0) x = static_cast<std::int8_t>(uf.find(x));
          s.blocks = std::move(merged);
          s.forgotten = cs.forgotten;
          s.adj = cs.adj;
          normalize_blocks(s);
          out.add(std::move(s), static_cast<int>(ci), -1);
        }
      }
      // Delete v.
      if (forbidden_[v] || cs.deleted() + 1 > k_) continue;
      State s;
      s.slot = cs.slot;
      s.slot.insert(s.slot.begin() + p, std::int8_t{-1});
      s.blocks = cs.blocks;
      s.forgotten = cs.forgotten;
      if (track_graph_) {
        const int r = labeled_index(s.slot, p);
        std::vector<int> perm(cs.adj.size());
        for (std::size_t i = 0; i < perm.size(); ++i)
          perm[i] = static_cast<int>(i) < r ? static_cast<int>(i) : static_cast<int>(i) + 1;
        std::vector<Mask> adj = permute(cs.adj, perm, cs.adj.size() + 1);
        for (int q : nbr_pos)
          if (s.slot[q] < 0) {
            int j = labeled_index(s.slot, q);
            adj[r] |= Mask{1} << j;
            adj[j] |= Mask{1} << r;
          }
        if (options_.prune_heredity && !in_class(adj)) continue;
        s.adj = std::move(adj);
      }
      out.add(std::move(s), static_cast<int>(ci), -1);
    }
  }

  void forget(const NiceNode& node, const Table& child, Table& out) {
    const VertexSet& child_bag = nice_.nodes[node.children[0]].bag;
    const int p = position(child_bag, node.vertex);
    for (std::size_t ci = 0; ci < child.states.size(); ++ci) {
      const State& cs = child.states[ci];
      State s;
      s.slot = cs.slot;
      s.blocks = cs.blocks;
      s.forgotten = cs.forgotten;
      const int x = cs.slot[p];
      s.slot.erase(s.slot.begin() + p);
      if (x < 0) {
        ++s.forgotten;
        if (track_graph_) {
          const int labeled = cs.labeled();
          const int r = labeled_index(cs.slot, p);
          std::vector<int> perm(cs.adj.size());
          for (int i = 0; i < static_cast<int>(perm.size()); ++i)
            perm[i] = i < r ? i : i == r ? labeled - 1 : i < labeled ? i - 1 : i;
          s.adj = canonical(permute(cs.adj, perm, cs.adj.size()), labeled - 1);
        }
      } else {
        bool open = std::find(s.slot.begin(), s.slot.end(), static_cast<std::int8_t>(x)) != s.slot.end();
        if (!open && uncut_violated(cs.blocks[x])) continue;
        s.adj = cs.adj;
        normalize_blocks(s);
      }
      out.add(std::move(s), static_cast<int>(ci), -1);
    }
  }

  void join(const NiceNode& node, const Table& left, const Table& right, Table& out) {
    (void)node;
    std::unordered_map<std::string, std::vector<int>> by_pattern;
    auto pattern = [](const State& s) {
      std::string key;
      for (auto x : s.slot) key.push_back(x < 0 ? 'd' : 'k');
      return key;
    };
    for (std::size_t ri = 0; ri < right.states.size(); ++ri)
      by_pattern[pattern(right.states[ri])].push_back(static_cast<int>(ri));

    for (std::size_t li = 0; li < left.states.size(); ++li) {
      const State& ls = left.states[li];
      auto it = by_pattern.find(pattern(ls));
      if (it == by_pattern.end()) continue;
      const int labeled = ls.labeled();
      for (int ri : it->second) {
        const State& rs = right.states[ri];
        if (labeled + ls.forgotten + rs.forgotten > k_) continue;
        const int offset = static_cast<int>(ls.blocks.size());
        UnionFind uf(offset + static_cast<int>(rs.blocks.size()));
        for (std::size_t q = 0; q < ls.slot.size(); ++q)
          if (ls.slot[q] >= 0) uf.unite(ls.slot[q], offset + rs.slot[q]);
        std::vector<Mask> merged(uf.parent.size(), 0);
        for (int b = 0; b < offset; ++b) merged[uf.find(b)] |= ls.blocks[b];
        for (std::size_t b = 0; b < rs.blocks.size(); ++b)
          merged[uf.find(offset + static_cast<int>(b))] |= rs.blocks[b];
        bool violated = false;
        for (std::size_t b = 0; b < merged.size() && !violated; ++b)
          violated = cut_violated(merged[b]);
        if (violated) continue;

        State s;
        s.slot = ls.slot;
        for (auto& x : s.slot)
          if (x >= 0) x = static_cast<std::int8_t>(uf.find(x));
        s.blocks = std::move(merged);
        s.forgotten = ls.forgotten + rs.forgotten;
        if (track_graph_) {
          const int total = labeled + s.forgotten;
          std::vector<Mask> adj(static_cast<std::size_t>(total), 0);
          for (std::size_t i = 0; i < ls.adj.size(); ++i) adj[i] = ls.adj[i];
          std::vector<int> perm(rs.adj.size());
          for (int i = 0; i < static_cast<int>(perm.size()); ++i)
            perm[i] = i < labeled ? i : i + ls.forgotten;
          std::vector<Mask> shifted = permute(rs.adj, perm, adj.size());
          for (int i = 0; i < total; ++i) adj[i] |= shifted[i];
          if (options_.prune_heredity && !in_class(adj)) continue;
          s.adj = canonical(adj, labeled);
        }
        normalize_blocks(s);
        out.add(std::move(s), static_cast<int>(li), ri);
      }
    }
  }

  VertexSet reconstruct(int root_state) const {
    std::vector<Vertex> deleted;
    std::vector<std::pair<int, int>> stack{{nice_.root, root_state}};
    while (!stack.empty()) {
      auto [node_id, state_id] = stack.back();
      stack.pop_back();
      const NiceNode& node = nice_.nodes[node_id];
      const Table& table = tables_[node_id];
      if (node.kind == NiceKind::kIntroduce &&
          table.states[state_id].slot[position(node.bag, node.vertex)] < 0)
        deleted.push_back(node.vertex);
      auto [left, right] = table.back[state_id];
      if (left >= 0) stack.emplace_back(node.children[0], left);
      if (right >= 0) stack.emplace_back(node.children[1], right);
    }
    return VertexSet(std::move(deleted));
  }

  const Graph& g_;
  const NiceDecomposition& nice_;
  const int k_;
  const HereditaryClass& cls_;
  const DpOptions options_;
  const bool track_graph_;
  std::vector<Mask> term_bit_;
  std::vector<char> forbidden_;
  std::vector<Mask> cut_;
  std::vector<Mask> uncut_;
  std::vector<Table> tables_;
  std::unordered_map<std::string, bool> class_cache_;
  std::unordered_map<std::string, std::vector<Mask>> canon_cache_;
};

void check_pairs(const Graph& g, const CutConstraints& cons) {
  for (const auto& list : {cons.cut_pairs, cons.uncut_pairs})
    for (auto [u, v] : list)
      if (!g.has_vertex(u) || !g.has_vertex(v)) throw DomainError("terminal out of range");
}

}  // namespace

std::optional<DPWitness> dp_constrained_cut(const Graph& g, const NiceDecomposition& nice,
                                            const CutConstraints& cons, int k,
                                            const HereditaryClass& cls,
                                            const VertexSet& undeletable,
                                            const DpOptions& options) {
  if (k < 0) throw DomainError("budget must be non-negative");
  check_pairs(g, cons);
  require_subset(g, undeletable, "undeletable set");
  check_nice(g, nice);
  if (cls.name != "any" && k > kMaxTrackedDeletions)
    throw DomainError("budget too large to track the deleted graph");
  for (auto [u, v] : cons.cut_pairs)
    if (u == v) return std::nullopt;
  return ConstrainedCutDp(g, nice, cons, k, cls, undeletable, options).run();
}

bool verify_constrained_cut(const Graph& g, const CutConstraints& cons, int k,
                            const HereditaryClass& cls, const VertexSet& s) {
  if (static_cast<int>(s.size()) > k) return false;
  if (!s.is_subset_of(VertexSet::range(g.num_vertices()))) return false;
  if (s.intersects(cons.terminals())) return false;
  if (!cls.contains(induced_subgraph(g, s).graph)) return false;
  std::vector<int> comp(static_cast<std::size_t>(g.num_vertices()), -1);
  auto comps = components(g, s);
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (Vertex v : comps[i]) comp[v] = static_cast<int>(i);
  for (auto [u, v] : cons.cut_pairs)
    if (comp[u] == comp[v]) return false;
  for (auto [u, v] : cons.uncut_pairs)
    if (comp[u] != comp[v]) return false;
  return true;
}

namespace {

DPWitness make_witness(const Graph& g, VertexSet s, DpStats stats = {}) {
  DPWitness w;
  w.induced_graph = induced_subgraph(g, s).graph;
  w.deletion_set = std::move(s);
  w.stats = stats;
  return w;
}

// Reduction, decomposition and DP for constraints whose cut pairs all have a
// finite separator of size at most k.
std::optional<DPWitness> solve_reduced(const Graph& g, const CutConstraints& cons, int k,
                                       const HereditaryClass& cls, PipelineReport* report,
                                       const DpOptions& options) {
  ReducedInstance red = reduce_instance(g, cons.terminals(), k);
  CutConstraints star;
  for (auto [u, v] : cons.cut_pairs) star.cut_pairs.emplace_back(red.to_star(u), red.to_star(v));
  for (auto [u, v] : cons.uncut_pairs)
    star.uncut_pairs.emplace_back(red.to_star(u), red.to_star(v));

  TreeDecomposition td = decompose(red.gstar);
  // Rooted at a bag holding the lowest-id terminal.
  NiceDecomposition nice = make_nice(td, bag_containing(td, star.terminals().front()));
  auto found = dp_constrained_cut(red.gstar, nice, star, k, cls, red.undeletable, options);
  if (report) {
    report->cover_size = static_cast<int>(red.cover.size());
    report->reduced_vertices = red.gstar.num_vertices();
    report->width = td.width();
    report->width_bound = red.width_bound;
  }
  if (!found) return std::nullopt;
  if (report) report->dp = found->stats;
  return make_witness(g, red.to_original(found->deletion_set), found->stats);
}

}  // namespace

std::optional<DPWitness> g_mincut(const Graph& g, Vertex s, Vertex t, int k,
                                  const HereditaryClass& cls, PipelineReport* report,
                                  const DpOptions& options) {
  if (!g.has_vertex(s) || !g.has_vertex(t)) throw DomainError("terminal out of range");
  if (s == t) throw DomainError("terminals must be distinct");
  if (k < 0) throw DomainError("budget must be non-negative");
  if (g.has_edge(s, t)) return std::nullopt;

  SeparatorResult sep = min_vertex_separator(g, {s}, {t});
  if (report) {
    report->ell = sep.size;
    report->excess = k - sep.size;
  }
  if (sep.size > k) return std::nullopt;
  CutConstraints cons{{{s, t}}, {}};
  if (sep.size == 0) {
    if (!cls.contains(Graph(0))) return std::nullopt;
    return make_witness(g, {});
  }
  if (k == 0) return std::nullopt;

  auto found = solve_reduced(g, cons, k, cls, report, options);
  if (!found) return std::nullopt;
  VertexSet minimal = minimalize_separator(g, found->deletion_set, {s}, {t});
  TWR_ASSERT(verify_constrained_cut(g, cons, k, cls, minimal));
  return make_witness(g, std::move(minimal), found->stats);
}

std::optional<DPWitness> g_multicut_uncut(const Graph& g, const CutConstraints& cons_in, int k,
                                          const HereditaryClass& cls, PipelineReport* report,
                                          const DpOptions& options) {
  check_pairs(g, cons_in);
  if (k < 0) throw DomainError("budget must be non-negative");
  CutConstraints cons;
  for (auto [u, v] : cons_in.cut_pairs) {
    if (u == v || g.has_edge(u, v)) return std::nullopt;
    cons.cut_pairs.emplace_back(u, v);
  }
  for (auto [u, v] : cons_in.uncut_pairs)
    if (u != v) cons.uncut_pairs.emplace_back(u, v);

  if (verify_constrained_cut(g, cons, k, cls, {})) return make_witness(g, {});
  // Deleting vertices never reconnects anything.
  if (cons.cut_pairs.empty() || k == 0) return std::nullopt;

  int ell = 0;
  for (auto [u, v] : cons.cut_pairs) {
    SeparatorResult sep = min_vertex_separator(g, {u}, {v});
    ell = std::max(ell, sep.size);
  }
  if (report) {
    report->ell = ell;
    report->excess = k - ell;
  }
  if (ell > k) return std::nullopt;

  auto found = solve_reduced(g, cons, k, cls, report, options);
  if (!found) return std::nullopt;
  TWR_ASSERT(verify_constrained_cut(g, cons, k, cls, found->deletion_set));
  return found;
}

}  // namespace twr
