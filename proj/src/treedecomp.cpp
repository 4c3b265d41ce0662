#include "twr/treedecomp.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <set>
#include <sstream>

namespace twr {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& bag : bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
  return w;
}

int NiceDecomposition::width() const {
  int w = -1;
  for (const auto& node : nodes) w = std::max(w, static_cast<int>(node.bag.size()) - 1);
  return w;
}

std::vector<Vertex> min_fill_order(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<std::set<Vertex>> adj(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) adj[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    long long best_fill = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (done[v]) continue;
      long long fill = 0;
      for (auto i = adj[v].begin(); i != adj[v].end(); ++i)
        for (auto j = std::next(i); j != adj[v].end(); ++j)
          if (!adj[*i].count(*j)) ++fill;
      if (best < 0 || fill < best_fill) {
        best = v;
        best_fill = fill;
        if (fill == 0) break;
      }
    }
    std::vector<Vertex> nb(adj[best].begin(), adj[best].end());
    for (std::size_t i = 0; i < nb.size(); ++i) {
      adj[nb[i]].erase(best);
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        adj[nb[i]].insert(nb[j]);
        adj[nb[j]].insert(nb[i]);
      }
    }
    adj[best].clear();
    done[best] = 1;
    order.push_back(best);
  }
  return order;
}

TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.num_vertices();
  if (static_cast<int>(order.size()) != n) throw DomainError("order must list every vertex once");
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    if (!g.has_vertex(order[i]) || pos[order[i]] >= 0)
      throw DomainError("order must list every vertex once");
    pos[order[i]] = i;
  }
  std::vector<std::set<Vertex>> adj(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) adj[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());

  // Bag i belongs to the i-th eliminated vertex.
  std::vector<VertexSet> bags(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    Vertex v = order[i];
    std::vector<Vertex> later;
    for (Vertex w : adj[v])
      if (pos[w] > i) later.push_back(w);
    for (std::size_t a = 0; a < later.size(); ++a)
      for (std::size_t b = a + 1; b < later.size(); ++b) {
        adj[later[a]].insert(later[b]);
        adj[later[b]].insert(later[a]);
      }
    int next = -1;
    for (Vertex w : later)
      if (next < 0 || pos[w] < next) next = pos[w];
    parent[i] = next;
    later.push_back(v);
    bags[i] = VertexSet(std::move(later));
  }
  // Join the component roots into a single tree.
  int prev_root = -1;
  for (int i = 0; i < n; ++i) {
    if (parent[i] >= 0) continue;
    if (prev_root >= 0) parent[prev_root] = i;
    prev_root = i;
  }

  // Absorb bags contained in their parent.
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  for (int i = 0; i < n; ++i) {
    int p = parent[i];
    if (p < 0 || !bags[i].is_subset_of(bags[p])) continue;
    alive[i] = 0;
    for (int j = 0; j < n; ++j)
      if (alive[j] && parent[j] == i) parent[j] = p;
  }
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  TreeDecomposition td;
  for (int i = 0; i < n; ++i)
    if (alive[i]) {
      index[i] = td.num_bags();
      td.bags.push_back(bags[i]);
    }
  td.tree.resize(td.bags.size());
  for (int i = 0; i < n; ++i) {
    if (!alive[i] || parent[i] < 0) continue;
    int a = index[i], b = index[parent[i]];
    td.tree[a].push_back(b);
    td.tree[b].push_back(a);
  }
  for (auto& nb : td.tree) std::sort(nb.begin(), nb.end());
  return td;
}

ExactTreewidth exact_treewidth(const Graph& g) {
  const int n = g.num_vertices();
  if (n > 20) throw DomainError("exact treewidth is limited to 20 vertices");
  ExactTreewidth out;
  if (n == 0) return out;
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) adj[v] |= 1u << w;

  // |Q(S, v)|: vertices outside S + v reachable from v through S.
  auto q_size = [&](std::uint32_t s, Vertex v) {
    std::uint32_t seen = 1u << v;
    std::uint32_t frontier = 1u << v;
    std::uint32_t outside = 0;
    while (frontier) {
      int x = std::countr_zero(frontier);
      frontier &= frontier - 1;
      std::uint32_t fresh = adj[x] & ~seen;
      seen |= fresh;
      outside |= fresh & ~s;
      frontier |= fresh & s;
    }
    return std::popcount(outside);
  };

  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  std::vector<std::int8_t> tw(static_cast<std::size_t>(full) + 1, 0);
  tw[0] = -1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    int best = 127;
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      std::uint32_t without = s & ~(1u << v);
      int cand = std::max<int>(tw[without], q_size(without, v));
      best = std::min(best, cand);
    }
    tw[s] = static_cast<std::int8_t>(best);
  }
  out.width = tw[full];
  std::vector<Vertex> reversed;
  for (std::uint32_t s = full; s;) {
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      std::uint32_t without = s & ~(1u << v);
      if (std::max<int>(tw[without], q_size(without, v)) == tw[s]) {
        reversed.push_back(v);
        s = without;
        break;
      }
    }
  }
  out.order.assign(reversed.rbegin(), reversed.rend());
  return out;
}

TreeDecomposition decompose(const Graph& g) {
  const int n = g.num_vertices();
  TreeDecomposition td = decomposition_from_order(g, min_fill_order(g));
  if (n <= 12 && 2 * td.width() > n) {
    ExactTreewidth exact = exact_treewidth(g);
    if (exact.width < td.width()) td = decomposition_from_order(g, exact.order);
  }
  return td;
}

namespace {

// True when the bag graph is a tree (or empty) and every vertex's bags are
// connected in it.
bool tree_shape_ok(const TreeDecomposition& td) {
  const int m = td.num_bags();
  if (static_cast<int>(td.tree.size()) != m) return false;
  if (m == 0) return true;
  long long degree_sum = 0;
  for (int i = 0; i < m; ++i)
    for (int j : td.tree[i]) {
      if (j < 0 || j >= m || j == i) return false;
      if (std::find(td.tree[j].begin(), td.tree[j].end(), i) == td.tree[j].end()) return false;
      ++degree_sum;
    }
  if (degree_sum != 2LL * (m - 1)) return false;
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 0;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    ++count;
    for (int y : td.tree[x])
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
  }
  if (count != m) return false;

  // Per vertex: the bags holding it, restricted to tree edges, must be connected.
  std::set<Vertex> all;
  for (const auto& bag : td.bags) all.insert(bag.begin(), bag.end());
  for (Vertex v : all) {
    int start = -1, holding = 0;
    for (int i = 0; i < m; ++i)
      if (td.bags[i].contains(v)) {
        ++holding;
        if (start < 0) start = i;
      }
    std::fill(seen.begin(), seen.end(), 0);
    stack.assign(1, start);
    seen[start] = 1;
    int reached = 0;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      ++reached;
      for (int y : td.tree[x])
        if (!seen[y] && td.bags[y].contains(v)) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
    if (reached != holding) return false;
  }
  return true;
}

}  // namespace

bool validate_decomposition(const Graph& g, const TreeDecomposition& td) {
  if (!tree_shape_ok(td)) return false;
  const int n = g.num_vertices();
  if (n > 0 && td.bags.empty()) return false;
  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  for (const auto& bag : td.bags)
    for (Vertex v : bag) {
      if (!g.has_vertex(v)) return false;
      covered[v] = 1;
    }
  if (std::find(covered.begin(), covered.end(), 0) != covered.end()) return false;
  for (auto [u, v] : g.edges()) {
    bool found = false;
    for (const auto& bag : td.bags)
      if (bag.contains(u) && bag.contains(v)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

int bag_containing(const TreeDecomposition& td, Vertex v) {
  for (int i = 0; i < td.num_bags(); ++i)
    if (td.bags[i].contains(v)) return i;
  return 0;
}

namespace {

class NiceBuilder {
 public:
  explicit NiceBuilder(const TreeDecomposition& td) : td_(td) {}

  NiceDecomposition build(int root_bag) {
    if (td_.bags.empty()) {
      out_.nodes.push_back({NiceKind::kLeaf, {}, -1, {}});
      out_.root = 0;
      return std::move(out_);
    }
    int top = build_subtree(root_bag, -1);
    top = move_to(top, {});
    out_.root = top;
    return std::move(out_);
  }

 private:
  int add(NiceKind kind, VertexSet bag, Vertex v, std::vector<int> children) {
    out_.nodes.push_back({kind, std::move(bag), v, std::move(children)});
    return static_cast<int>(out_.nodes.size()) - 1;
  }

  // Forget then introduce vertices until node `from` carries `target`.
  int move_to(int from, const VertexSet& target) {
    int cur = from;
    VertexSet bag = out_.nodes[cur].bag;
    for (Vertex v : set_difference(bag, target)) {
      bag.erase(v);
      cur = add(NiceKind::kForget, bag, v, {cur});
    }
    for (Vertex v : set_difference(target, bag)) {
      bag.insert(v);
      cur = add(NiceKind::kIntroduce, bag, v, {cur});
    }
    return cur;
  }

  int build_subtree(int node, int parent) {
    const VertexSet& bag = td_.bags[node];
    std::vector<int> tops;
    for (int child : td_.tree[node]) {
      if (child == parent) continue;
      tops.push_back(move_to(build_subtree(child, node), bag));
    }
    if (tops.empty()) return move_to(add(NiceKind::kLeaf, {}, -1, {}), bag);
    int cur = tops[0];
    for (std::size_t i = 1; i < tops.size(); ++i) cur = add(NiceKind::kJoin, bag, -1, {cur, tops[i]});
    return cur;
  }

  const TreeDecomposition& td_;
  NiceDecomposition out_;
};

}  // namespace

NiceDecomposition make_nice(const TreeDecomposition& td, int root_bag) {
  if (!tree_shape_ok(td)) throw DomainError("invalid tree decomposition");
  if (!td.bags.empty() && (root_bag < 0 || root_bag >= td.num_bags()))
    throw DomainError("root bag out of range");
  return NiceBuilder(td).build(root_bag);
}

std::string format_td(const TreeDecomposition& td, int num_vertices) {
  std::ostringstream out;
  out << "s td " << td.num_bags() << ' ' << td.width() + 1 << ' ' << num_vertices << '\n';
  for (int i = 0; i < td.num_bags(); ++i) {
    out << "b " << i + 1;
    for (Vertex v : td.bags[i]) out << ' ' << v + 1;
    out << '\n';
  }
  for (int i = 0; i < td.num_bags(); ++i)
    for (int j : td.tree[i])
      if (i < j) out << i + 1 << ' ' << j + 1 << '\n';
  return out.str();
}

TreeDecomposition parse_td(std::string_view text) {
  TreeDecomposition td;
  bool header = false;
  int num_vertices = 0;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  auto to_int = [&](const std::string& tok) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError(line_no, "expected an integer, got '" + tok + "'");
    return value;
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "s") {
      if (header || tok.size() != 5 || tok[1] != "td") throw ParseError(line_no, "bad 's td' line");
      int bags = to_int(tok[2]);
      num_vertices = to_int(tok[4]);
      if (bags < 0 || num_vertices < 0) throw ParseError(line_no, "negative count");
      td.bags.resize(static_cast<std::size_t>(bags));
      td.tree.resize(static_cast<std::size_t>(bags));
      header = true;
    } else if (!header) {
      throw ParseError(line_no, "content before 's td' header");
    } else if (tok[0] == "b") {
      if (tok.size() < 2) throw ParseError(line_no, "bag line without id");
      int id = to_int(tok[1]);
      if (id < 1 || id > td.num_bags()) throw ParseError(line_no, "bag id out of range");
      std::vector<Vertex> members;
      for (std::size_t i = 2; i < tok.size(); ++i) {
        int v = to_int(tok[i]);
        if (v < 1 || v > num_vertices) throw ParseError(line_no, "vertex id out of range");
        members.push_back(v - 1);
      }
      td.bags[static_cast<std::size_t>(id - 1)] = VertexSet(std::move(members));
    } else {
      if (tok.size() != 2) throw ParseError(line_no, "malformed tree edge");
      int a = to_int(tok[0]), b = to_int(tok[1]);
      if (a < 1 || b < 1 || a > td.num_bags() || b > td.num_bags())
        throw ParseError(line_no, "tree edge endpoint out of range");
      td.tree[a - 1].push_back(b - 1);
      td.tree[b - 1].push_back(a - 1);
    }
  }
  if (!header) throw ParseError(line_no, "missing 's td' header");
  for (auto& nb : td.tree) std::sort(nb.begin(), nb.end());
  return td;
}

}  // namespace twr
