#include "twr/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "json.hpp"
#include "twr/problems.hpp"

namespace twr::oracle {
namespace {

// Calls fn on every subset of `pool` with at most `max_size` members, by size
// and then lexicographically, until fn returns true.
template <typename Fn>
bool for_each_subset(const std::vector<Vertex>& pool, int max_size, Fn&& fn) {
  const int n = static_cast<int>(pool.size());
  std::vector<Vertex> current;
  auto rec = [&](auto&& self, int start, int remaining) -> bool {
    if (remaining == 0) return fn(VertexSet(current));
    for (int i = start; i <= n - remaining; ++i) {
      current.push_back(pool[i]);
      if (self(self, i + 1, remaining - 1)) return true;
      current.pop_back();
    }
    return false;
  };
  for (int size = 0; size <= std::min(max_size, n); ++size)
    if (rec(rec, 0, size)) return true;
  return false;
}

std::vector<Vertex> pool_without(const Graph& g, const VertexSet& excluded) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (!excluded.contains(v)) out.push_back(v);
  return out;
}

std::vector<int> component_ids(const Graph& g, const VertexSet& removed) {
  std::vector<int> id(static_cast<std::size_t>(g.num_vertices()), -1);
  auto comps = components(g, removed);
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (Vertex v : comps[i]) id[v] = static_cast<int>(i);
  return id;
}

// An uncut pair u:u holds trivially and does not make u a terminal.
CutConstraints without_trivial_uncut(const CutConstraints& cons) {
  CutConstraints out{cons.cut_pairs, {}};
  for (auto [u, v] : cons.uncut_pairs)
    if (u != v) out.uncut_pairs.emplace_back(u, v);
  return out;
}

bool constraints_hold(const Graph& g, const CutConstraints& cons_in, const VertexSet& s) {
  const CutConstraints cons = without_trivial_uncut(cons_in);
  if (s.intersects(cons.terminals())) return false;
  auto id = component_ids(g, s);
  for (auto [u, v] : cons.cut_pairs)
    if (id[u] == id[v]) return false;
  for (auto [u, v] : cons.uncut_pairs)
    if (id[u] != id[v]) return false;
  return true;
}

bool bipartite_after(const Graph& g, const VertexSet& s) {
  return is_bipartite(delete_vertices(g, s).graph);
}

}  // namespace

bool separates(const Graph& g, const VertexSet& sep, Vertex s, Vertex t) {
  if (sep.contains(s) || sep.contains(t)) return false;
  auto id = component_ids(g, sep);
  return id[s] != id[t];
}

std::vector<VertexSet> enumerate_minimal_separators(const Graph& g, Vertex s, Vertex t, int k) {
  if (!g.has_vertex(s) || !g.has_vertex(t)) throw DomainError("terminal out of range");
  if (s == t) throw DomainError("terminals must be distinct");
  std::vector<VertexSet> out;
  if (g.has_edge(s, t)) return out;
  for_each_subset(pool_without(g, {s, t}), k, [&](const VertexSet& sep) {
    if (!separates(g, sep, s, t)) return false;
    for (Vertex v : sep) {
      VertexSet smaller = sep;
      smaller.erase(v);
      if (separates(g, smaller, s, t)) return false;
    }
    out.push_back(sep);
    return false;
  });
  return out;
}

std::string to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kStableCut: return "stable-cut";
    case ProblemKind::kGMincut: return "gmincut";
    case ProblemKind::kMulticutUncut: return "multicut";
    case ProblemKind::kOddCycleTransversal: return "oct";
    case ProblemKind::kStableBipartization: return "stable-bip";
    case ProblemKind::kExactStableBipartization: return "exact-stable-bip";
    case ProblemKind::kEdgeInducedCut: return "eivc";
    case ProblemKind::kSeparatorUnion: return "exact-c";
  }
  return "unknown";
}

ProblemAnswer brute_force_solve(const ProblemSpec& spec, int cap) {
  const Graph& g = spec.graph;
  if (g.num_vertices() > cap)
    throw DomainError("instance exceeds the oracle cap of " + std::to_string(cap) + " vertices");
  if (spec.k < 0) throw DomainError("budget must be non-negative");
  ProblemAnswer ans;
  auto accept = [&](const VertexSet& s) {
    ans.yes = true;
    ans.witness = s;
    return true;
  };

  switch (spec.kind) {
    case ProblemKind::kStableCut:
    case ProblemKind::kGMincut: {
      if (spec.s == spec.t) throw DomainError("terminals must be distinct");
      const bool stable = spec.kind == ProblemKind::kStableCut;
      for_each_subset(pool_without(g, {spec.s, spec.t}), spec.k, [&](const VertexSet& s) {
        if (!separates(g, s, spec.s, spec.t)) return false;
        Graph inside = induced_subgraph(g, s).graph;
        if (stable ? inside.num_edges() != 0 : !spec.cls.contains(inside)) return false;
        return accept(s);
      });
      break;
    }
    case ProblemKind::kMulticutUncut: {
      for (auto [u, v] : spec.cons.cut_pairs)
        if (u == v) return ans;
      for_each_subset(pool_without(g, without_trivial_uncut(spec.cons).terminals()), spec.k,
                      [&](const VertexSet& s) {
        if (!constraints_hold(g, spec.cons, s)) return false;
        if (!spec.cls.contains(induced_subgraph(g, s).graph)) return false;
        return accept(s);
      });
      break;
    }
    case ProblemKind::kOddCycleTransversal:
      for_each_subset(pool_without(g, {}), spec.k, [&](const VertexSet& s) {
        return bipartite_after(g, s) && accept(s);
      });
      break;
    case ProblemKind::kStableBipartization:
      for_each_subset(pool_without(g, {}), spec.k, [&](const VertexSet& s) {
        return is_independent(g, s) && bipartite_after(g, s) && accept(s);
      });
      break;
    case ProblemKind::kExactStableBipartization: {
      VertexSet allowed = spec.allowed.value_or(VertexSet::range(g.num_vertices()));
      std::vector<Vertex> pool(allowed.begin(), allowed.end());
      for_each_subset(pool, spec.k, [&](const VertexSet& s) {
        return static_cast<int>(s.size()) == spec.k && is_independent(g, s) &&
               bipartite_after(g, s) && accept(s);
      });
      break;
    }
    case ProblemKind::kEdgeInducedCut: {
      if (spec.s == spec.t) throw DomainError("terminals must be distinct");
      std::vector<Edge> all = g.edges();
      // Edge subsets in (size, lexicographic) order, reusing the vertex
      // enumerator over edge indices.
      std::vector<Vertex> indices(all.size());
      for (std::size_t i = 0; i < all.size(); ++i) indices[i] = static_cast<Vertex>(i);
      for_each_subset(indices, spec.k, [&](const VertexSet& chosen) {
        std::vector<Vertex> ends;
        for (Vertex i : chosen)
          for (Vertex x : {all[i].first, all[i].second})
            if (x != spec.s && x != spec.t) ends.push_back(x);
        VertexSet deleted(std::move(ends));
        if (!separates(g, deleted, spec.s, spec.t)) return false;
        ans.yes = true;
        ans.witness = deleted;
        for (Vertex i : chosen) ans.edges.push_back(all[i]);
        return true;
      });
      break;
    }
    case ProblemKind::kSeparatorUnion: {
      VertexSet all;
      for (const VertexSet& sep : enumerate_minimal_separators(g, spec.s, spec.t, spec.k))
        all = set_union(all, sep);
      ans.yes = !all.empty();
      ans.witness = all;
      break;
    }
  }
  return ans;
}

ProblemAnswer fast_solve(const ProblemSpec& spec) {
  const Graph& g = spec.graph;
  ProblemAnswer ans;
  auto from = [&](const std::optional<VertexSet>& s) {
    ans.yes = s.has_value();
    if (s) ans.witness = *s;
  };
  switch (spec.kind) {
    case ProblemKind::kStableCut:
      from(stable_st_cut(g, spec.s, spec.t, spec.k));
      break;
    case ProblemKind::kGMincut: {
      auto w = g_mincut(g, spec.s, spec.t, spec.k, spec.cls);
      from(w ? std::optional<VertexSet>(w->deletion_set) : std::nullopt);
      break;
    }
    case ProblemKind::kMulticutUncut: {
      auto w = g_multicut_uncut(g, spec.cons, spec.k, spec.cls);
      from(w ? std::optional<VertexSet>(w->deletion_set) : std::nullopt);
      break;
    }
    case ProblemKind::kOddCycleTransversal:
      from(odd_cycle_transversal(g, spec.k));
      break;
    case ProblemKind::kStableBipartization:
      from(stable_bipartization(g, spec.k));
      break;
    case ProblemKind::kExactStableBipartization:
      from(exact_stable_bipartization(g, spec.k, spec.allowed));
      break;
    case ProblemKind::kEdgeInducedCut: {
      auto w = edge_induced_vertex_cut(g, spec.s, spec.t, spec.k);
      ans.yes = w.has_value();
      if (w) {
        ans.witness = w->deleted;
        ans.edges = w->edges;
      }
      break;
    }
    case ProblemKind::kSeparatorUnion:
      ans.witness = exact_separator_union(g, spec.s, spec.t, spec.k);
      ans.yes = !ans.witness.empty();
      break;
  }
  return ans;
}

bool answer_is_valid(const ProblemSpec& spec, const ProblemAnswer& answer) {
  if (!answer.yes) return true;
  const Graph& g = spec.graph;
  const VertexSet& s = answer.witness;
  if (!s.is_subset_of(VertexSet::range(g.num_vertices()))) return false;
  const bool small = static_cast<int>(s.size()) <= spec.k;
  switch (spec.kind) {
    case ProblemKind::kStableCut:
      return small && is_independent(g, s) && separates(g, s, spec.s, spec.t);
    case ProblemKind::kGMincut:
      return small && separates(g, s, spec.s, spec.t) &&
             spec.cls.contains(induced_subgraph(g, s).graph);
    case ProblemKind::kMulticutUncut:
      return small && constraints_hold(g, spec.cons, s) &&
             spec.cls.contains(induced_subgraph(g, s).graph);
    case ProblemKind::kOddCycleTransversal:
      return small && bipartite_after(g, s);
    case ProblemKind::kStableBipartization:
      return small && is_independent(g, s) && bipartite_after(g, s);
    case ProblemKind::kExactStableBipartization:
      return static_cast<int>(s.size()) == spec.k && is_independent(g, s) &&
             bipartite_after(g, s) && (!spec.allowed || s.is_subset_of(*spec.allowed));
    case ProblemKind::kEdgeInducedCut: {
      if (static_cast<int>(answer.edges.size()) > spec.k) return false;
      std::vector<Vertex> ends;
      for (auto [u, v] : answer.edges) {
        if (!g.has_vertex(u) || !g.has_vertex(v) || !g.has_edge(u, v)) return false;
        for (Vertex x : {u, v})
          if (x != spec.s && x != spec.t) ends.push_back(x);
      }
      VertexSet deleted(std::move(ends));
      return deleted == s && separates(g, deleted, spec.s, spec.t);
    }
    case ProblemKind::kSeparatorUnion:
      return true;
  }
  return false;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Graph random_graph(const RandomModel& model) {
  if (model.n < 0) throw DomainError("vertex count must be non-negative");
  std::mt19937_64 rng(model.seed);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < model.n; ++i)
    for (Vertex j = i + 1; j < model.n; ++j) {
      double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (draw < model.p) edges.emplace_back(i, j);
    }
  return Graph(model.n, edges);
}

Fixture fixture_p3() { return {"P3", Graph(3, {{0, 1}, {1, 2}}), 0, 2}; }

Fixture fixture_c4() { return {"C4", Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}), 0, 2}; }

Fixture fixture_d4() {
  return {"D4", Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 3}}), 0, 2};
}

Fixture fixture_pp() {
  return {"PP", Graph(6, {{0, 1}, {1, 2}, {2, 5}, {0, 3}, {3, 4}, {4, 5}}), 0, 5};
}

Fixture fixture_q3() {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < 8; ++v)
    for (int bit = 0; bit < 3; ++bit) {
      Vertex w = v ^ (1 << bit);
      if (v < w) edges.emplace_back(v, w);
    }
  return {"Q3", Graph(8, edges), 0, 7};
}

std::vector<Fixture> all_fixtures() {
  return {fixture_p3(), fixture_c4(), fixture_d4(), fixture_pp(), fixture_q3()};
}

std::vector<std::string> suite_names() {
  return {"stable-cut", "gmincut",  "multicut", "oct",
          "stable-bip", "exact-stable-bip", "eivc", "exact-c"};
}

namespace {

ProblemKind kind_of(const std::string& suite) {
  for (int i = 0; i <= static_cast<int>(ProblemKind::kSeparatorUnion); ++i)
    if (to_string(static_cast<ProblemKind>(i)) == suite) return static_cast<ProblemKind>(i);
  throw DomainError("unknown suite '" + suite + "'");
}

std::string describe(const ProblemSpec& spec) {
  std::ostringstream out;
  out << format_graph(spec.graph) << "c problem " << to_string(spec.kind) << " k=" << spec.k;
  if (spec.s >= 0) out << " s=" << spec.s + 1 << " t=" << spec.t + 1;
  for (auto [u, v] : spec.cons.cut_pairs) out << " cut=" << u + 1 << ":" << v + 1;
  for (auto [u, v] : spec.cons.uncut_pairs) out << " uncut=" << u + 1 << ":" << v + 1;
  if (spec.kind == ProblemKind::kGMincut || spec.kind == ProblemKind::kMulticutUncut)
    out << " class=" << spec.cls.name;
  out << "\n";
  return out.str();
}

std::string describe(const ProblemAnswer& ans, ProblemKind kind) {
  if (kind == ProblemKind::kSeparatorUnion) return to_string(ans.witness);
  if (!ans.yes) return "NO";
  return "YES " + to_string(ans.witness);
}

HereditaryClass random_class(std::mt19937_64& rng, bool with_any) {
  static const char* const selectors[] = {"edgeless", "forest", "maxdeg:1", "bipartite",
                                          "matchdef:1", "any"};
  const std::size_t count = with_any ? 6 : 5;
  return parse_class_selector(selectors[rng() % count]);
}

// A random instance of `kind`; returns nothing when the draw is unusable.
std::optional<ProblemSpec> random_spec(ProblemKind kind, const CheckConfig& config,
                                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  static const double densities[] = {0.2, 0.3, 0.4, 0.5};
  const int lo = std::min(4, config.max_n);
  ProblemSpec spec;
  spec.kind = kind;
  int n = lo + static_cast<int>(rng() % static_cast<std::uint64_t>(config.max_n - lo + 1));
  double p = densities[rng() % 4];
  spec.graph = random_graph({n, p, rng()});
  spec.k = static_cast<int>(rng() % static_cast<std::uint64_t>(config.max_k + 1));
  spec.s = 0;
  spec.t = n - 1;
  switch (kind) {
    case ProblemKind::kGMincut:
      spec.cls = random_class(rng, false);
      break;
    case ProblemKind::kMulticutUncut: {
      spec.s = spec.t = -1;
      spec.cls = random_class(rng, true);
      auto pick_pair = [&]() {
        Vertex u = static_cast<Vertex>(rng() % n);
        Vertex v = static_cast<Vertex>(rng() % n);
        return TerminalPair{u, v};
      };
      int cuts = 1 + static_cast<int>(rng() % 2);
      int uncuts = static_cast<int>(rng() % 3);
      for (int i = 0; i < cuts; ++i) spec.cons.cut_pairs.push_back(pick_pair());
      for (int i = 0; i < uncuts; ++i) spec.cons.uncut_pairs.push_back(pick_pair());
      break;
    }
    case ProblemKind::kOddCycleTransversal:
    case ProblemKind::kStableBipartization:
    case ProblemKind::kExactStableBipartization:
      spec.s = spec.t = -1;
      break;
    case ProblemKind::kSeparatorUnion:
      if (spec.graph.has_edge(spec.s, spec.t)) return std::nullopt;
      break;
    default:
      break;
  }
  return spec;
}

std::vector<ProblemSpec> fixture_specs(ProblemKind kind) {
  std::vector<ProblemSpec> out;
  for (const Fixture& f : all_fixtures())
    for (int k = 0; k <= 3; ++k) {
      ProblemSpec spec;
      spec.kind = kind;
      spec.graph = f.graph;
      spec.k = k;
      spec.s = f.s;
      spec.t = f.t;
      switch (kind) {
        case ProblemKind::kGMincut:
          spec.cls = classes::forest();
          break;
        case ProblemKind::kMulticutUncut:
          spec.s = spec.t = -1;
          spec.cons.cut_pairs = {{f.s, f.t}};
          spec.cons.uncut_pairs = {{f.s, 1}};
          spec.cls = classes::edgeless();
          break;
        case ProblemKind::kOddCycleTransversal:
        case ProblemKind::kStableBipartization:
        case ProblemKind::kExactStableBipartization:
          spec.s = spec.t = -1;
          break;
        default:
          break;
      }
      out.push_back(std::move(spec));
    }
  return out;
}

bool answers_agree(const ProblemSpec& spec, const ProblemAnswer& fast,
                   const ProblemAnswer& expected) {
  if (spec.kind == ProblemKind::kSeparatorUnion) return fast.witness == expected.witness;
  if (fast.yes != expected.yes) return false;
  if (!answer_is_valid(spec, fast)) return false;
  if (spec.kind == ProblemKind::kOddCycleTransversal && fast.yes)
    return fast.witness.size() == expected.witness.size();
  return true;
}

}  // namespace

CheckReport cross_check(const CheckConfig& config) {
  if (config.trials < 0 || config.max_n < 1 || config.max_k < 0)
    throw DomainError("invalid cross-check configuration");
  CheckReport report;
  std::vector<std::string> suites = config.suites.empty() ? suite_names() : config.suites;
  for (std::size_t si = 0; si < suites.size(); ++si) {
    const ProblemKind kind = kind_of(suites[si]);
    const auto start = std::chrono::steady_clock::now();
    auto run_one = [&](const ProblemSpec& spec, std::uint64_t seed) {
      ++report.trials;
      ProblemAnswer fast = fast_solve(spec);
      if (config.tamper) config.tamper(spec, fast);
      ProblemAnswer expected = brute_force_solve(spec, config.cap);
      if (!answers_agree(spec, fast, expected))
        report.mismatches.push_back(
            {suites[si], seed, describe(spec), describe(fast, kind), describe(expected, kind)});
    };
    if (config.include_fixtures && config.trials > 0)
      for (const ProblemSpec& spec : fixture_specs(kind)) run_one(spec, 0);
    for (int trial = 0; trial < config.trials; ++trial) {
      // Per-trial seeds depend only on (seed, suite, trial).
      std::uint64_t seed = splitmix64(config.seed ^ splitmix64(si * 1000003ULL + trial));
      for (int attempt = 0;; ++attempt) {
        auto spec = random_spec(kind, config, splitmix64(seed + attempt));
        if (!spec) continue;
        run_one(*spec, seed);
        break;
      }
    }
    report.elapsed_ms[suites[si]] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
  }
  return report;
}

std::string report_json(const CheckReport& report, bool timing) {
  nlohmann::ordered_json j;
  j["trials"] = report.trials;
  j["passed"] = report.passed();
  j["mismatch_count"] = report.mismatches.size();
  j["mismatches"] = nlohmann::ordered_json::array();
  for (const Mismatch& m : report.mismatches)
    j["mismatches"].push_back({{"suite", m.suite},
                               {"seed", m.seed},
                               {"instance", m.instance},
                               {"fast", m.fast},
                               {"expected", m.expected}});
  if (timing) j["elapsed_ms"] = report.elapsed_ms;
  return j.dump(2);
}

}  // namespace twr::oracle
