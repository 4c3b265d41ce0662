#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twr/classes.hpp"
#include "twr/graph.hpp"
#include "twr/solver.hpp"

// Exhaustive reference answers. Nothing here calls the flow, reduction,
// decomposition or DP code; only the graph primitives and class predicates.

namespace twr::oracle {

/// Every inclusion-minimal s-t separator of size at most k, ordered by size
/// and then lexicographically.
std::vector<VertexSet> enumerate_minimal_separators(const Graph& g, Vertex s, Vertex t, int k);

/// True iff no component of G - sep holds both s and t (sep must avoid them).
bool separates(const Graph& g, const VertexSet& sep, Vertex s, Vertex t);

enum class ProblemKind {
  kStableCut,
  kGMincut,
  kMulticutUncut,
  kOddCycleTransversal,
  kStableBipartization,
  kExactStableBipartization,
  kEdgeInducedCut,
  kSeparatorUnion,
};

std::string to_string(ProblemKind kind);

struct ProblemSpec {
  ProblemKind kind = ProblemKind::kStableCut;
  Graph graph;
  Vertex s = -1, t = -1;
  int k = 0;
  CutConstraints cons;                           // multicut-uncut only
  HereditaryClass cls = classes::any_graph();    // g-mincut and multicut-uncut
  std::optional<VertexSet> allowed;              // exact stable bipartization
};

struct ProblemAnswer {
  bool yes = false;
  VertexSet witness;        // deletion set, transversal, or the separator union
  std::vector<Edge> edges;  // edge-induced cut only
};

inline constexpr int kDefaultCap = 14;

/// Exhaustive answer with the semantics of the matching fast operation.
/// Throws DomainError when the graph has more than `cap` vertices.
ProblemAnswer brute_force_solve(const ProblemSpec& spec, int cap = kDefaultCap);

/// The fast pipeline for the same problem.
ProblemAnswer fast_solve(const ProblemSpec& spec);

/// Checks a claimed YES answer directly against the definition.
bool answer_is_valid(const ProblemSpec& spec, const ProblemAnswer& answer);

struct RandomModel {
  int n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

/// G(n,p): each pair (i<j) in order gets an edge when a uniform draw is < p.
Graph random_graph(const RandomModel& model);

std::uint64_t splitmix64(std::uint64_t x);

struct Fixture {
  std::string name;
  Graph graph;
  Vertex s = -1, t = -1;
};

Fixture fixture_p3();  // s-a-t
Fixture fixture_c4();  // s-a-t-b-s
Fixture fixture_d4();  // C4 plus a-b
Fixture fixture_pp();  // two disjoint s-t paths with two inner vertices each
Fixture fixture_q3();  // 3-cube with antipodal terminals
std::vector<Fixture> all_fixtures();

struct Mismatch {
  std::string suite;
  std::uint64_t seed = 0;
  std::string instance;  // graph text plus parameters
  std::string fast;
  std::string expected;
};

struct CheckReport {
  long long trials = 0;
  std::vector<Mismatch> mismatches;
  std::map<std::string, double> elapsed_ms;  // per suite
  bool passed() const { return mismatches.empty(); }
};

struct CheckConfig {
  std::vector<std::string> suites;  // empty: all suites
  int trials = 20;                  // random instances per suite
  int max_n = 9;
  int max_k = 3;
  int cap = kDefaultCap;
  std::uint64_t seed = 1;
  bool include_fixtures = true;
  // Test hook: may alter each fast answer before comparison.
  std::function<void(const ProblemSpec&, ProblemAnswer&)> tamper;
};

std::vector<std::string> suite_names();

CheckReport cross_check(const CheckConfig& config);

/// JSON text of the report; `timing` adds the per-suite elapsed times.
std::string report_json(const CheckReport& report, bool timing);

}  // namespace twr::oracle
