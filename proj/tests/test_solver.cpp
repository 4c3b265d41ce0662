#include <gtest/gtest.h>

#include "twr/oracle.hpp"
#include "twr/solver.hpp"
#include "twr/treedecomp.hpp"

using namespace twr;

namespace {

NiceDecomposition nice_of(const Graph& g, Vertex root_vertex) {
  auto td = decompose(g);
  return make_nice(td, bag_containing(td, root_vertex));
}

CutConstraints cut(Vertex s, Vertex t) { return {{{s, t}}, {}}; }

}  // namespace

TEST(Dp, Examples) {
  Graph p3 = oracle::fixture_p3().graph;
  auto w = dp_constrained_cut(p3, nice_of(p3, 0), cut(0, 2), 1, classes::edgeless());
  ASSERT_TRUE(w);
  EXPECT_EQ(w->deletion_set, VertexSet({1}));
  EXPECT_GT(w->stats.total_states, 0);

  Graph c4 = oracle::fixture_c4().graph;
  w = dp_constrained_cut(c4, nice_of(c4, 0), cut(0, 2), 2, classes::edgeless());
  ASSERT_TRUE(w);
  EXPECT_EQ(w->deletion_set, VertexSet({1, 3}));
  EXPECT_EQ(w->induced_graph.num_edges(), 0);

  Graph d4 = oracle::fixture_d4().graph;
  EXPECT_FALSE(dp_constrained_cut(d4, nice_of(d4, 0), cut(0, 2), 2, classes::edgeless()));
  EXPECT_TRUE(dp_constrained_cut(d4, nice_of(d4, 0), cut(0, 2), 2, classes::any_graph()));
}

TEST(Dp, Undeletable) {
  Graph c4 = oracle::fixture_c4().graph;
  EXPECT_FALSE(dp_constrained_cut(c4, nice_of(c4, 0), cut(0, 2), 2, classes::any_graph(), {1}));
}

TEST(Dp, RejectsBadDecomposition) {
  Graph c4 = oracle::fixture_c4().graph;
  TreeDecomposition td{{{0, 1, 2}}, {{}}};  // vertex 3 missing
  NiceDecomposition bogus;
  bogus.nodes.push_back({NiceKind::kLeaf, {}, -1, {}});
  bogus.root = 0;
  EXPECT_THROW(dp_constrained_cut(c4, bogus, cut(0, 2), 2, classes::any_graph()), DomainError);
  EXPECT_THROW(dp_constrained_cut(c4, make_nice(td), cut(0, 2), 2, classes::any_graph()),
               DomainError);
}

TEST(GMincut, Examples) {
  auto c4 = g_mincut(oracle::fixture_c4().graph, 0, 2, 2, classes::edgeless());
  ASSERT_TRUE(c4);
  EXPECT_EQ(c4->deletion_set, VertexSet({1, 3}));
  EXPECT_FALSE(g_mincut(oracle::fixture_d4().graph, 0, 2, 2, classes::edgeless()));
  for (int k = 0; k < 4; ++k)
    EXPECT_FALSE(g_mincut(Graph(2, {{0, 1}}), 0, 1, k, classes::any_graph()));
  auto none = g_mincut(Graph(3, {{0, 1}}), 0, 2, 0, classes::edgeless());
  ASSERT_TRUE(none);
  EXPECT_TRUE(none->deletion_set.empty());
  EXPECT_THROW(g_mincut(oracle::fixture_c4().graph, 0, 0, 1, classes::any_graph()), DomainError);
}

TEST(GMincut, Report) {
  PipelineReport report;
  auto w = g_mincut(oracle::fixture_q3().graph, 0, 7, 4, classes::edgeless(), &report);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->deletion_set.size(), 3u);
  EXPECT_EQ(report.ell, 3);
  EXPECT_EQ(report.excess, 1);
  EXPECT_GE(report.width, 0);
  EXPECT_GT(report.dp.total_states, 0);
}

TEST(Multicut, Examples) {
  // star c with leaves u, v, w plus u-w
  Graph star(4, {{0, 1}, {0, 2}, {0, 3}, {1, 3}});
  CutConstraints cons{{{1, 2}}, {{1, 3}}};
  auto w = g_multicut_uncut(star, cons, 1, classes::edgeless());
  ASSERT_TRUE(w);
  EXPECT_EQ(w->deletion_set, VertexSet({0}));

  Graph p4(5, {{0, 1}, {1, 2}, {3, 4}});
  EXPECT_TRUE(g_multicut_uncut(p4, {{}, {{0, 2}}}, 0, classes::any_graph()));
  EXPECT_FALSE(g_multicut_uncut(p4, {{}, {{0, 3}}}, 0, classes::any_graph()));
  EXPECT_FALSE(g_multicut_uncut(p4, {{{0, 1}}, {}}, 3, classes::any_graph()));
  EXPECT_FALSE(g_multicut_uncut(p4, {{{0, 0}}, {}}, 3, classes::any_graph()));
  EXPECT_TRUE(g_multicut_uncut(p4, {{{0, 2}}, {{3, 3}}}, 1, classes::any_graph()));
}

TEST(Verify, Constraints) {
  Graph c4 = oracle::fixture_c4().graph;
  EXPECT_TRUE(verify_constrained_cut(c4, cut(0, 2), 2, classes::edgeless(), {1, 3}));
  EXPECT_FALSE(verify_constrained_cut(c4, cut(0, 2), 1, classes::edgeless(), {1, 3}));
  EXPECT_FALSE(verify_constrained_cut(c4, cut(0, 2), 2, classes::edgeless(), {1}));
  EXPECT_FALSE(verify_constrained_cut(c4, cut(0, 2), 3, classes::edgeless(), {0, 1, 3}));
}

TEST(Properties, GMincutMatchesBruteForce) {
  const HereditaryClass cls[] = {classes::edgeless(), classes::forest(), classes::max_degree(1)};
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const int n = 4 + static_cast<int>(seed % 8);
    oracle::ProblemSpec spec;
    spec.kind = oracle::ProblemKind::kGMincut;
    spec.graph = oracle::random_graph({n, 0.25 + 0.05 * static_cast<double>(seed % 4), seed});
    spec.s = 0;
    spec.t = n - 1;
    spec.k = static_cast<int>(seed % 5);
    spec.cls = cls[seed % 3];
    auto expected = oracle::brute_force_solve(spec);
    auto got = g_mincut(spec.graph, spec.s, spec.t, spec.k, spec.cls);
    EXPECT_EQ(got.has_value(), expected.yes) << format_graph(spec.graph) << spec.cls.name;
    if (got)
      EXPECT_TRUE(verify_constrained_cut(spec.graph, cut(spec.s, spec.t), spec.k, spec.cls,
                                         got->deletion_set));
  }
}

TEST(Properties, MulticutMatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 5 + static_cast<int>(seed % 5);
    oracle::ProblemSpec spec;
    spec.kind = oracle::ProblemKind::kMulticutUncut;
    spec.graph = oracle::random_graph({n, 0.35, seed + 1000});
    spec.k = static_cast<int>(seed % 4);
    spec.cls = seed % 2 ? classes::any_graph() : classes::edgeless();
    std::uint64_t h = oracle::splitmix64(seed);
    auto pick = [&] {
      h = oracle::splitmix64(h);
      return static_cast<Vertex>(h % static_cast<std::uint64_t>(n));
    };
    for (int i = 0; i < 1 + static_cast<int>(seed % 2); ++i) spec.cons.cut_pairs.emplace_back(pick(), pick());
    for (int i = 0; i < static_cast<int>(seed % 3); ++i) spec.cons.uncut_pairs.emplace_back(pick(), pick());
    auto expected = oracle::brute_force_solve(spec);
    auto got = g_multicut_uncut(spec.graph, spec.cons, spec.k, spec.cls);
    EXPECT_EQ(got.has_value(), expected.yes) << format_graph(spec.graph);
    if (got)
      EXPECT_TRUE(verify_constrained_cut(spec.graph, spec.cons, spec.k, spec.cls, got->deletion_set));
  }
}

TEST(Properties, PruningDoesNotChangeDecisions) {
  DpOptions off;
  off.prune_heredity = false;
  const HereditaryClass cls[] = {classes::edgeless(), classes::forest(), classes::max_degree(1),
                                 classes::match_deficiency(1)};
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const int n = 4 + static_cast<int>(seed % 7);
    Graph g = oracle::random_graph({n, 0.3, seed + 77});
    const int k = 1 + static_cast<int>(seed % 4);
    const auto& c = cls[seed % 4];
    auto on = g_mincut(g, 0, n - 1, k, c);
    auto without = g_mincut(g, 0, n - 1, k, c, nullptr, off);
    EXPECT_EQ(on.has_value(), without.has_value()) << format_graph(g) << c.name;

    // and directly on the DP, without the reduction in front
    if (g.has_edge(0, n - 1)) continue;
    auto nd = nice_of(g, 0);
    auto d_on = dp_constrained_cut(g, nd, cut(0, n - 1), k, c);
    auto d_off = dp_constrained_cut(g, nd, cut(0, n - 1), k, c, {}, off);
    EXPECT_EQ(d_on.has_value(), d_off.has_value());
    EXPECT_EQ(d_on.has_value(), on.has_value());
  }
}
