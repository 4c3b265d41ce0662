#include <gtest/gtest.h>

#include <algorithm>

#include "twr/oracle.hpp"
#include "twr/reduction.hpp"
#include "twr/separation.hpp"
#include "twr/treedecomp.hpp"

using namespace twr;

namespace {

std::vector<Vertex> ids(const Torso& t, std::initializer_list<Vertex> originals) {
  std::vector<Vertex> out;
  for (Vertex v : originals) {
    auto it = std::find(t.to_parent.begin(), t.to_parent.end(), v);
    out.push_back(static_cast<Vertex>(it - t.to_parent.begin()));
  }
  return out;
}

bool torso_has(const Torso& t, Vertex u, Vertex v) {
  auto i = ids(t, {u, v});
  return t.graph.has_edge(i[0], i[1]);
}

std::vector<VertexSet> family_in_star(const ReducedInstance& r, Vertex s, Vertex t, int k) {
  std::vector<VertexSet> out;
  for (const auto& sep : oracle::enumerate_minimal_separators(r.gstar, r.to_star(s), r.to_star(t), k)) {
    // separators through gadget vertices never map back; keep them visible
    bool gadget = false;
    for (Vertex v : sep)
      if (r.origin[v] == kGadget) gadget = true;
    out.push_back(gadget ? VertexSet({-1}) : r.to_original(sep));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Torso, Examples) {
  Graph path(3, {{0, 1}, {1, 2}});
  auto a = torso(path, {0, 2});
  EXPECT_EQ(a.graph.num_vertices(), 2);
  EXPECT_TRUE(a.graph.has_edge(0, 1));
  EXPECT_EQ(a.added, (std::vector<Edge>{{0, 2}}));

  auto c4 = torso(oracle::fixture_c4().graph, {0, 2});
  EXPECT_TRUE(c4.graph.has_edge(0, 1));
  EXPECT_EQ(c4.added.size(), 1u);

  auto pp = torso(oracle::fixture_pp().graph, {0, 1, 5});
  EXPECT_EQ(pp.graph.num_edges(), 3);
  EXPECT_TRUE(torso_has(pp, 0, 1));
  EXPECT_TRUE(torso_has(pp, 1, 5));
  EXPECT_TRUE(torso_has(pp, 0, 5));
  EXPECT_EQ(pp.added, (std::vector<Edge>{{0, 5}, {1, 5}}));

  EXPECT_THROW(torso(path, {3}), DomainError);
}

TEST(TwBound, Values) {
  EXPECT_EQ(tw_bound(1, 0).g_value, 6);
  EXPECT_EQ(tw_bound(1, 0).f_value, 1);
  EXPECT_EQ(tw_bound(2, 0).g_value, 12);
  EXPECT_EQ(tw_bound(1, 1).g_value, 195);
  EXPECT_EQ(tw_bound(1, 1).f_value, 10);
  auto big = tw_bound(10, 10);
  EXPECT_TRUE(big.saturated);
  EXPECT_FALSE(big.warning.empty());
  EXPECT_THROW(tw_bound(0, 0), DomainError);
  EXPECT_THROW(tw_bound(1, -1), DomainError);
}

TEST(Layers, PP) {
  Graph g = oracle::fixture_pp().graph;
  auto ls = build_layers(g, build_chain(g, 0, 5));
  ASSERT_EQ(ls.layers.size(), 3u);
  EXPECT_TRUE(ls.layers[0].empty());
  EXPECT_TRUE(ls.layers[1].empty());
  EXPECT_TRUE(ls.layers[2].empty());
  EXPECT_EQ(ls.pools[1], VertexSet({1, 2, 3, 4}));
}

TEST(Cover, Examples) {
  EXPECT_EQ(cover_set(oracle::fixture_p3().graph, 0, 2, 1), VertexSet({0, 1, 2}));
  EXPECT_EQ(cover_set(oracle::fixture_pp().graph, 0, 5, 2), VertexSet::range(6));
  EXPECT_EQ(cover_set(oracle::fixture_pp().graph, 0, 5, 1), VertexSet({0, 5}));
  EXPECT_EQ(cover_set(Graph(2, {{0, 1}}), 0, 1, 3), VertexSet({0, 1}));
  CoverStats stats;
  EXPECT_EQ(cover_set(oracle::fixture_q3().graph, 0, 7, 6, &stats), VertexSet::range(8));
  EXPECT_EQ(stats.calls, 1);  // every vertex already lies on a chain boundary
  EXPECT_THROW(cover_set(oracle::fixture_p3().graph, 1, 1, 1), DomainError);
}

TEST(Reduce, Examples) {
  auto p3 = reduce_instance(oracle::fixture_p3().graph, {0, 2}, 1);
  EXPECT_EQ(p3.gstar, oracle::fixture_p3().graph);
  EXPECT_TRUE(p3.undeletable.empty());

  auto pp = reduce_instance(oracle::fixture_pp().graph, {0, 5}, 1);
  EXPECT_EQ(pp.cover, VertexSet({0, 5}));
  EXPECT_EQ(pp.gstar.num_vertices(), 4);
  EXPECT_EQ(pp.undeletable.size(), 2u);
  for (Vertex gad : pp.undeletable) {
    EXPECT_EQ(pp.gstar.degree(gad), 2);
    EXPECT_EQ(pp.origin[gad], kGadget);
  }
  EXPECT_FALSE(pp.gstar.has_edge(pp.to_star(0), pp.to_star(5)));
  EXPECT_TRUE(oracle::enumerate_minimal_separators(pp.gstar, pp.to_star(0), pp.to_star(5), 1).empty());

  auto c4 = reduce_instance(oracle::fixture_c4().graph, {0, 2}, 2);
  EXPECT_EQ(c4.gstar, oracle::fixture_c4().graph);
  EXPECT_THROW(reduce_instance(oracle::fixture_c4().graph, {0}, 2), DomainError);
}

TEST(Properties, CoverCompleteness) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const int n = 5 + static_cast<int>(seed % 6);
    Graph g = oracle::random_graph({n, 0.3 + 0.05 * static_cast<double>(seed % 3), seed});
    const Vertex s = 0, t = n - 1;
    if (g.has_edge(s, t)) continue;
    const int ell = min_vertex_separator(g, {s}, {t}).size;
    for (int e = 0; e <= 2; ++e) {
      const int k = ell + e;
      VertexSet c = cover_set(g, s, t, k);
      EXPECT_TRUE(c.contains(s) && c.contains(t));
      for (const auto& sep : oracle::enumerate_minimal_separators(g, s, t, k))
        EXPECT_TRUE(sep.is_subset_of(c)) << format_graph(g) << " k=" << k;
      if (e == 0 && ell > 0) {
        Torso tor = torso(g, c);
        EXPECT_LE(exact_treewidth(tor.graph).width, 6 * ell);
      }
    }
  }
}

TEST(Properties, LayerInvariants) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    Graph g = oracle::random_graph({9, 0.3, seed});
    if (g.has_edge(0, 8)) continue;
    auto ls = build_layers(g, build_chain(g, 0, 8));
    VertexSet seen;
    for (std::size_t i = 0; i < ls.layers.size(); ++i) {
      EXPECT_FALSE(ls.layers[i].intersects(seen));
      EXPECT_FALSE(ls.layers[i].contains(0));
      EXPECT_FALSE(ls.layers[i].contains(8));
      seen = set_union(seen, ls.layers[i]);
      VertexSet allowed = set_union(ls.layers[i], ls.pools[i]);
      EXPECT_TRUE(boundary(g, ls.layers[i]).is_subset_of(allowed));
    }
  }
}

TEST(Properties, ReductionPreservesSeparators) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 5 + static_cast<int>(seed % 6);
    Graph g = oracle::random_graph({n, 0.3, seed * 7 + 1});
    const Vertex s = 0, t = n - 1;
    const int k = 1 + static_cast<int>(seed % 3);
    auto r = reduce_instance(g, {s, t}, k);

    for (Vertex gad : r.undeletable) {
      EXPECT_EQ(r.gstar.degree(gad), 2);
      for (Vertex w : r.gstar.neighbors(gad)) EXPECT_NE(r.origin[w], kGadget);
    }
    // cover vertices keep exactly their original adjacency
    for (Vertex u : r.cover)
      for (Vertex v : r.cover)
        if (u < v) EXPECT_EQ(g.has_edge(u, v), r.gstar.has_edge(r.to_star(u), r.to_star(v)));

    if (g.has_edge(s, t)) continue;
    auto expected = oracle::enumerate_minimal_separators(g, s, t, k);
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(family_in_star(r, s, t, k), expected) << format_graph(g) << " k=" << k;
  }
}

TEST(Properties, MultiTerminal) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = oracle::random_graph({9, 0.3, seed + 500});
    VertexSet terms{0, 4, 8};
    auto r = reduce_instance(g, terms, 2);
    EXPECT_TRUE(terms.is_subset_of(r.cover));
    for (Vertex a : terms)
      for (Vertex b : terms) {
        if (a >= b || g.has_edge(a, b)) continue;
        auto expected = oracle::enumerate_minimal_separators(g, a, b, 2);
        std::sort(expected.begin(), expected.end());
        EXPECT_EQ(family_in_star(r, a, b, 2), expected);
      }
  }
}
