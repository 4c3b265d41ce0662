#include <gtest/gtest.h>

#include "twr/oracle.hpp"
#include "twr/separation.hpp"

using namespace twr;

namespace {

// PP labels
constexpr Vertex s = 0, a1 = 1, a2 = 2, b1 = 3, b2 = 4, t = 5;

}  // namespace

TEST(MinSeparator, Examples) {
  auto p3 = min_vertex_separator(oracle::fixture_p3().graph, {0}, {2});
  ASSERT_TRUE(p3.finite());
  EXPECT_EQ(p3.size, 1);
  EXPECT_EQ(p3.witness, VertexSet({1}));

  auto edge = min_vertex_separator(Graph(2, {{0, 1}}), {0}, {1});
  EXPECT_EQ(edge.status, SeparatorStatus::kInfinite);
  EXPECT_EQ(edge.size, SeparatorResult::kInfiniteSize);

  auto pp = min_vertex_separator(oracle::fixture_pp().graph, {s}, {t});
  ASSERT_TRUE(pp.finite());
  EXPECT_EQ(pp.witness, VertexSet({a1, b1}));
  EXPECT_EQ(pp.source_side, VertexSet({s}));
}

TEST(MinSeparator, CapAndErrors) {
  Graph q3 = oracle::fixture_q3().graph;
  EXPECT_EQ(min_vertex_separator(q3, {0}, {7}, 2).status, SeparatorStatus::kExceedsCap);
  EXPECT_EQ(min_vertex_separator(q3, {0}, {7}, 3).size, 3);
  EXPECT_THROW(min_vertex_separator(q3, {}, {7}), DomainError);
  EXPECT_THROW(min_vertex_separator(q3, {0}, {}), DomainError);
  EXPECT_EQ(min_vertex_separator(q3, {0}, {0}).status, SeparatorStatus::kInfinite);
}

TEST(MinSeparator, Disconnected) {
  auto r = min_vertex_separator(Graph(3, {{0, 1}}), {0}, {2});
  ASSERT_TRUE(r.finite());
  EXPECT_EQ(r.size, 0);
  EXPECT_TRUE(r.witness.empty());
}

TEST(IsSeparator, Examples) {
  EXPECT_TRUE(is_separator(oracle::fixture_p3().graph, {1}, {0}, {2}));
  EXPECT_FALSE(is_separator(oracle::fixture_c4().graph, {1}, {0}, {2}));
  EXPECT_FALSE(is_separator(oracle::fixture_c4().graph, {}, {1}, {1}));
  EXPECT_TRUE(is_separator(oracle::fixture_c4().graph, {1}, {1}, {1}));
}

TEST(Minimalize, Examples) {
  EXPECT_EQ(minimalize_separator(oracle::fixture_p3().graph, {1}, {0}, {2}), VertexSet({1}));
  EXPECT_EQ(minimalize_separator(oracle::fixture_c4().graph, {1, 3}, {0}, {2}), VertexSet({1, 3}));
  EXPECT_EQ(minimalize_separator(oracle::fixture_pp().graph, {a1, a2, b1}, {s}, {t}),
            VertexSet({a2, b1}));
  EXPECT_THROW(minimalize_separator(oracle::fixture_c4().graph, {1}, {0}, {2}), DomainError);
}

TEST(Containing, Examples) {
  auto p3 = min_separator_containing(oracle::fixture_p3().graph, 0, 2, 1);
  ASSERT_TRUE(p3);
  EXPECT_EQ(p3->witness, VertexSet({1}));
  auto pp = min_separator_containing(oracle::fixture_pp().graph, s, t, a2);
  ASSERT_TRUE(pp);
  EXPECT_EQ(pp->witness, VertexSet({a2, b1}));
  auto d4 = min_separator_containing(oracle::fixture_d4().graph, 0, 2, 1);
  ASSERT_TRUE(d4);
  EXPECT_EQ(d4->witness, VertexSet({1, 3}));
  EXPECT_THROW(min_separator_containing(Graph(2, {{0, 1}}), 0, 1, 0), DomainError);
}

TEST(Properties, FlowMatchesEnumeration) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 4 + static_cast<int>(seed % 7);
    Graph g = oracle::random_graph({n, 0.25 + 0.05 * static_cast<double>(seed % 5), seed});
    const Vertex u = 0, v = n - 1;
    auto r = min_vertex_separator(g, {u}, {v});
    if (g.has_edge(u, v)) {
      EXPECT_FALSE(r.finite());
      continue;
    }
    ASSERT_TRUE(r.finite());
    EXPECT_EQ(r.size, static_cast<int>(r.witness.size()));
    EXPECT_FALSE(r.witness.contains(u));
    EXPECT_FALSE(r.witness.contains(v));
    EXPECT_TRUE(oracle::separates(g, r.witness, u, v));
    EXPECT_TRUE(r.source_side.contains(u));
    EXPECT_FALSE(r.source_side.contains(v));
    EXPECT_FALSE(r.source_side.intersects(r.witness));

    auto seps = oracle::enumerate_minimal_separators(g, u, v, n);
    ASSERT_FALSE(seps.empty());
    EXPECT_EQ(static_cast<int>(seps.front().size()), r.size);

    auto capped = min_vertex_separator(g, {u}, {v}, r.size - 1);
    if (r.size > 0) EXPECT_EQ(capped.status, SeparatorStatus::kExceedsCap);

    // minimalize output is minimal
    VertexSet big = set_difference(VertexSet::range(n), {u, v});
    VertexSet m = minimalize_separator(g, big, {u}, {v});
    EXPECT_TRUE(is_separator(g, m, {u}, {v}));
    for (Vertex x : m) {
      VertexSet smaller = m;
      smaller.erase(x);
      EXPECT_FALSE(is_separator(g, smaller, {u}, {v}));
    }

    // membership test agrees with enumeration of minimum separators
    for (Vertex x = 1; x < n - 1; ++x) {
      bool on_min = false;
      for (const auto& sep : seps)
        if (static_cast<int>(sep.size()) == r.size && sep.contains(x)) on_min = true;
      auto c = min_separator_containing(g, u, v, x);
      EXPECT_EQ(c.has_value(), on_min) << format_graph(g) << " x=" << x;
      if (c) {
        EXPECT_TRUE(c->witness.contains(x));
        EXPECT_EQ(static_cast<int>(c->witness.size()), r.size);
        EXPECT_TRUE(oracle::separates(g, c->witness, u, v));
      }
    }
  }
}
