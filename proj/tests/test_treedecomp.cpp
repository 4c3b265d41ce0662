#include <gtest/gtest.h>

#include <algorithm>

#include "twr/oracle.hpp"
#include "twr/treedecomp.hpp"

using namespace twr;

namespace {

Graph clique(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

int count_kind(const NiceDecomposition& nd, NiceKind kind) {
  return static_cast<int>(std::count_if(nd.nodes.begin(), nd.nodes.end(),
                                        [&](const NiceNode& x) { return x.kind == kind; }));
}

// Structural checks on a nice decomposition of g.
void expect_nice(const Graph& g, const NiceDecomposition& nd) {
  ASSERT_FALSE(nd.nodes.empty());
  EXPECT_EQ(nd.root, static_cast<int>(nd.nodes.size()) - 1);
  EXPECT_TRUE(nd.nodes[nd.root].bag.empty());
  std::vector<int> forgotten(g.num_vertices(), 0);
  for (std::size_t i = 0; i < nd.nodes.size(); ++i) {
    const NiceNode& x = nd.nodes[i];
    for (int c : x.children) EXPECT_LT(c, static_cast<int>(i));
    switch (x.kind) {
      case NiceKind::kLeaf:
        EXPECT_TRUE(x.children.empty());
        EXPECT_TRUE(x.bag.empty());
        break;
      case NiceKind::kIntroduce: {
        ASSERT_EQ(x.children.size(), 1u);
        VertexSet expect = nd.nodes[x.children[0]].bag;
        EXPECT_FALSE(expect.contains(x.vertex));
        expect.insert(x.vertex);
        EXPECT_EQ(x.bag, expect);
        break;
      }
      case NiceKind::kForget: {
        ASSERT_EQ(x.children.size(), 1u);
        VertexSet expect = nd.nodes[x.children[0]].bag;
        EXPECT_TRUE(expect.contains(x.vertex));
        expect.erase(x.vertex);
        EXPECT_EQ(x.bag, expect);
        ++forgotten[x.vertex];
        break;
      }
      case NiceKind::kJoin:
        ASSERT_EQ(x.children.size(), 2u);
        EXPECT_EQ(nd.nodes[x.children[0]].bag, x.bag);
        EXPECT_EQ(nd.nodes[x.children[1]].bag, x.bag);
        break;
    }
  }
  for (int f : forgotten) EXPECT_EQ(f, 1);
}

}  // namespace

TEST(Decompose, Examples) {
  EXPECT_EQ(decompose(clique(4)).width(), 3);
  EXPECT_EQ(decompose(oracle::fixture_c4().graph).width(), 2);
  Graph tree(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}});
  EXPECT_EQ(decompose(tree).width(), 1);
  for (const auto& f : oracle::all_fixtures())
    EXPECT_TRUE(validate_decomposition(f.graph, decompose(f.graph))) << f.name;
  EXPECT_EQ(decompose(Graph(0)).num_bags(), 0);
}

TEST(Validate, Rejects) {
  Graph p3 = oracle::fixture_p3().graph;
  TreeDecomposition good{{{0, 1}, {1, 2}}, {{1}, {0}}};
  EXPECT_TRUE(validate_decomposition(p3, good));

  TreeDecomposition no_edge{{{0, 1}, {2}}, {{1}, {0}}};
  EXPECT_FALSE(validate_decomposition(p3, no_edge));

  // vertex 1 in bags 0 and 2 but not in the middle one
  TreeDecomposition split{{{0, 1}, {0}, {1, 2}}, {{1}, {0, 2}, {1}}};
  EXPECT_FALSE(validate_decomposition(p3, split));

  TreeDecomposition missing{{{0, 1}}, {{}}};
  EXPECT_FALSE(validate_decomposition(p3, missing));
}

TEST(ExactTreewidth, Small) {
  EXPECT_EQ(exact_treewidth(clique(5)).width, 4);
  EXPECT_EQ(exact_treewidth(oracle::fixture_q3().graph).width, 3);
  EXPECT_EQ(exact_treewidth(Graph(3)).width, 0);
  EXPECT_THROW(exact_treewidth(Graph(21)), DomainError);
}

TEST(Nice, SingleBag) {
  TreeDecomposition td{{{0, 1, 2, 3}}, {{}}};
  auto nd = make_nice(td);
  expect_nice(clique(4), nd);
  EXPECT_EQ(count_kind(nd, NiceKind::kLeaf), 1);
  EXPECT_EQ(count_kind(nd, NiceKind::kIntroduce), 4);
  EXPECT_EQ(count_kind(nd, NiceKind::kJoin), 0);
  EXPECT_EQ(nd.nodes[4].bag.size(), 4u);
  EXPECT_EQ(nd.width(), 3);
}

TEST(Nice, PathOfBags) {
  Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  TreeDecomposition td{{{0, 1}, {1, 2}, {2, 3}}, {{1}, {0, 2}, {1}}};
  auto nd = make_nice(td);
  expect_nice(p4, nd);
  EXPECT_EQ(nd.width(), 1);
  EXPECT_EQ(count_kind(nd, NiceKind::kJoin), 0);
}

TEST(Nice, DegreeThreeNeedsJoin) {
  Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  TreeDecomposition td{{{0}, {0, 1}, {0, 2}, {0, 3}}, {{1, 2, 3}, {0}, {0}, {0}}};
  auto nd = make_nice(td, 0);
  expect_nice(star, nd);
  EXPECT_GE(count_kind(nd, NiceKind::kJoin), 1);
}

TEST(Nice, Errors) {
  TreeDecomposition cyclic{{{0}, {0}, {0}}, {{1, 2}, {0, 2}, {0, 1}}};
  EXPECT_THROW(make_nice(cyclic), DomainError);
  TreeDecomposition td{{{0}}, {{}}};
  EXPECT_THROW(make_nice(td, 3), DomainError);
}

TEST(TdFormat, RoundTrip) {
  Graph q3 = oracle::fixture_q3().graph;
  auto td = decompose(q3);
  std::string text = format_td(td, 8);
  EXPECT_EQ(text.rfind("s td ", 0), 0u);
  auto back = parse_td(text);
  EXPECT_EQ(back.bags, td.bags);
  EXPECT_TRUE(validate_decomposition(q3, back));
  EXPECT_THROW(parse_td("b 1 1\n"), ParseError);
  EXPECT_THROW(parse_td("s td 1 1 1\nb 2 1\n"), ParseError);
  EXPECT_THROW(parse_td("s td 1 1 1\nb 1 4\n"), ParseError);
}

TEST(Properties, RandomDecompositions) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const int n = 2 + static_cast<int>(seed % 11);
    Graph g = oracle::random_graph({n, 0.2 + 0.1 * static_cast<double>(seed % 5), seed});
    auto td = decompose(g);
    ASSERT_TRUE(validate_decomposition(g, td)) << format_graph(g);
    auto exact = exact_treewidth(g);
    EXPECT_GE(td.width(), exact.width);
    if (n <= 12 && td.width() > n / 2) EXPECT_EQ(td.width(), exact.width);
    auto from_exact = decomposition_from_order(g, exact.order);
    EXPECT_TRUE(validate_decomposition(g, from_exact));
    EXPECT_EQ(from_exact.width(), exact.width);
    for (int root = 0; root < td.num_bags(); root += 3) {
      auto nd = make_nice(td, root);
      expect_nice(g, nd);
      EXPECT_EQ(nd.width(), td.width());
    }
  }
}
