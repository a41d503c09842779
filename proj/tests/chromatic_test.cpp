#include <gtest/gtest.h>

#include <random>

#include "fourcol/chromatic.hpp"
#include "fourcol/generate.hpp"

using namespace fourcol;

namespace {

PlanarTriangulation glued_tetrahedra() { return insert_vertex(tetrahedron(), 0); }

ChromaticPolynomial lambda_minus(long a) { return ChromaticPolynomial().times_linear(a); }

}  // namespace

TEST(ChromaticPolynomial, Arithmetic) {
  const auto p = ChromaticPolynomial::falling(4);
  EXPECT_EQ(p.degree(), 4);
  EXPECT_EQ(p.to_string(), "λ^4 - 6λ^3 + 11λ^2 - 6λ");
  EXPECT_EQ(p.evaluate(4), 24);
  EXPECT_EQ(p.evaluate(3), 0);
  EXPECT_EQ(ChromaticPolynomial({BigInt(0)}).to_string(), "0");
  EXPECT_EQ((p - p).degree(), 0);
}

TEST(ChromaticPoly, Tetrahedron) {
  const auto p = chromatic_poly(tetrahedron());
  EXPECT_EQ(p, lambda_minus(0) * lambda_minus(1) * lambda_minus(2) * lambda_minus(3));
}

TEST(ChromaticPoly, GluedTetrahedra) {
  const auto p = chromatic_poly(glued_tetrahedra());
  EXPECT_EQ(p, ChromaticPolynomial::falling(4).times_linear(3));
  EXPECT_EQ(p.evaluate(4), 24);
}

TEST(ChromaticPoly, SmallGraphs) {
  SimpleGraph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  EXPECT_EQ(chromatic_poly(path), lambda_minus(0) * lambda_minus(1) * lambda_minus(1));
  SimpleGraph c4(4);
  for (int i = 0; i < 4; ++i) c4.add_edge(i, (i + 1) % 4);
  // (λ-1)^4 + (λ-1)
  EXPECT_EQ(chromatic_poly(c4).evaluate(3), 18);
  EXPECT_EQ(chromatic_poly(SimpleGraph(3)).to_string(), "λ^3");
  EXPECT_EQ(chromatic_poly(SimpleGraph(0)).to_string(), "1");
}

TEST(ChromaticPoly, StructuralInvariants) {
  ChromaticCache cache;
  for (const auto& [v, list] : generate_all(9)) {
    for (const auto& g : list) {
      const auto p = chromatic_poly(g.map, &cache);
      ASSERT_EQ(p.degree(), v);
      EXPECT_EQ(p[v], 1);
      EXPECT_EQ(p[0], 0);
      EXPECT_EQ(p[v - 1], -g.map.edge_count());
      for (int k = 1; k <= v; ++k) EXPECT_GT(p[k] * ((v - k) % 2 == 0 ? 1 : -1), 0) << "V=" << v << " k=" << k;
    }
  }
}

TEST(ChromaticPoly, MatchesExhaustiveCounts) {
  ChromaticCache cache;
  for (const auto& [v, list] : generate_all(8))
    for (const auto& g : list) {
      const auto graph = graph_of(g.map);
      const auto p = chromatic_poly(graph, &cache);
      for (int k = 2; k <= 5; ++k) EXPECT_EQ(p.evaluate(k), count_colourings(graph, k)) << "V=" << v << " k=" << k;
    }
}

TEST(ChromaticPoly, DeletionContractionOnRandomEdges) {
  std::mt19937 rng(11);
  for (const auto& [v, list] : generate_all(8))
    for (const auto& g : list) {
      const auto graph = graph_of(g.map);
      const auto edges = graph.edges();
      const auto [a, b] = edges[rng() % edges.size()];
      EXPECT_EQ(chromatic_poly(graph), chromatic_poly(graph.without_edge(a, b)) - chromatic_poly(graph.contracted(a, b)));
    }
}

TEST(ChromaticPoly, CacheDoesNotChangeResults) {
  ChromaticCache shared;
  for (const auto& g : generate(8)) EXPECT_EQ(chromatic_poly(g.map, &shared), chromatic_poly(g.map));
  EXPECT_GT(shared.size(), 0u);
}

TEST(SimpleGraph, Contraction) {
  SimpleGraph tri(3);
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(0, 2);
  const auto c = tri.contracted(0, 2);
  EXPECT_EQ(c.vertex_count(), 2);
  EXPECT_EQ(c.edge_count(), 1);
  EXPECT_THROW(tri.add_edge(1, 1), std::invalid_argument);
}

TEST(Colouring, ExhaustiveCountsSmallCases) {
  EXPECT_EQ(count_colourings(graph_of(tetrahedron()), 4), 24);
  EXPECT_EQ(count_colourings(graph_of(tetrahedron()), 3), 0);
  EXPECT_EQ(count_colourings(SimpleGraph(2), 3), 9);
}

TEST(FourColourable, AllSmallTriangulations) {
  ChromaticCache cache;
  for (const auto& [v, list] : generate_all(10))
    for (const auto& g : list) {
      EXPECT_TRUE(four_colourable(g.map, &cache)) << "V=" << v;
      const auto colouring = find_four_colouring(graph_of(g.map));
      ASSERT_TRUE(colouring.has_value());
      for (int a = 0; a < v; ++a)
        for (int b : g.map.neighbours(a)) EXPECT_NE((*colouring)[a], (*colouring)[b]);
    }
}

TEST(FourColourable, NegativeCase) {
  SimpleGraph k5(5);
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) k5.add_edge(a, b);
  EXPECT_FALSE(four_colourable(k5));
}
