#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "fourcol/census.hpp"
#include "fourcol/generate.hpp"
#include "fourcol/naive_census.hpp"
#include "lab_oracles.hpp"

using namespace fourcol;

namespace {

PlanarTriangulation bipyramid() { return insert_vertex(tetrahedron(), 0); }

PlanarTriangulation octahedron() {
  // poles 0 and 5 around the square 1 2 3 4
  return PlanarTriangulation({{1, 2, 3, 4}, {0, 4, 5, 2}, {0, 1, 5, 3}, {0, 2, 5, 4}, {0, 3, 5, 1}, {1, 4, 3, 2}});
}

const std::map<int, std::vector<GeneratedMap>>& corpus() {
  static const auto all = generate_all(9);
  return all;
}

}  // namespace

TEST(PlanarMap, TetrahedronCounts) {
  const auto t = tetrahedron();
  EXPECT_EQ(t.vertex_count(), 4);
  EXPECT_EQ(t.edge_count(), 6);
  EXPECT_EQ(t.face_count(), 4);
  for (int d = 0; d < t.dart_count(); ++d) {
    EXPECT_EQ(t.twin(t.twin(d)), d);
    EXPECT_EQ(t.face_next(t.face_next(t.face_next(d))), d);
    EXPECT_EQ(t.prev(t.next(d)), d);
  }
}

TEST(PlanarMap, RejectsInvalidRotations) {
  EXPECT_THROW(PlanarTriangulation({{1, 2}, {0, 2}, {0, 1}}), std::invalid_argument);
  // K4 with one rotation reversed: faces are no longer triangles
  EXPECT_THROW(PlanarTriangulation({{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 2, 1}}), std::invalid_argument);
  EXPECT_THROW(PlanarTriangulation({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 2}}), std::invalid_argument);
  EXPECT_THROW(PlanarTriangulation({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 3}}), std::invalid_argument);
}

TEST(PlanarMap, OctahedronIsValid) {
  const auto o = octahedron();
  EXPECT_EQ(o.edge_count(), 12);
  EXPECT_EQ(o.face_count(), 8);
}

TEST(PlanarMap, InsertionAndFlip) {
  const auto b = bipyramid();
  EXPECT_EQ(b.vertex_count(), 5);
  EXPECT_EQ(b.face_count(), 6);
  // polar edges cannot flip (the opposite equatorial vertices are adjacent);
  // the three equatorial edges can, and give the bipyramid back
  int flippable_edges = 0;
  for (int d = 0; d < b.dart_count(); ++d)
    if (d < b.twin(d) && flippable(b, d)) {
      ++flippable_edges;
      EXPECT_TRUE(isomorphic(flip(b, d), b));
    }
  EXPECT_EQ(flippable_edges, 3);

  const auto o = octahedron();
  const int d = o.dart(1, 0);  // edge 1-0
  ASSERT_TRUE(flippable(o, d));
  const auto f = flip(o, d);
  EXPECT_FALSE(f.adjacent(0, 1));
  EXPECT_EQ(f.edge_count(), 12);
  EXPECT_FALSE(isomorphic(f, o));
}

TEST(Canonical, RelabellingInvariance) {
  std::mt19937 rng(7);
  for (const auto& [v, list] : corpus()) {
    for (const auto& g : list) {
      std::vector<int> perm(v);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      Rotation rot(v);
      for (int i = 0; i < v; ++i) {
        auto list_i = g.map.neighbours(i);
        std::rotate(list_i.begin(), list_i.begin() + rng() % list_i.size(), list_i.end());
        for (int& w : list_i) w = perm[w];
        rot[perm[i]] = list_i;
      }
      EXPECT_EQ(canonical_code(PlanarTriangulation(rot)), g.symmetry.canonical);
      // mirror image: reverse every rotation
      for (auto& l : rot) std::reverse(l.begin(), l.end());
      EXPECT_EQ(canonical_code(PlanarTriangulation(rot)), g.symmetry.canonical);
    }
  }
}

TEST(Canonical, CodeShapeAndRoundTrip) {
  for (const auto& [v, list] : corpus())
    for (const auto& g : list) {
      EXPECT_EQ(static_cast<int>(g.symmetry.canonical.size()), g.map.dart_count() + v);
      EXPECT_EQ(code_from(g.map, 0, false), g.symmetry.canonical);
      EXPECT_EQ(from_code(g.symmetry.canonical), g.map);
    }
}

TEST(Symmetry, KnownGroups) {
  const auto k4 = symmetry(tetrahedron());
  EXPECT_EQ(k4.aut_plus, 12);
  EXPECT_FALSE(k4.chiral);
  EXPECT_EQ(rooted_count(tetrahedron()), 1);

  const auto b = symmetry(bipyramid());
  EXPECT_EQ(b.aut_plus, 6);
  EXPECT_EQ(rooted_count(bipyramid()), 3);

  EXPECT_EQ(symmetry(octahedron()).aut_plus, 24);
  EXPECT_EQ(rooted_count(octahedron()), 1);
}

TEST(Symmetry, MatchesAutomorphismSearch) {
  for (const auto& [v, list] : corpus())
    for (const auto& g : list) EXPECT_EQ(g.symmetry.aut_plus, oracle::aut_plus_by_search(g.map));
}

TEST(Symmetry, BurnsideMatchesDirectEnumeration) {
  for (const auto& [v, list] : corpus()) {
    if (v > 8) continue;
    for (const auto& g : list) EXPECT_EQ(rooted_count(g.symmetry, g.map.dart_count()), oracle::rooted_by_enumeration(g.map));
  }
}

TEST(Symmetry, ChiralMapsExist) {
  int chiral = 0;
  for (const auto& g : corpus().at(9)) chiral += g.symmetry.chiral;
  EXPECT_GT(chiral, 0);
}

TEST(Generate, ClassCounts) {
  const std::vector<long> expected{1, 1, 2, 5, 14, 50};
  for (int v = 4; v <= 9; ++v) EXPECT_EQ(static_cast<long>(corpus().at(v).size()), expected[v - 4]) << "V=" << v;
}

TEST(Generate, OutputIsSortedAndValid) {
  for (const auto& [v, list] : corpus()) {
    for (std::size_t i = 1; i < list.size(); ++i) EXPECT_LT(list[i - 1].symmetry.canonical, list[i].symmetry.canonical);
    for (const auto& g : list) {
      EXPECT_EQ(g.map.vertex_count(), v);
      EXPECT_EQ(g.map.vertex_count() - g.map.edge_count() + g.map.face_count(), 2);
      EXPECT_EQ(g.map.face_count() % 2, 0);
      EXPECT_EQ(2 * g.map.edge_count(), 3 * g.map.face_count());
      EXPECT_EQ(2 * v, g.map.face_count() + 4);
    }
  }
}

TEST(Generate, DeterministicAcrossThreadCounts) {
  const auto a = generate(8, 1);
  const auto b = generate(8, 3);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].symmetry.canonical, b[i].symmetry.canonical);
}

TEST(Generate, RangeChecked) {
  EXPECT_THROW(generate(3), std::invalid_argument);
  EXPECT_THROW(generate(13), std::invalid_argument);
}

TEST(Generate, AgreesWithNaiveGenerator) {
  for (int v = 4; v <= 7; ++v) EXPECT_EQ(naive_class_count(v), static_cast<long>(corpus().at(v).size())) << "V=" << v;
  EXPECT_THROW(naive_class_count(8), std::invalid_argument);
}

TEST(Generate, RootedTotalsFollowG) {
  for (const auto& [v, list] : corpus()) {
    long total = 0;
    for (const auto& g : list) total += rooted_count(g.symmetry, g.map.dart_count());
    EXPECT_EQ(BigRational(total), g_coeff(v - 3)) << "V=" << v;
  }
}
