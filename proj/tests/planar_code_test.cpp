#include <gtest/gtest.h>

#include "fourcol/generate.hpp"
#include "fourcol/planar_code.hpp"

using namespace fourcol;

TEST(PlanarCode, TetrahedronBytes) {
  const std::vector<PlanarTriangulation> maps{tetrahedron()};
  const std::string bytes = write_planar_code(maps);
  const std::string expected = std::string(">>planar_code<<") + std::string("\x04\x02\x03\x04\x00\x01\x04\x03\x00\x01\x02\x04\x00\x01\x03\x02\x00", 17);
  EXPECT_EQ(bytes, expected);
  const auto back = read_planar_code(bytes);
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0], tetrahedron());
}

TEST(PlanarCode, RoundTripCorpus) {
  std::vector<PlanarTriangulation> maps;
  for (const auto& [v, list] : generate_all(8))
    for (const auto& g : list) maps.push_back(g.map);
  const std::string bytes = write_planar_code(maps);
  const auto back = read_planar_code(bytes);
  ASSERT_EQ(back.size(), maps.size());
  EXPECT_EQ(back, maps);
  EXPECT_EQ(write_planar_code(back), bytes);
}

TEST(PlanarCode, EmptyStream) {
  EXPECT_TRUE(read_planar_code(kPlanarCodeHeader).empty());
  EXPECT_EQ(write_planar_code({}), std::string(kPlanarCodeHeader));
}

TEST(PlanarCode, Errors) {
  const std::string good = write_planar_code(std::vector<PlanarTriangulation>{tetrahedron()});
  try {
    read_planar_code(good.substr(0, good.size() - 3));
    FAIL() << "truncated stream accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), good.size() - 3);
  }
  try {
    read_planar_code(">>planar_cod");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 12u);
  }
  std::string bad = good;
  bad[16] = 9;  // neighbour beyond V
  try {
    read_planar_code(bad);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 16u);
  }
  std::string not_triangulation = good;
  std::swap(not_triangulation[17], not_triangulation[18]);  // reverse part of vertex 1
  EXPECT_THROW(read_planar_code(not_triangulation), ParseError);
  EXPECT_THROW(read_planar_code(std::string(kPlanarCodeHeader) + '\0'), ParseError);
}
