#pragma once

// Independent class count of sphere triangulations for small V.
//
// Enumerates every labelled graph on V vertices with 3V-6 edges, keeps the
// planar ones (Boyer-Myrvold) and counts them up to relabelling. A planar
// graph with 3V-6 edges is maximal planar, hence 3-connected for V >= 4, and
// by Whitney's theorem has one embedding up to reflection, so this matches
// the class count of the rotation-system generator without sharing any code
// with it.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace fourcol {

inline constexpr int kNaiveMaxVertices = 7;

inline long naive_class_count(int v) {
  if (v < 4 || v > kNaiveMaxVertices) throw std::invalid_argument("naive_class_count: V must lie in [4, 7]");
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b) pairs.emplace_back(a, b);
  const int m = static_cast<int>(pairs.size());
  const int edges = 3 * v - 6;

  // Edge sets are bit masks over `pairs`; the set `seen` holds every
  // relabelling of each class found so far.
  std::vector<int> index(v * v, -1);
  for (int i = 0; i < m; ++i) index[pairs[i].first * v + pairs[i].second] = index[pairs[i].second * v + pairs[i].first] = i;
  auto relabel = [&](std::uint32_t mask, const std::vector<int>& perm) {
    std::uint32_t out = 0;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1u) out |= 1u << index[perm[pairs[i].first] * v + perm[pairs[i].second]];
    return out;
  };

  std::unordered_set<std::uint32_t> seen;
  long classes = 0;
  std::vector<int> choose(m, 0);
  std::fill(choose.end() - edges, choose.end(), 1);
  do {
    std::uint32_t mask = 0;
    std::vector<int> deg(v, 0);
    for (int i = 0; i < m; ++i)
      if (choose[i]) mask |= 1u << i, ++deg[pairs[i].first], ++deg[pairs[i].second];
    if (*std::min_element(deg.begin(), deg.end()) < 3) continue;
    if (seen.count(mask)) continue;

    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS> g(v);
    for (int i = 0; i < m; ++i)
      if (choose[i]) boost::add_edge(pairs[i].first, pairs[i].second, g);
    if (!boost::boyer_myrvold_planarity_test(g)) continue;

    ++classes;
    std::vector<int> perm(v);
    std::iota(perm.begin(), perm.end(), 0);
    do seen.insert(relabel(mask, perm));
    while (std::next_permutation(perm.begin(), perm.end()));
  } while (std::next_permutation(choose.begin(), choose.end()));
  return classes;
}

}  // namespace fourcol
