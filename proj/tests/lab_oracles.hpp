#pragma once

#include <set>
#include <vector>

#include "fourcol/planar_map.hpp"

namespace fourcol::oracle {

/// Orientation-preserving automorphisms found by trying every image of dart 0
/// and propagating along next and twin.
inline int aut_plus_by_search(const PlanarTriangulation& t) {
  const int darts = t.dart_count();
  int count = 0;
  for (int target = 0; target < darts; ++target) {
    std::vector<int> image(darts, -1);
    std::vector<int> stack{0};
    image[0] = target;
    bool ok = true;
    while (ok && !stack.empty()) {
      const int d = stack.back();
      stack.pop_back();
      const std::pair<int, int> moves[] = {{t.next(d), t.next(image[d])}, {t.twin(d), t.twin(image[d])}};
      for (auto [from, to] : moves) {
        if (image[from] == -1) {
          image[from] = to;
          stack.push_back(from);
        } else if (image[from] != to) {
          ok = false;
        }
      }
    }
    if (ok) ++count;
  }
  return count;
}

/// Rooted maps counted directly: distinct codes over every (dart, orientation)
/// root. Two roots give the same code exactly when an isomorphism carries one
/// to the other.
inline long rooted_by_enumeration(const PlanarTriangulation& t) {
  std::set<MapCode> codes;
  for (int d = 0; d < t.dart_count(); ++d) {
    codes.insert(code_from(t, d, false));
    codes.insert(code_from(t, d, true));
  }
  return static_cast<long>(codes.size());
}

}  // namespace fourcol::oracle
