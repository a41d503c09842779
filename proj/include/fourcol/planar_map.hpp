#pragma once

// Triangulations of the sphere as rotation systems.
//
// Each vertex stores its neighbours in clockwise order. Darts are laid out
// vertex-major, so dart offset(v) + i is the edge from v to rot(v)[i]. With
// that layout next(d) (the counterclockwise successor around the origin) is
// the previous list entry, and faces are the orbits of d -> next(twin(d)).
// Around u, clockwise neighbours v then w always bound the face (u, v, w).

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fourcol/errors.hpp"

namespace fourcol {

using Rotation = std::vector<std::vector<int>>;
using MapCode = std::vector<std::uint8_t>;

class PlanarTriangulation {
 public:
  PlanarTriangulation() = default;

  /// Builds and validates: simple graph, symmetric adjacency, every face a
  /// triangle, connected, Euler characteristic 2.
  explicit PlanarTriangulation(Rotation rot) : rot_(std::move(rot)) {
    const int n = vertex_count();
    if (n < 4) throw std::invalid_argument("triangulation needs at least 4 vertices");
    if (n > 255) throw std::invalid_argument("triangulation has more than 255 vertices");
    offset_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 0; v < n; ++v) offset_[v + 1] = offset_[v] + static_cast<int>(rot_[v].size());
    const int darts = offset_[n];
    origin_.resize(darts);
    head_.resize(darts);
    twin_.assign(darts, -1);

    std::vector<std::vector<int>> where(n, std::vector<int>(n, -1));
    for (int v = 0; v < n; ++v) {
      if (rot_[v].size() < 3) throw std::invalid_argument("vertex " + std::to_string(v) + " has degree below 3");
      for (int i = 0; i < degree(v); ++i) {
        const int w = rot_[v][i];
        if (w < 0 || w >= n) throw std::invalid_argument("neighbour index out of range");
        if (w == v) throw std::invalid_argument("loop at vertex " + std::to_string(v));
        if (where[v][w] != -1) throw std::invalid_argument("multiple edge " + std::to_string(v) + "-" + std::to_string(w));
        where[v][w] = offset_[v] + i;
        origin_[offset_[v] + i] = v;
        head_[offset_[v] + i] = w;
      }
    }
    for (int d = 0; d < darts; ++d) {
      const int back = where[head_[d]][origin_[d]];
      if (back == -1) throw std::invalid_argument("adjacency is not symmetric");
      twin_[d] = back;
    }

    std::vector<char> seen(darts, 0);
    int faces = 0;
    for (int d = 0; d < darts; ++d) {
      if (seen[d]) continue;
      int len = 0;
      for (int e = d; !seen[e]; e = face_next(e)) {
        seen[e] = 1;
        ++len;
      }
      if (len != 3) throw std::invalid_argument("face of length " + std::to_string(len));
      ++faces;
    }
    if (n - darts / 2 + faces != 2) throw std::invalid_argument("Euler characteristic is not 2");

    std::vector<int> stack{0};
    std::vector<char> reached(n, 0);
    reached[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : rot_[v])
        if (!reached[w]) reached[w] = 1, ++count, stack.push_back(w);
    }
    if (count != n) throw std::invalid_argument("graph is not connected");
  }

  int vertex_count() const noexcept { return static_cast<int>(rot_.size()); }
  int dart_count() const noexcept { return static_cast<int>(origin_.size()); }
  int edge_count() const noexcept { return dart_count() / 2; }
  int face_count() const noexcept { return dart_count() / 3; }
  int degree(int v) const { return static_cast<int>(rot_[v].size()); }

  const Rotation& rotation() const noexcept { return rot_; }
  const std::vector<int>& neighbours(int v) const { return rot_[v]; }

  int dart(int v, int i) const { return offset_[v] + i; }
  int origin(int d) const { return origin_[d]; }
  int head(int d) const { return head_[d]; }
  int twin(int d) const { return twin_[d]; }
  int position(int d) const { return d - offset_[origin_[d]]; }

  /// Counterclockwise successor around the origin.
  int next(int d) const {
    const int v = origin_[d];
    const int i = position(d);
    return offset_[v] + (i == 0 ? degree(v) - 1 : i - 1);
  }
  /// Clockwise successor around the origin.
  int prev(int d) const {
    const int v = origin_[d];
    const int i = position(d);
    return offset_[v] + (i + 1 == degree(v) ? 0 : i + 1);
  }
  int face_next(int d) const { return next(twin(d)); }

  bool adjacent(int u, int v) const {
    return std::find(rot_[u].begin(), rot_[u].end(), v) != rot_[u].end();
  }

  /// Faces as vertex triples (u, v, w) in the order traversed from their
  /// smallest dart.
  std::vector<std::array<int, 3>> faces() const;

  friend bool operator==(const PlanarTriangulation& a, const PlanarTriangulation& b) { return a.rot_ == b.rot_; }

 private:
  Rotation rot_;
  std::vector<int> offset_;
  std::vector<int> origin_;
  std::vector<int> head_;
  std::vector<int> twin_;
};

inline std::vector<std::array<int, 3>> PlanarTriangulation::faces() const {
  std::vector<std::array<int, 3>> out;
  std::vector<char> seen(dart_count(), 0);
  for (int d = 0; d < dart_count(); ++d) {
    if (seen[d]) continue;
    const int e = face_next(d);
    const int f = face_next(e);
    seen[d] = seen[e] = seen[f] = 1;
    out.push_back({origin(d), origin(e), origin(f)});
  }
  return out;
}

/// The tetrahedron with vertices 0..3.
inline PlanarTriangulation tetrahedron() { return PlanarTriangulation({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}); }

namespace detail {
inline void insert_after(std::vector<int>& list, int a, int x) {
  auto it = std::find(list.begin(), list.end(), a);
  if (it == list.end()) throw std::logic_error("insert_after: anchor not in list");
  list.insert(it + 1, x);
}
inline void erase_value(std::vector<int>& list, int x) {
  auto it = std::find(list.begin(), list.end(), x);
  if (it == list.end()) throw std::logic_error("erase_value: value not in list");
  list.erase(it);
}
}  // namespace detail

/// Adds a degree-3 vertex inside the face that contains dart d.
inline PlanarTriangulation insert_vertex(const PlanarTriangulation& t, int d) {
  const int u = t.origin(d);
  const int v = t.head(d);
  const int w = t.head(t.face_next(d));
  Rotation rot = t.rotation();
  const int x = t.vertex_count();
  detail::insert_after(rot[u], v, x);
  detail::insert_after(rot[v], w, x);
  detail::insert_after(rot[w], u, x);
  rot.push_back({u, v, w});
  return PlanarTriangulation(std::move(rot));
}

/// Darts where inserting a vertex gives distinct faces (one dart per face).
inline std::vector<int> face_darts(const PlanarTriangulation& t) {
  std::vector<int> out;
  std::vector<char> seen(t.dart_count(), 0);
  for (int d = 0; d < t.dart_count(); ++d) {
    if (seen[d]) continue;
    out.push_back(d);
    for (int e = d; !seen[e]; e = t.face_next(e)) seen[e] = 1;
  }
  return out;
}

/// The two vertices opposite the edge of dart d: a follows head(d) clockwise
/// around origin(d), b follows origin(d) clockwise around head(d).
inline std::pair<int, int> flip_partners(const PlanarTriangulation& t, int d) {
  return {t.head(t.prev(d)), t.head(t.prev(t.twin(d)))};
}

/// Whether the edge of dart d can be flipped without creating a multiple edge.
inline bool flippable(const PlanarTriangulation& t, int d) {
  const auto [a, b] = flip_partners(t, d);
  return a != b && !t.adjacent(a, b) && t.degree(t.origin(d)) > 3 && t.degree(t.head(d)) > 3;
}

/// Replaces the edge of dart d by the other diagonal of its two faces.
inline PlanarTriangulation flip(const PlanarTriangulation& t, int d) {
  if (!flippable(t, d)) throw std::invalid_argument("flip: edge cannot be flipped in a simple triangulation");
  const int u = t.origin(d);
  const int v = t.head(d);
  const auto [a, b] = flip_partners(t, d);
  Rotation rot = t.rotation();
  detail::erase_value(rot[u], v);
  detail::erase_value(rot[v], u);
  detail::insert_after(rot[a], u, b);
  detail::insert_after(rot[b], v, a);
  return PlanarTriangulation(std::move(rot));
}

// ---------------------------------------------------------------------------
// Canonical codes
//
// A breadth-first relabelling started at a dart, walking rotations either
// clockwise (mirror = false) or counterclockwise. The root vertex gets label
// 1 and is scanned from the root dart; every other vertex is scanned from the
// dart pointing back to the vertex that discovered it. For each scanned vertex
// the labels of its neighbours are written, then a 0. The code has length
// 2E + V and determines the map up to orientation-preserving isomorphism
// (mirror codes describe the reflected map).

namespace detail {

/// Writes the code from (root, mirror) into out. When bound is given the
/// walk stops as soon as the code is known to exceed it. Returns -1, 0, 1 for
/// less than, equal to, greater than the bound (0 if there is no bound).
inline int bfs_code(const PlanarTriangulation& t, int root, bool mirror, MapCode& out, const MapCode* bound,
                    std::vector<int>& label, std::vector<int>& start) {
  const int n = t.vertex_count();
  label.assign(n, 0);
  start.assign(n, -1);
  out.clear();
  std::vector<int> order;
  order.reserve(n);
  int next_label = 1;
  label[t.origin(root)] = next_label++;
  start[t.origin(root)] = root;
  order.push_back(t.origin(root));
  int cmp = 0;
  auto emit = [&](int value) {
    const auto byte = static_cast<std::uint8_t>(value);
    if (bound && cmp == 0) {
      const std::uint8_t ref = (*bound)[out.size()];
      if (byte < ref) cmp = -1;
      else if (byte > ref) cmp = 1;
    }
    out.push_back(byte);
    return cmp <= 0;
  };
  for (std::size_t q = 0; q < order.size(); ++q) {
    const int v = order[q];
    int d = start[v];
    for (int k = 0; k < t.degree(v); ++k) {
      const int w = t.head(d);
      if (label[w] == 0) {
        label[w] = next_label++;
        start[w] = t.twin(d);
        order.push_back(w);
      }
      if (!emit(label[w])) return 1;
      d = mirror ? t.next(d) : t.prev(d);
    }
    if (!emit(0)) return 1;
  }
  return cmp;
}

}  // namespace detail

/// Code of the map read from one root dart in one orientation.
inline MapCode code_from(const PlanarTriangulation& t, int root, bool mirror) {
  MapCode out;
  std::vector<int> label, start;
  detail::bfs_code(t, root, mirror, out, nullptr, label, start);
  return out;
}

struct MapSymmetry {
  MapCode canonical;   // minimum over all darts and both orientations
  int aut_plus = 0;    // orientation-preserving automorphisms
  bool chiral = false; // not isomorphic to its mirror image
  int root = 0;        // a dart realising the canonical code
  bool mirror = false; // and its orientation
};

inline MapSymmetry symmetry(const PlanarTriangulation& t) {
  std::vector<int> label, start;
  MapCode scratch;
  auto min_over_darts = [&](bool mirror, int& ties, int& arg) {
    MapCode best;
    ties = 0;
    for (int d = 0; d < t.dart_count(); ++d) {
      const int c = detail::bfs_code(t, d, mirror, scratch, best.empty() ? nullptr : &best, label, start);
      if (best.empty() || c < 0) {
        best = scratch;
        ties = 1;
        arg = d;
      } else if (c == 0) {
        ++ties;
      }
    }
    return best;
  };
  MapSymmetry s;
  int ties_cw = 0, ties_ccw = 0, arg_cw = 0, arg_ccw = 0;
  MapCode cw = min_over_darts(false, ties_cw, arg_cw);
  MapCode ccw = min_over_darts(true, ties_ccw, arg_ccw);
  if (ties_cw != ties_ccw) throw ConsistencyFault("symmetry: a map and its mirror have different automorphism counts");
  if (t.dart_count() % ties_cw != 0) throw ConsistencyFault("symmetry: automorphism count does not divide the dart count");
  s.aut_plus = ties_cw;
  s.chiral = cw != ccw;
  if (ccw < cw) {
    s.canonical = std::move(ccw);
    s.root = arg_ccw;
    s.mirror = true;
  } else {
    s.canonical = std::move(cw);
    s.root = arg_cw;
  }
  return s;
}

inline MapCode canonical_code(const PlanarTriangulation& t) { return symmetry(t).canonical; }

/// Isomorphism allowing reflection.
inline bool isomorphic(const PlanarTriangulation& a, const PlanarTriangulation& b) {
  return a.vertex_count() == b.vertex_count() && canonical_code(a) == canonical_code(b);
}

/// Rotation system read back from a code (vertex labels become 0-based).
inline PlanarTriangulation from_code(const MapCode& code) {
  Rotation rot;
  rot.emplace_back();
  for (std::uint8_t c : code) {
    if (c == 0) rot.emplace_back();
    else rot.back().push_back(c - 1);
  }
  if (!rot.back().empty()) throw std::invalid_argument("from_code: code does not end with 0");
  rot.pop_back();
  return PlanarTriangulation(std::move(rot));
}

/// Relabelled copy in canonical form.
inline PlanarTriangulation canonical_form(const PlanarTriangulation& t) { return from_code(canonical_code(t)); }

/// Number of rootings: distinct (dart, orientation) flags up to isomorphism,
/// 4E / |Aut| with reflections allowed. For a reflexible map this is
/// 2E / |Aut+|; a chiral map and its mirror are one class and contribute twice
/// that.
inline long rooted_count(const MapSymmetry& s, int darts) {
  return static_cast<long>(s.chiral ? 2 : 1) * darts / s.aut_plus;
}
inline long rooted_count(const PlanarTriangulation& t) { return rooted_count(symmetry(t), t.dart_count()); }

}  // namespace fourcol
