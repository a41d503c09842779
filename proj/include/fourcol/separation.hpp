#pragma once

// Separating triangles and what can be done with them: splitting a
// triangulation into two closures, the gluing identity for chromatic
// polynomials, membership in the split family, and the 4-connected core.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fourcol/chromatic.hpp"
#include "fourcol/claim.hpp"
#include "fourcol/errors.hpp"
#include "fourcol/planar_map.hpp"

namespace fourcol {

using Triangle = std::array<int, 3>;  // sorted vertex labels

inline Triangle sorted_triangle(int a, int b, int c) {
  Triangle t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

inline std::set<Triangle> facial_triangles(const PlanarTriangulation& t) {
  std::set<Triangle> out;
  for (const auto& f : t.faces()) out.insert(sorted_triangle(f[0], f[1], f[2]));
  return out;
}

/// 3-cycles that do not bound a face, in lexicographic order. On the sphere
/// every such cycle has vertices on both sides.
inline std::vector<Triangle> separating_3cycles(const PlanarTriangulation& t) {
  const auto facial = facial_triangles(t);
  std::vector<Triangle> out;
  const int n = t.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b : t.neighbours(a)) {
      if (b <= a) continue;
      for (int c : t.neighbours(b)) {
        if (c <= b || !t.adjacent(a, c)) continue;
        const Triangle tri{a, b, c};
        if (!facial.count(tri)) out.push_back(tri);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_4connected(const PlanarTriangulation& t) { return separating_3cycles(t).empty(); }

/// A closure: one side of a separating triangle together with the triangle,
/// re-triangulated so that the triangle becomes a face.
struct Closure {
  PlanarTriangulation map;
  std::vector<int> vertices;  // original label of each closure vertex
};

struct Split {
  Triangle cycle;
  Closure inner;  // the side with fewer vertices (ties: the side holding the smallest label)
  Closure outer;
};

namespace detail {

/// Vertex sets of the components of T minus the triangle, as bit masks.
inline std::vector<std::uint64_t> sides(const PlanarTriangulation& t, const Triangle& c) {
  const int n = t.vertex_count();
  if (n > 64) throw std::invalid_argument("separation: at most 64 vertices");
  std::uint64_t removed = 0;
  for (int v : c) removed |= std::uint64_t{1} << v;
  std::uint64_t seen = removed;
  std::vector<std::uint64_t> out;
  for (int s = 0; s < n; ++s) {
    if (seen >> s & 1u) continue;
    std::uint64_t comp = std::uint64_t{1} << s;
    std::vector<int> stack{s};
    seen |= comp;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : t.neighbours(v))
        if (!(seen >> w & 1u)) {
          seen |= std::uint64_t{1} << w;
          comp |= std::uint64_t{1} << w;
          stack.push_back(w);
        }
    }
    out.push_back(comp);
  }
  return out;
}

inline Closure closure(const PlanarTriangulation& t, const Triangle& c, std::uint64_t side) {
  const int n = t.vertex_count();
  std::vector<int> keep;
  for (int v = 0; v < n; ++v)
    if ((side >> v & 1u) || v == c[0] || v == c[1] || v == c[2]) keep.push_back(v);
  std::vector<int> index(n, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);

  Rotation rot(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    const int v = keep[i];
    const auto& nb = t.neighbours(v);
    const int deg = static_cast<int>(nb.size());
    if (side >> v & 1u) {
      for (int w : nb) rot[i].push_back(index[w]);
      continue;
    }
    // Cycle vertex: keep the two other cycle vertices and the arc between
    // them that enters the side.
    std::vector<int> at;
    for (int k = 0; k < deg; ++k)
      if (nb[k] == c[0] || nb[k] == c[1] || nb[k] == c[2]) at.push_back(k);
    if (at.size() != 2) throw ConsistencyFault("closure: cycle vertex does not see the other two");
    for (int from : at) {
      const int first = (from + 1) % deg;
      if (!(side >> nb[first] & 1u)) continue;
      for (int k = from;; k = (k + 1) % deg) {
        rot[i].push_back(index[nb[k]]);
        if (k != from && index[nb[k]] >= 0 && !(side >> nb[k] & 1u)) break;
      }
      break;
    }
    if (rot[i].empty()) throw ConsistencyFault("closure: no arc of a cycle vertex enters the side");
  }
  return {PlanarTriangulation(std::move(rot)), std::move(keep)};
}

inline void require_separating(const PlanarTriangulation& t, const Triangle& c) {
  const auto all = separating_3cycles(t);
  if (!std::binary_search(all.begin(), all.end(), sorted_triangle(c[0], c[1], c[2])))
    throw std::invalid_argument("triangle is not a separating 3-cycle of this map");
}

}  // namespace detail

/// Splits T along a separating triangle into two closures, each keeping a copy
/// of the triangle.
inline Split split(const PlanarTriangulation& t, const Triangle& cycle) {
  const Triangle c = sorted_triangle(cycle[0], cycle[1], cycle[2]);
  detail::require_separating(t, c);
  const auto parts = detail::sides(t, c);
  if (parts.size() != 2) throw ConsistencyFault("split: separating triangle does not leave exactly two sides");
  auto a = parts[0], b = parts[1];
  // parts[0] holds the smallest non-cycle label, so it wins ties.
  if (std::popcount(b) < std::popcount(a)) std::swap(a, b);
  return {c, detail::closure(t, c, a), detail::closure(t, c, b)};
}

/// Both sides of lambda(lambda-1)(lambda-2) P(T) = P(L) P(T-L) as a claim row.
inline ClaimRecord glue_check(const PlanarTriangulation& t, const Triangle& cycle, ChromaticCache* cache = nullptr) {
  const Split s = split(t, cycle);
  const ChromaticPolynomial lhs = ChromaticPolynomial::falling(3) * chromatic_poly(t, cache);
  const ChromaticPolynomial rhs = chromatic_poly(s.inner.map, cache) * chromatic_poly(s.outer.map, cache);
  ClaimRecord r;
  r.claim_id = "glue-identity";
  r.paper_ref = "λ(λ-1)(λ-2)·P(T,λ) = P(L,λ)·P(T-L,λ)";
  const ChromaticPolynomial diff = lhs - rhs;
  for (int k = 0; k <= diff.degree(); ++k) r.residual.emplace_back(k, BigRational(diff[k]));
  r.status = verdict(lhs == rhs);
  r.detail = "cycle (" + std::to_string(s.cycle[0]) + "," + std::to_string(s.cycle[1]) + "," +
             std::to_string(s.cycle[2]) + "); lhs " + lhs.to_string() + "; rhs " + rhs.to_string();
  return r;
}

/// A split witnessing membership in the split family, if there is one: a
/// separating triangle whose two closures are simple triangulations with at
/// least 4 vertices each. V(T) = V(T1) + V(T2) - 3 is checked on the way.
inline std::optional<Split> q_witness(const PlanarTriangulation& t) {
  for (const Triangle& c : separating_3cycles(t)) {
    Split s = split(t, c);
    const int v1 = s.inner.map.vertex_count(), v2 = s.outer.map.vertex_count();
    if (v1 + v2 - 3 != t.vertex_count())
      throw ConsistencyFault("q_member: closure vertex counts do not add up to V + 3");
    if (v1 >= 4 && v2 >= 4) return s;
  }
  return std::nullopt;
}

inline bool q_member(const PlanarTriangulation& t) { return q_witness(t).has_value(); }

/// True iff some separating triangle of T has a closure isomorphic to L.
/// Without a distinguished outer face both sides are candidates.
inline bool contains_copy(const PlanarTriangulation& t, const PlanarTriangulation& l) {
  const MapCode target = canonical_code(l);
  for (const Triangle& c : separating_3cycles(t)) {
    const Split s = split(t, c);
    if (s.inner.map.vertex_count() == l.vertex_count() && canonical_code(s.inner.map) == target) return true;
    if (s.outer.map.vertex_count() == l.vertex_count() && canonical_code(s.outer.map) == target) return true;
  }
  return false;
}

struct Filling {
  Triangle cycle;
  Closure piece;  // interior plus the triangle
};

struct CoreDecomposition {
  Closure core;  // H, with original labels
  std::vector<Filling> fillings;
};

namespace detail {

inline bool same_cyclic(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  auto it = std::find(b.begin(), b.end(), a[0]);
  if (it == b.end()) return false;
  std::vector<int> r(it, b.end());
  r.insert(r.end(), b.begin(), it);
  return r == a;
}

/// T rebuilt from its core and fillings, in original labels.
inline Rotation reassemble(int n, const CoreDecomposition& d) {
  Rotation rot(n);
  const auto& h = d.core;
  for (int i = 0; i < h.map.vertex_count(); ++i)
    for (int w : h.map.neighbours(i)) rot[h.vertices[i]].push_back(h.vertices[w]);
  for (const Filling& f : d.fillings) {
    const auto& p = f.piece;
    for (int i = 0; i < p.map.vertex_count(); ++i) {
      const int v = p.vertices[i];
      std::vector<int> list;
      for (int w : p.map.neighbours(i)) list.push_back(p.vertices[w]);
      const bool on_cycle = v == f.cycle[0] || v == f.cycle[1] || v == f.cycle[2];
      if (!on_cycle) {
        rot[v] = std::move(list);
        continue;
      }
      // list is [x, arc..., y]; in the core y follows x.
      auto at = std::find(rot[v].begin(), rot[v].end(), list.front());
      if (at == rot[v].end()) throw ConsistencyFault("core_decompose: cycle vertex lost its neighbour");
      rot[v].insert(at + 1, list.begin() + 1, list.end() - 1);
    }
  }
  return rot;
}

}  // namespace detail

/// Replaces the interior of every maximal separating triangle by a face. The
/// outside of a triangle is the side holding the face of dart 0.
inline CoreDecomposition core_decompose(const PlanarTriangulation& t) {
  const int n = t.vertex_count();
  const int r0 = t.origin(0), r1 = t.head(0), r2 = t.head(t.face_next(0));

  struct Candidate {
    Triangle cycle;
    std::uint64_t interior;
  };
  std::vector<Candidate> all;
  for (const Triangle& c : separating_3cycles(t)) {
    const auto parts = detail::sides(t, c);
    if (parts.size() != 2) throw ConsistencyFault("core_decompose: separating triangle without two sides");
    std::uint64_t outside = 0;
    for (int r : {r0, r1, r2})
      if (r != c[0] && r != c[1] && r != c[2]) outside = (parts[0] >> r & 1u) ? parts[0] : parts[1];
    all.push_back({c, outside == parts[0] ? parts[1] : parts[0]});
  }

  std::vector<Candidate> maximal;
  for (const auto& a : all) {
    bool inside_other = false;
    for (const auto& b : all)
      if (a.interior != b.interior && (a.interior & ~b.interior) == 0) inside_other = true;
    if (!inside_other) maximal.push_back(a);
  }

  std::uint64_t removed = 0;
  CoreDecomposition out{{}, {}};
  for (const auto& m : maximal) {
    if (removed & m.interior) throw ConsistencyFault("core_decompose: maximal interiors overlap");
    removed |= m.interior;
    out.fillings.push_back({m.cycle, detail::closure(t, m.cycle, m.interior)});
  }

  std::vector<int> keep;
  for (int v = 0; v < n; ++v)
    if (!(removed >> v & 1u)) keep.push_back(v);
  std::vector<int> index(n, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
  Rotation rot(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (int w : t.neighbours(keep[i]))
      if (index[w] >= 0) rot[i].push_back(index[w]);
  out.core = {PlanarTriangulation(std::move(rot)), std::move(keep)};

  if (!is_4connected(out.core.map)) throw ConsistencyFault("core_decompose: core still has a separating triangle");
  const Rotation back = detail::reassemble(n, out);
  for (int v = 0; v < n; ++v)
    if (!detail::same_cyclic(t.neighbours(v), back[v]))
      throw ConsistencyFault("core_decompose: fillings do not reconstruct the map at vertex " + std::to_string(v));
  return out;
}

}  // namespace fourcol
