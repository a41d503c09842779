#pragma once

// Isomorphism classes of simple sphere triangulations on V vertices.
//
// Seeds come from inserting a degree-3 vertex into every face of every
// (V-1)-vertex class. Not every triangulation has a degree-3 vertex (the
// icosahedron does not), so the seeds are closed under edge flips; any two
// triangulations with the same vertex count are flip-connected, hence the
// closure is the whole class list. Duplicates are removed by canonical code
// (reflection included) and the result is sorted by code.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

#include "fourcol/planar_map.hpp"

namespace fourcol {

inline constexpr int kMinVertices = 4;
inline constexpr int kMaxVertices = 12;

struct GeneratedMap {
  PlanarTriangulation map;  // canonical form
  MapSymmetry symmetry;
};

namespace detail {

inline int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Canonical codes of a batch of maps; work is split into contiguous chunks
/// so the result does not depend on the thread count.
inline std::vector<MapCode> canonical_codes(const std::vector<PlanarTriangulation>& maps, int threads) {
  std::vector<MapCode> out(maps.size());
  const int workers = std::max(1, std::min<int>(resolve_threads(threads), static_cast<int>(maps.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < maps.size(); ++i) out[i] = canonical_code(maps[i]);
    return out;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (maps.size() + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk, hi = std::min(maps.size(), lo + chunk);
    pool.emplace_back([&, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) out[i] = canonical_code(maps[i]);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

inline std::vector<MapCode> generate_codes(int v, const std::vector<MapCode>& smaller, int threads) {
  std::set<MapCode> found;
  std::vector<MapCode> frontier;
  auto absorb = [&](const std::vector<PlanarTriangulation>& batch) {
    for (MapCode& c : canonical_codes(batch, threads))
      if (found.insert(c).second) frontier.push_back(std::move(c));
  };

  if (v == kMinVertices) {
    absorb({tetrahedron()});
  } else {
    std::vector<PlanarTriangulation> seeds;
    for (const MapCode& code : smaller) {
      const PlanarTriangulation t = from_code(code);
      for (int d : face_darts(t)) seeds.push_back(insert_vertex(t, d));
    }
    absorb(seeds);
  }

  while (!frontier.empty()) {
    std::vector<MapCode> layer;
    layer.swap(frontier);
    std::vector<PlanarTriangulation> batch;
    for (const MapCode& code : layer) {
      const PlanarTriangulation t = from_code(code);
      for (int d = 0; d < t.dart_count(); ++d)
        if (d < t.twin(d) && flippable(t, d)) batch.push_back(flip(t, d));
    }
    absorb(batch);
  }
  return {found.begin(), found.end()};
}

}  // namespace detail

/// Canonical codes for all class lists from V = 4 up to vmax.
inline std::map<int, std::vector<MapCode>> generate_codes_upto(int vmax, int threads = 1) {
  if (vmax < kMinVertices || vmax > kMaxVertices)
    throw std::invalid_argument("generate: vertex count must lie in [4, 12]");
  std::map<int, std::vector<MapCode>> out;
  for (int v = kMinVertices; v <= vmax; ++v)
    out[v] = detail::generate_codes(v, v == kMinVertices ? std::vector<MapCode>{} : out[v - 1], threads);
  return out;
}

/// One canonical representative per class, in code order.
inline std::vector<GeneratedMap> generate(int v, int threads = 1) {
  if (v < kMinVertices || v > kMaxVertices) throw std::invalid_argument("generate: vertex count must lie in [4, 12]");
  const auto codes = generate_codes_upto(v, threads);
  std::vector<GeneratedMap> out;
  for (const MapCode& code : codes.at(v)) {
    PlanarTriangulation t = from_code(code);
    MapSymmetry s = symmetry(t);
    out.push_back({std::move(t), std::move(s)});
  }
  return out;
}

/// Classes for every V in [4, vmax].
inline std::map<int, std::vector<GeneratedMap>> generate_all(int vmax, int threads = 1) {
  std::map<int, std::vector<GeneratedMap>> out;
  for (auto& [v, codes] : generate_codes_upto(vmax, threads)) {
    auto& list = out[v];
    for (const MapCode& code : codes) {
      PlanarTriangulation t = from_code(code);
      MapSymmetry s = symmetry(t);
      list.push_back({std::move(t), std::move(s)});
    }
  }
  return out;
}

}  // namespace fourcol
