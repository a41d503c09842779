#pragma once

// planar_code streams: the header ">>planar_code<<", then per map one byte V
// followed by, for each vertex 1..V, its clockwise neighbours (1-based bytes)
// and a terminating 0. Rotation lists are written in their stored order, so
// reading and writing again reproduces the input bytes.

#include <fstream>
#include <iterator>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fourcol/errors.hpp"
#include "fourcol/planar_map.hpp"

namespace fourcol {

inline constexpr std::string_view kPlanarCodeHeader = ">>planar_code<<";

inline std::string write_planar_code(std::span<const PlanarTriangulation> maps) {
  std::string out(kPlanarCodeHeader);
  for (const auto& t : maps) {
    out.push_back(static_cast<char>(t.vertex_count()));
    for (int v = 0; v < t.vertex_count(); ++v) {
      for (int w : t.neighbours(v)) out.push_back(static_cast<char>(w + 1));
      out.push_back('\0');
    }
  }
  return out;
}

inline std::vector<PlanarTriangulation> read_planar_code(std::string_view bytes) {
  if (bytes.substr(0, kPlanarCodeHeader.size()) != kPlanarCodeHeader) {
    std::size_t at = 0;
    while (at < bytes.size() && at < kPlanarCodeHeader.size() && bytes[at] == kPlanarCodeHeader[at]) ++at;
    throw ParseError("planar_code: missing or damaged header", at);
  }
  std::vector<PlanarTriangulation> out;
  std::size_t pos = kPlanarCodeHeader.size();
  auto byte_at = [&](std::size_t p) { return static_cast<unsigned char>(bytes[p]); };
  while (pos < bytes.size()) {
    const std::size_t start = pos;
    const int n = byte_at(pos++);
    if (n == 0) throw ParseError("planar_code: map with zero vertices", start);
    Rotation rot(n);
    for (int v = 0; v < n; ++v) {
      for (;;) {
        if (pos >= bytes.size()) throw ParseError("planar_code: stream ends inside a map", pos);
        const int w = byte_at(pos);
        if (w == 0) {
          ++pos;
          break;
        }
        if (w > n) throw ParseError("planar_code: neighbour " + std::to_string(w) + " exceeds vertex count", pos);
        rot[v].push_back(w - 1);
        ++pos;
      }
    }
    try {
      out.emplace_back(std::move(rot));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("planar_code: not a triangulation: ") + e.what(), start);
    }
  }
  return out;
}

inline std::string read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace fourcol
