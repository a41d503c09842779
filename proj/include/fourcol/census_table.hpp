#pragma once

// Rooted counts of generated triangulations, split by connectivity and by
// membership in the split family, aligned against the g coefficients.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fourcol/big_rational.hpp"
#include "fourcol/census.hpp"
#include "fourcol/errors.hpp"
#include "fourcol/generate.hpp"
#include "fourcol/separation.hpp"

namespace fourcol {

struct CensusRow {
  int V = 0;
  long classes = 0;
  long rooted_total = 0;
  long rooted_4connected = 0;
  long rooted_in_Q = 0;
  std::optional<int> aligned_n;  // n with g_n = rooted_total

  BigRational q_fraction() const { return make_rational(rooted_in_Q, rooted_total); }
};

struct CensusTable {
  std::vector<CensusRow> rows;
  std::optional<int> offset;  // k with rooted_total(V) = g_{V-k} on every row
};

inline CensusRow census_row(int v, const std::vector<GeneratedMap>& classes) {
  CensusRow row;
  row.V = v;
  row.classes = static_cast<long>(classes.size());
  for (const auto& g : classes) {
    const auto& t = g.map;
    if (t.face_count() != 2 * (v - 2) || t.edge_count() != 3 * (v - 2))
      throw ConsistencyFault("census: Euler data wrong for a generated map");
    const long rooted = rooted_count(g.symmetry, t.dart_count());
    row.rooted_total += rooted;
    if (is_4connected(t)) row.rooted_4connected += rooted;
    if (q_member(t)) row.rooted_in_Q += rooted;
  }
  return row;
}

/// Finds the single offset k with rooted_total(V) = g_{V-k} for every row.
inline std::optional<int> alignment_offset(std::vector<CensusRow>& rows) {
  const TruncatedSeries g = g_series(40);
  for (auto& row : rows) {
    row.aligned_n.reset();
    for (int n = 1; n <= g.order(); ++n)
      if (g[n] == BigRational(row.rooted_total)) {
        row.aligned_n = n;
        break;
      }
  }
  if (rows.empty() || !rows.front().aligned_n) return std::nullopt;
  const int k = rows.front().V - *rows.front().aligned_n;
  for (const auto& row : rows) {
    const int n = row.V - k;
    if (n < 1 || n > g.order() || g[n] != BigRational(row.rooted_total)) return std::nullopt;
  }
  return k;
}

inline CensusTable census_table(int vmax, int threads = 1) {
  if (vmax < kMinVertices || vmax > kMaxVertices) throw std::invalid_argument("census_table: vmax must lie in [4, 12]");
  CensusTable table;
  for (const auto& [v, classes] : generate_all(vmax, threads)) table.rows.push_back(census_row(v, classes));
  table.offset = alignment_offset(table.rows);
  return table;
}

}  // namespace fourcol
