#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fourcol/big_rational.hpp"

namespace fourcol {

enum class ClaimStatus { pass, fail, numeric, report };

inline std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "PASS";
    case ClaimStatus::fail: return "FAIL";
    case ClaimStatus::numeric: return "NUMERIC";
    case ClaimStatus::report: return "REPORT";
  }
  return "?";
}

/// One row of the claims ledger.
struct ClaimRecord {
  std::string claim_id;
  std::string paper_ref;
  ClaimStatus status = ClaimStatus::report;
  std::vector<std::pair<int, BigRational>> residual;
  std::string detail;

  bool residual_is_zero() const {
    for (const auto& [index, value] : residual)
      if (sgn(value) != 0) return false;
    return true;
  }

  /// Compact residual description: "none", "zero", or the count of nonzero
  /// entries with the first few of them.
  std::string residual_summary(std::size_t shown = 3) const {
    if (residual.empty()) return "none";
    std::string out;
    std::size_t nonzero = 0;
    for (const auto& [index, value] : residual) {
      if (sgn(value) == 0) continue;
      if (nonzero++ < shown) out += (out.empty() ? "" : "; ") + ("[" + std::to_string(index) + "] " + to_string(value));
    }
    if (nonzero == 0) return "zero";
    return std::to_string(nonzero) + " nonzero: " + out + (nonzero > shown ? "; ..." : "");
  }
};

/// PASS when the condition holds, FAIL otherwise.
inline ClaimStatus verdict(bool ok) { return ok ? ClaimStatus::pass : ClaimStatus::fail; }

}  // namespace fourcol
