#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "logcert/recurrence.hpp"

namespace logcert {

/// b_i = a_{i-1} a_{i+1} - a_i^2 for interior indices; the result starts at
/// input offset + 1 and has two fewer entries. Throws DomainError when the
/// input has fewer than three values.
SequenceTable l_operator(const SequenceTable& values);

/// Result of scanning one level j of the L-operator tower.
///
/// Indices follow the classical convention: the level-j condition "at n"
/// is log-convexity of L^j at its entry n + j, which involves the original
/// terms a_{n-1} .. a_{n+1+2j}. For j = 1 this is
/// (a_n a_{n+2} - a_{n+1}^2)^2 < (a_{n-1} a_{n+1} - a_n^2)(a_{n+1} a_{n+3} - a_{n+2}^2).
struct ConvexityReport {
  int level = 0;
  /// Smallest n from which the strict condition holds through the horizon;
  /// horizon + 1 when it fails at the horizon itself.
  std::int64_t onset_index = 0;
  /// (level, n) pairs where the strict condition fails.
  std::vector<std::pair<int, std::int64_t>> violations;
  std::int64_t first_index = 0;
  /// Last n scanned at this level.
  std::int64_t horizon = 0;
  /// L^level has no positive entry; deeper levels are not scanned.
  bool degenerate = false;

  bool holds_from(std::int64_t n) const { return !degenerate && onset_index <= n; }
};

/// Scans levels j = 0..k-1 with exact comparisons. Stops after a degenerate
/// level (it is reported, deeper ones are omitted). Throws DomainError when
/// k < 1 or the table is too short for level k-1.
std::vector<ConvexityReport> check_k_log_convex(const SequenceTable& values, int k);

/// Strict condition at level-0 index n: a_{n-1}, a_n, a_{n+1} > 0 and
/// a_{n-1} a_{n+1} > a_n^2.
bool strictly_log_convex_at(const SequenceTable& t, std::int64_t n);

}  // namespace logcert
