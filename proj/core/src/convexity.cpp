#include "logcert/convexity.hpp"

#include <algorithm>

#include "logcert/errors.hpp"

namespace logcert {

SequenceTable l_operator(const SequenceTable& values) {
  if (values.values.size() < 3) throw DomainError("l_operator needs at least three values");
  SequenceTable out;
  out.offset = values.offset + 1;
  out.source = SequenceTable::Source::derived;
  const auto& a = values.values;
  out.values.reserve(a.size() - 2);
  for (std::size_t i = 1; i + 1 < a.size(); ++i) {
    BigRational b = a[i - 1] * a[i + 1] - a[i] * a[i];
    out.values.push_back(std::move(b));
  }
  return out;
}

bool strictly_log_convex_at(const SequenceTable& t, std::int64_t n) {
  const BigRational& prev = t.at(n - 1);
  const BigRational& cur = t.at(n);
  const BigRational& next = t.at(n + 1);
  if (sgn(prev) <= 0 || sgn(cur) <= 0 || sgn(next) <= 0) return false;
  return prev * next > cur * cur;
}

std::vector<ConvexityReport> check_k_log_convex(const SequenceTable& values, int k) {
  if (k < 1) throw DomainError("check_k_log_convex needs k >= 1");
  if (values.values.size() < static_cast<std::size_t>(2 * k + 1)) {
    throw DomainError("insufficient data: level " + std::to_string(k - 1) + " needs at least " +
                      std::to_string(2 * k + 1) + " values");
  }
  std::vector<ConvexityReport> reports;
  SequenceTable level_table = values;
  for (int j = 0; j < k; ++j) {
    if (j > 0) level_table = l_operator(level_table);
    ConvexityReport rep;
    rep.level = j;
    // Interior entries m of L^j map to n = m - j.
    const std::int64_t first_m = level_table.offset + 1;
    const std::int64_t last_m = level_table.last_index() - 1;
    rep.first_index = first_m - j;
    rep.horizon = last_m - j;
    rep.degenerate = std::none_of(level_table.values.begin(), level_table.values.end(),
                                  [](const BigRational& v) { return sgn(v) > 0; });
    if (rep.degenerate) {
      rep.onset_index = rep.horizon + 1;
      reports.push_back(std::move(rep));
      break;
    }
    std::int64_t last_violation = rep.first_index - 1;
    for (std::int64_t m = first_m; m <= last_m; ++m) {
      if (!strictly_log_convex_at(level_table, m)) {
        rep.violations.emplace_back(j, m - j);
        last_violation = m - j;
      }
    }
    rep.onset_index = last_violation + 1;
    reports.push_back(std::move(rep));
  }
  return reports;
}

}  // namespace logcert
