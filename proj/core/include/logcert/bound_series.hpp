#pragma once

#include <string>
#include <vector>

#include "logcert/rational_function.hpp"

namespace logcert {

/// x0 + x1/n + ... + xk/n^k, the shape of every ratio bound.
struct BoundSeries {
  std::vector<QuadExt> coeffs;

  int depth() const { return static_cast<int>(coeffs.size()) - 1; }
  std::int64_t radicand() const;
  /// Direct term-by-term evaluation; n != 0.
  QuadExt eval(const BigRational& n) const;
  std::string to_string() const;

  friend bool operator==(const BoundSeries&, const BoundSeries&) = default;
};

/// (x0 n^k + x1 n^(k-1) + ... + xk) / n^k
RationalFunction series_to_ratfunc(const BoundSeries& g);

}  // namespace logcert
