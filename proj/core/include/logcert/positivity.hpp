#pragma once

#include <optional>
#include <string>

#include "logcert/rational_function.hpp"

namespace logcert {

/// Outcome of deciding "p(n) > 0 for every integer n >= N".
struct PositivityResult {
  enum class Verdict { holds, fails };

  Verdict verdict = Verdict::holds;
  /// Smallest integer n >= N found with a non-positive value (fails only).
  std::optional<BigInt> witness;
  std::optional<QuadExt> witness_value;
  /// Crossover bound M: beyond it the sign is the leading sign.
  BigInt checked_up_to;

  bool holds() const { return verdict == Verdict::holds; }
};

const char* to_string(PositivityResult::Verdict v);

/// max(N, 1 + ceil(max_i |a_i| / |a_deg|)), rounded outward from rational
/// brackets of the coefficients; every real root of p is below it.
BigInt crossover_bound(const Poly& p, const BigInt& N);

/// Smallest integer n in [lo, hi] with p(n) <= 0, if any.
///
/// Sub-ranges are excluded wholesale when Descartes' rule (applied to the
/// Moebius image of the range) shows p has no root inside; short ranges are
/// evaluated point by point.
std::optional<BigInt> first_nonpositive(const Poly& p, const BigInt& lo, const BigInt& hi);

/// Decides strict positivity of p on the integers n >= N (N >= 1).
///
/// Throws DomainError for the zero polynomial or N < 1.
PositivityResult poly_positive_from(const Poly& p, const BigInt& N);

/// Decides strict positivity of r on the integers n >= N.
///
/// The denominator must keep a strict sign on [N, inf); otherwise a
/// SingularityError carrying the offending index is thrown.
PositivityResult ratfunc_positive_from(const RationalFunction& r, const BigInt& N);

}  // namespace logcert
