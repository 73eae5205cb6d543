#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "logcert/bound_series.hpp"
#include "logcert/certify.hpp"
#include "logcert/recurrence.hpp"

namespace logcert {

/// (b + sqrt(b^2 + 4c)) / 2 for the limits b, c of b(n), c(n).
/// Throws DomainError for unbounded coefficients or b^2 + 4c <= 0.
QuadExt asymptotic_root(const Recurrence& rec);

/// Both candidate tests used by the search.
struct CandidateOutcome {
  bool upper_holds = false;
  bool c3_holds = false;
  std::optional<std::string> upper_witness;
  std::optional<std::string> c3_witness;
  std::string upper_details;

  bool both() const { return upper_holds && c3_holds; }
  bool exactly_one() const { return upper_holds != c3_holds; }
};

/// verify_upper_bound and positivity of a3 g^3 + a2 g^2 + a1 g + a0 on [N, inf).
CandidateOutcome test_candidate(const Recurrence& rec, const BoundSeries& g, std::int64_t N,
                                const CriterionCoeffs& coeffs);

struct SearchStep {
  int depth = 0;
  std::int64_t n_start = 0;
  QuadExt coefficient;
  /// Leading-in-n coefficient of the cleared condition numerator, as a
  /// polynomial in the unknown x (empty at depth 0). Normalized so that the
  /// condition's full denominator has leading coefficient 1.
  Poly equation;
  BoundSeries candidate;
  CandidateOutcome outcome;
};

struct CoefficientAdjustment {
  int index = 0;
  QuadExt original;
  QuadExt replacement;
};

struct SearchTrace {
  QuadExt x0;
  UpperBoundRule rule = UpperBoundRule::one_step;
  std::vector<std::int64_t> n_tried;
  std::int64_t n_start = 0;
  std::vector<SearchStep> steps;
  std::vector<CoefficientAdjustment> adjustments;
  std::optional<BoundSeries> result;
  /// Why the search stopped without a result.
  std::string failure;
  /// Set when the leading coefficient cannot be solved for x.
  std::optional<Poly> offending_equation;
};

struct SearchOptions {
  /// Starting indices tried in turn after the depth budget is exhausted;
  /// values of the form N, 2N, 5N, 10N are appended automatically, capped.
  bool use_ladder = true;
  std::int64_t ladder_cap = 1000;
  bool adjust = true;
};

/// Iterated leading-coefficient solving for g = x0 + x1/n + ... + xk/n^k.
SearchTrace search_upper_bound(const Recurrence& rec, std::int64_t N, int max_depth, const CriterionCoeffs& coeffs,
                               const SearchOptions& options = {});

/// Solves one depth: the linear equation for the coefficient of 1/n^depth
/// given the fixed lower-order coefficients. value is empty when the
/// equation is not linear in x.
struct DepthSolution {
  Poly equation;
  std::optional<QuadExt> value;
};
DepthSolution solve_next_coefficient(const Recurrence& rec, const BoundSeries& known, UpperBoundRule rule);

struct AdjustOutcome {
  BoundSeries g;
  std::optional<CoefficientAdjustment> change;
};

/// Tries replacing the rational part, the irrational part, or the whole of
/// the deepest coefficient (then the one before it) by multiples
/// 2, 1/2, 3/2, 3, 1/4, 4 and by v +- |v|/2. Returns the first series passing
/// both tests, g itself when it already does, or nothing.
std::optional<AdjustOutcome> adjust_coefficients(const BoundSeries& g, const Recurrence& rec, std::int64_t N,
                                                 const CriterionCoeffs& coeffs);

/// The multipliers tried by adjust_coefficients, in order.
const std::vector<BigRational>& adjustment_multipliers();

}  // namespace logcert
