#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "logcert/bound_series.hpp"
#include "logcert/positivity.hpp"
#include "logcert/recurrence.hpp"

namespace logcert {

/// Coefficients of the cubic a3 x^3 + a2 x^2 + a1 x + a0 whose positivity at
/// x = S_n / S_{n-1} is equivalent to strict 2-log-convexity at n, together
/// with the discriminant delta = 4 a2^2 - 12 a1 a3 of its derivative.
struct CriterionCoeffs {
  RationalFunction a3;
  RationalFunction a2;
  RationalFunction a1;
  RationalFunction a0;
  RationalFunction delta;

  /// a3 x^3 + a2 x^2 + a1 x + a0 for a rational function x(n).
  RationalFunction cubic_at(const RationalFunction& x) const;
};

CriterionCoeffs theorem_coeffs(const Recurrence& rec);

/// Both sides of
///   (S_{n-1}S_{n+1} - S_n^2)(S_{n+1}S_{n+3} - S_{n+2}^2) - (S_n S_{n+2} - S_{n+1}^2)^2
///     = S_{n+1} (a3 S_n^3 + a2 S_n^2 S_{n-1} + a1 S_n S_{n-1}^2 + a0 S_{n-1}^3)
/// with S_{n+1..n+3} expanded by the recurrence from s_prev = S_{n-1}, s_cur = S_n.
struct IdentitySides {
  BigRational left;
  BigRational right;
};
IdentitySides cubic_residual_identity(const Recurrence& rec, std::int64_t n, const BigRational& s_prev,
                                      const BigRational& s_cur);

/// Sign of c(n) on [N, inf): positive, negative, or zero when neither strict
/// sign can be certified (sign change or vanishing).
Sign certified_sign(const RationalFunction& r, std::int64_t N);

enum class LowerBoundMode {
  b_only,      // c > 0: S_n / S_{n-1} >= b(n) by positivity
  b_plus_c,    // c < 0 and S nondecreasing: S_n / S_{n-1} >= b(n) + c(n)
};
const char* to_string(LowerBoundMode m);

struct LowerBoundPlan {
  RationalFunction f;
  LowerBoundMode mode = LowerBoundMode::b_only;
  /// b_plus_c: index k with S_k >= S_{k-1} checked exactly (N - 1).
  std::int64_t monotone_base_index = 0;
};

/// f = b when c > 0 on [N, inf); f = b + c when c < 0 there, provided
/// f(n) > 1 on [N, inf) and S_{N-1} >= S_{N-2}. Throws DomainError when c
/// changes sign or the side condition fails.
LowerBoundPlan default_lower_bound(const Recurrence& rec, std::int64_t N);

enum class CheckStatus { holds, fails, inconclusive, error };
const char* to_string(CheckStatus s);

/// One entry of a certificate. Field names mirror the JSON report.
struct CheckOutcome {
  std::string name;
  CheckStatus status = CheckStatus::holds;
  std::optional<std::string> witness;
  std::optional<BigInt> bound_m;
  std::string details;
};

enum class UpperBoundRule {
  one_step,  // c < 0: g(n+1) - (b(n+1) + c(n+1)/g(n)) > 0 for n >= N
  two_step,  // c > 0: g(n) - (b(n) + c(n)/(b(n-1) + c(n-1)/g(n-2))) > 0 for n >= N+2
};

/// g(n+1) - (b(n+1) + c(n+1)/g(n))
RationalFunction one_step_condition(const Recurrence& rec, const RationalFunction& g);
/// g(n) - (b(n) + c(n)/(b(n-1) + c(n-1)/g(n-2)))
RationalFunction two_step_condition(const Recurrence& rec, const RationalFunction& g);
/// b(n-1) + c(n-1)/g(n-2)
RationalFunction two_step_inner(const Recurrence& rec, const RationalFunction& g);

struct UpperBoundVerification {
  UpperBoundRule rule = UpperBoundRule::one_step;
  CheckStatus status = CheckStatus::holds;
  /// Sign certification of the step condition (valid when reached).
  PositivityResult condition;
  RationalFunction expression;
  std::optional<std::string> witness;
  std::string details;

  bool holds() const { return status == CheckStatus::holds; }
};

/// Certifies S_n / S_{n-1} < g(n) for all n >= N by the one-step (c < 0) or
/// two-step (c > 0) induction, including the exact base ratios.
UpperBoundVerification verify_upper_bound(const Recurrence& rec, const BoundSeries& g, std::int64_t N);

enum class CertificateVerdict { certified, refuted, inconclusive };
const char* to_string(CertificateVerdict v);

struct CertificateReport {
  std::string seq_name;
  std::int64_t n_start = 0;
  /// First index n of the claim; base cases run over [claim_from, N - 1].
  std::int64_t claim_from = 0;
  std::int64_t horizon = 0;
  RationalFunction f;
  LowerBoundMode mode = LowerBoundMode::b_only;
  BoundSeries g;
  std::vector<CheckOutcome> checks;
  CertificateVerdict verdict = CertificateVerdict::inconclusive;

  const CheckOutcome* find(std::string_view name) const;
};

/// Check names, in execution order.
inline constexpr const char* kCertificateChecks[] = {"a3-negative", "delta-positive", "C1-lower",
                                                     "C1-upper",    "C1-separation",  "C2-R1",
                                                     "C2-R2",       "C3",             "base-cases"};

/// Runs every condition of the 2-log-convexity criterion for n >= N plus
/// exact enumeration of the indices below N; values up to horizon are
/// generated to discharge positivity and log-convexity. The claim starts at
/// claim_from (default offset + 1, the first index where the condition is
/// defined); later starts drop finitely many initial terms.
CertificateReport verify_certificate(const Recurrence& rec, const LowerBoundPlan& plan, const BoundSeries& g,
                                     std::int64_t N, std::int64_t horizon,
                                     std::optional<std::int64_t> claim_from = std::nullopt);

/// Strict 2-log-convexity at n from exact values:
/// (S_{n-1}S_{n+1} - S_n^2)(S_{n+1}S_{n+3} - S_{n+2}^2) vs (S_n S_{n+2} - S_{n+1}^2)^2.
Sign two_log_convex_margin(const SequenceTable& t, std::int64_t n);

}  // namespace logcert
