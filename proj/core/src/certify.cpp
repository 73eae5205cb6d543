#include "logcert/certify.hpp"

#include <functional>

#include "logcert/convexity.hpp"
#include "logcert/errors.hpp"
#include "logcert/parallel.hpp"

namespace logcert {

const char* to_string(LowerBoundMode m) { return m == LowerBoundMode::b_only ? "b-only" : "b-plus-c"; }

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::holds:
      return "holds";
    case CheckStatus::fails:
      return "fails";
    case CheckStatus::inconclusive:
      return "inconclusive";
    case CheckStatus::error:
      return "error";
  }
  return "?";
}

const char* to_string(CertificateVerdict v) {
  switch (v) {
    case CertificateVerdict::certified:
      return "certified";
    case CertificateVerdict::refuted:
      return "refuted";
    case CertificateVerdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

const CheckOutcome* CertificateReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

RationalFunction CriterionCoeffs::cubic_at(const RationalFunction& x) const {
  // Horner: ((a3 x + a2) x + a1) x + a0
  return ((a3 * x + a2) * x + a1) * x + a0;
}

CriterionCoeffs theorem_coeffs(const Recurrence& rec) {
  const RationalFunction b1 = rec.b.shift(1);
  const RationalFunction b2 = rec.b.shift(2);
  const RationalFunction b3 = rec.b.shift(3);
  const RationalFunction c1 = rec.c.shift(1);
  const RationalFunction c2 = rec.c.shift(2);
  const RationalFunction c3 = rec.c.shift(3);
  const RationalFunction b1sq = b1 * b1;
  const RationalFunction b2sq = b2 * b2;

  CriterionCoeffs k;
  k.a3 = 2 * b2 * b1sq + 2 * b1 * c2 - b1sq * b1 - b1 * b2 * b3 - b3 * c2 - c3 * b1;
  k.a2 = 4 * b1 * b2 * c1 + 2 * c1 * c2 + b1sq * b2 * b3 + b1 * b3 * c2 + b1sq * c3 - 3 * c1 * b1sq -
         b3 * b2 * c1 - c3 * c1 - b2sq * b1sq - 2 * b2 * b1 * c2 - c2 * c2;
  k.a1 = -c1 * (2 * b2 * c2 - 2 * b2 * c1 - 2 * b3 * b2 * b1 - b3 * c2 - 2 * c3 * b1 + 3 * c1 * b1 +
                2 * b2sq * b1);
  k.a0 = -(c1 * c1) * (c1 - b2 * b3 - c3 + b2sq);
  k.delta = 4 * k.a2 * k.a2 - 12 * k.a1 * k.a3;
  return k;
}

IdentitySides cubic_residual_identity(const Recurrence& rec, std::int64_t n, const BigRational& s_prev,
                                      const BigRational& s_cur) {
  for (std::int64_t m = n + 1; m <= n + 3; ++m) {
    if (rec.singularities.count(m) != 0) {
      throw SingularityError("recurrence coefficient undefined", std::to_string(m));
    }
  }
  auto b = [&](std::int64_t m) { return eval_rational(rec.b, m); };
  auto c = [&](std::int64_t m) { return eval_rational(rec.c, m); };
  const BigRational& s0 = s_prev;  // S_{n-1}
  const BigRational& s1 = s_cur;   // S_n
  const BigRational s2 = b(n + 1) * s1 + c(n + 1) * s0;
  const BigRational s3 = b(n + 2) * s2 + c(n + 2) * s1;
  const BigRational s4 = b(n + 3) * s3 + c(n + 3) * s2;

  IdentitySides out;
  const BigRational l0 = s0 * s2 - s1 * s1;
  const BigRational l1 = s1 * s3 - s2 * s2;
  const BigRational l2 = s2 * s4 - s3 * s3;
  out.left = l0 * l2 - l1 * l1;

  const CriterionCoeffs k = theorem_coeffs(rec);
  const QuadExt at(static_cast<long>(n));
  auto rat = [](const QuadExt& v) { return v.rat(); };
  const BigRational a3 = rat(k.a3.eval(at));
  const BigRational a2 = rat(k.a2.eval(at));
  const BigRational a1 = rat(k.a1.eval(at));
  const BigRational a0 = rat(k.a0.eval(at));
  out.right = s2 * (a3 * s1 * s1 * s1 + a2 * s1 * s1 * s0 + a1 * s1 * s0 * s0 + a0 * s0 * s0 * s0);
  return out;
}

Sign certified_sign(const RationalFunction& r, std::int64_t N) {
  try {
    if (ratfunc_positive_from(r, N).holds()) return Sign::positive;
    if (ratfunc_positive_from(-r, N).holds()) return Sign::negative;
  } catch (const SingularityError&) {
  }
  return Sign::zero;
}

namespace {

SequenceTable table_through(const Recurrence& rec, std::int64_t last) {
  const std::int64_t count = last - rec.offset + 1;
  return generate(rec, static_cast<std::size_t>(std::max<std::int64_t>(count, 2)));
}

// Sign certification wrapped as a report entry.
CheckOutcome positivity_check(std::string name, const RationalFunction& r, std::int64_t N, std::string what) {
  CheckOutcome out;
  out.name = std::move(name);
  try {
    const PositivityResult res = ratfunc_positive_from(r, N);
    out.bound_m = res.checked_up_to;
    if (res.holds()) {
      out.status = CheckStatus::holds;
      out.details = what + " certified for n >= " + std::to_string(N);
    } else {
      out.status = CheckStatus::fails;
      out.witness = res.witness->get_str();
      out.details = what + " fails at n = " + res.witness->get_str() + " (value " +
                    res.witness_value->to_string() + ")";
    }
  } catch (const SingularityError& e) {
    out.status = CheckStatus::error;
    out.witness = e.index();
    out.details = what + ": " + e.what();
  }
  return out;
}

BigRational ratio_at(const SequenceTable& t, std::int64_t n) { return t.at(n) / t.at(n - 1); }

}  // namespace

LowerBoundPlan default_lower_bound(const Recurrence& rec, std::int64_t N) {
  if (N < rec.offset + 2) throw DomainError("lower bound needs N >= offset + 2");
  const Sign sc = certified_sign(rec.c, N);
  LowerBoundPlan plan;
  if (sc == Sign::positive) {
    plan.f = rec.b;
    plan.mode = LowerBoundMode::b_only;
    plan.monotone_base_index = N - 1;
    return plan;
  }
  if (sc == Sign::negative) {
    plan.f = rec.b + rec.c;
    plan.mode = LowerBoundMode::b_plus_c;
    plan.monotone_base_index = N - 1;
    if (!ratfunc_positive_from(plan.f - 1, N).holds()) {
      throw DomainError("b + c > 1 cannot be certified on [N, inf)");
    }
    const SequenceTable t = table_through(rec, N - 1);
    if (t.at(N - 1) < t.at(N - 2)) throw DomainError("S_{N-1} >= S_{N-2} fails");
    return plan;
  }
  throw DomainError("c has no certified constant sign on [" + std::to_string(N) + ", inf)");
}

RationalFunction one_step_condition(const Recurrence& rec, const RationalFunction& g) {
  return g.shift(1) - (rec.b.shift(1) + rec.c.shift(1) / g);
}

RationalFunction two_step_inner(const Recurrence& rec, const RationalFunction& g) {
  return rec.b.shift(-1) + rec.c.shift(-1) / g.shift(-2);
}

RationalFunction two_step_condition(const Recurrence& rec, const RationalFunction& g) {
  return g - (rec.b + rec.c / two_step_inner(rec, g));
}

UpperBoundVerification verify_upper_bound(const Recurrence& rec, const BoundSeries& g, std::int64_t N) {
  UpperBoundVerification out;
  auto fail = [&](CheckStatus status, std::string details, std::optional<std::string> witness = std::nullopt) {
    out.status = status;
    out.details = std::move(details);
    out.witness = std::move(witness);
    return out;
  };
  if (N < rec.offset + 2) return fail(CheckStatus::error, "N must be at least offset + 2");

  const RationalFunction gr = series_to_ratfunc(g);
  try {
    const PositivityResult gpos = ratfunc_positive_from(gr, N);
    if (!gpos.holds()) return fail(CheckStatus::fails, "g(n) > 0 fails", gpos.witness->get_str());
  } catch (const SingularityError& e) {
    return fail(CheckStatus::error, e.what(), e.index());
  }

  const Sign sc = certified_sign(rec.c, N);
  if (sc == Sign::zero) return fail(CheckStatus::inconclusive, "c(n) has no certified constant sign on [N, inf)");
  out.rule = sc == Sign::negative ? UpperBoundRule::one_step : UpperBoundRule::two_step;

  const SequenceTable t = table_through(rec, N + 1);
  std::vector<std::int64_t> bases{N};
  if (out.rule == UpperBoundRule::two_step) bases.push_back(N + 1);
  for (std::int64_t m : bases) {
    const BigRational ratio = ratio_at(t, m);
    const Sign s = compare(g.eval(BigRational(m)), ratio);
    if (s == Sign::negative) {
      return fail(CheckStatus::fails,
                  "base ratio S_" + std::to_string(m) + "/S_" + std::to_string(m - 1) + " = " +
                      to_short_string(ratio) + " exceeds g(" + std::to_string(m) + ")",
                  to_short_string(ratio));
    }
    if (s == Sign::zero) {
      return fail(CheckStatus::inconclusive, "base ratio equals g(" + std::to_string(m) + ")",
                  to_short_string(ratio));
    }
  }

  try {
    std::int64_t from = N;
    if (out.rule == UpperBoundRule::one_step) {
      out.expression = one_step_condition(rec, gr);
    } else {
      from = N + 2;
      const PositivityResult inner = ratfunc_positive_from(two_step_inner(rec, gr), from);
      if (!inner.holds()) {
        return fail(CheckStatus::fails, "inner denominator b(n-1) + c(n-1)/g(n-2) not certified positive",
                    inner.witness->get_str());
      }
      out.expression = two_step_condition(rec, gr);
    }
    out.condition = ratfunc_positive_from(out.expression, from);
    if (!out.condition.holds()) {
      return fail(CheckStatus::fails,
                  std::string(out.rule == UpperBoundRule::one_step ? "one-step" : "two-step") +
                      " condition fails at n = " + out.condition.witness->get_str(),
                  out.condition.witness->get_str());
    }
    out.details = std::string(out.rule == UpperBoundRule::one_step ? "one-step (c < 0)" : "two-step (c > 0)") +
                  " induction certified for n >= " + std::to_string(from) + " with exact base ratios";
  } catch (const SingularityError& e) {
    return fail(CheckStatus::error, e.what(), e.index());
  }
  return out;
}

Sign two_log_convex_margin(const SequenceTable& t, std::int64_t n) {
  const BigRational l0 = t.at(n - 1) * t.at(n + 1) - t.at(n) * t.at(n);
  const BigRational l1 = t.at(n) * t.at(n + 2) - t.at(n + 1) * t.at(n + 1);
  const BigRational l2 = t.at(n + 1) * t.at(n + 3) - t.at(n + 2) * t.at(n + 2);
  return sign_of(l0 * l2 - l1 * l1);
}

namespace {

CheckOutcome lower_bound_check(const Recurrence& rec, const LowerBoundPlan& plan, std::int64_t N,
                               const SequenceTable& t) {
  CheckOutcome out;
  out.name = "C1-lower";
  auto fail = [&](std::string why) {
    out.status = CheckStatus::fails;
    out.details = std::move(why);
    return out;
  };
  try {
    if (plan.mode == LowerBoundMode::b_only) {
      if (certified_sign(rec.c, N) != Sign::positive) return fail("c(n) > 0 not certified on [N, inf)");
      if (certified_sign(rec.b, N) != Sign::positive) return fail("b(n) > 0 not certified on [N, inf)");
      if (sgn(t.at(N - 2)) <= 0 || sgn(t.at(N - 1)) <= 0) return fail("S_{N-2}, S_{N-1} not positive");
      if (!(plan.f == rec.b) && !ratfunc_positive_from(rec.b - plan.f, N).holds()) {
        return fail("f(n) <= b(n) not certified");
      }
      out.details = "c > 0 and b > 0 on [N, inf) give S_n/S_{n-1} >= b(n) >= f(n)";
    } else {
      if (certified_sign(rec.c, N) != Sign::negative) return fail("c(n) < 0 not certified on [N, inf)");
      const RationalFunction bc = rec.b + rec.c;
      if (!(plan.f == bc) && !ratfunc_positive_from(bc - plan.f, N).holds()) {
        return fail("f(n) <= b(n) + c(n) not certified");
      }
      if (!ratfunc_positive_from(bc - 1, N).holds()) return fail("b(n) + c(n) > 1 not certified on [N, inf)");
      const std::int64_t k = plan.monotone_base_index;
      if (k != N - 1 || t.at(k) < t.at(k - 1) || sgn(t.at(k - 1)) <= 0) {
        return fail("monotone base S_{N-1} >= S_{N-2} > 0 fails");
      }
      out.details = "c < 0, b + c > 1 on [N, inf) and S_{N-1} >= S_{N-2} give S_n >= S_{n-1}, "
                    "hence S_n/S_{n-1} >= b(n) + c(n) >= f(n)";
    }
  } catch (const SingularityError& e) {
    out.status = CheckStatus::error;
    out.witness = e.index();
    out.details = e.what();
    return out;
  }
  out.status = CheckStatus::holds;
  return out;
}

CheckOutcome base_case_check(const SequenceTable& t, std::int64_t from, std::int64_t N) {
  CheckOutcome out;
  out.name = "base-cases";
  out.status = CheckStatus::holds;
  std::int64_t checked = 0;
  for (std::int64_t n = from; n <= N - 1; ++n) {
    const Sign s = two_log_convex_margin(t, n);
    ++checked;
    if (s == Sign::positive) continue;
    out.witness = std::to_string(n);
    if (s == Sign::negative) {
      out.status = CheckStatus::fails;
      out.details = "strict 2-log-convexity reversed at n = " + std::to_string(n);
    } else {
      out.status = CheckStatus::inconclusive;
      out.details = "2-log-convexity holds only with equality at n = " + std::to_string(n);
    }
    return out;
  }
  // Hypotheses of the criterion: positivity and log-convexity through the horizon.
  for (std::int64_t n = from - 1; n <= t.last_index(); ++n) {
    if (sgn(t.at(n)) <= 0) {
      out.status = CheckStatus::fails;
      out.witness = std::to_string(n);
      out.details = "sequence not positive at n = " + std::to_string(n);
      return out;
    }
  }
  for (std::int64_t n = from; n < t.last_index(); ++n) {
    const BigRational m = t.at(n - 1) * t.at(n + 1) - t.at(n) * t.at(n);
    if (sgn(m) > 0) continue;
    out.witness = std::to_string(n);
    out.status = sgn(m) < 0 ? CheckStatus::fails : CheckStatus::inconclusive;
    out.details = std::string("log-convexity ") + (sgn(m) < 0 ? "reversed" : "only with equality") +
                  " at n = " + std::to_string(n);
    return out;
  }
  out.details = "strict 2-log-convexity verified exactly for " + std::to_string(from) + " <= n <= " +
                std::to_string(N - 1) + " (" + std::to_string(checked) +
                " indices); positivity and strict log-convexity verified through n = " +
                std::to_string(t.last_index());
  return out;
}

}  // namespace

CertificateReport verify_certificate(const Recurrence& rec, const LowerBoundPlan& plan, const BoundSeries& g,
                                     std::int64_t N, std::int64_t horizon, std::optional<std::int64_t> claim_from) {
  if (N < std::max<std::int64_t>(rec.offset + 2, 1)) throw DomainError("N must be at least max(offset + 2, 1)");
  CertificateReport report;
  report.seq_name = rec.name;
  report.n_start = N;
  report.horizon = std::max(horizon, N + 3);
  report.f = plan.f;
  report.mode = plan.mode;
  report.g = g;

  const SequenceTable t = table_through(rec, report.horizon);
  const CriterionCoeffs k = theorem_coeffs(rec);
  const RationalFunction gr = series_to_ratfunc(g);
  const RationalFunction r1 = 6 * k.a3 * plan.f + 2 * k.a2;
  const std::int64_t from = claim_from.value_or(rec.offset + 1);
  if (from < rec.offset + 1 || from > N) throw DomainError("claim start must lie in [offset + 1, N]");
  report.claim_from = from;

  const std::vector<std::function<CheckOutcome()>> tasks = {
      [&] { return positivity_check("a3-negative", -k.a3, N, "a3(n) < 0"); },
      [&] { return positivity_check("delta-positive", k.delta, N, "delta(n) > 0"); },
      [&] { return lower_bound_check(rec, plan, N, t); },
      [&] {
        const UpperBoundVerification v = verify_upper_bound(rec, g, N);
        CheckOutcome out;
        out.name = "C1-upper";
        out.status = v.status;
        out.witness = v.witness;
        if (v.holds()) out.bound_m = v.condition.checked_up_to;
        out.details = v.details;
        return out;
      },
      [&] { return positivity_check("C1-separation", gr - plan.f, N, "g(n) - f(n) > 0"); },
      [&] { return positivity_check("C2-R1", -r1, N, "R1(n) = 6 a3 f + 2 a2 < 0"); },
      [&] { return positivity_check("C2-R2", r1 * r1 - k.delta, N, "R2(n) = delta - R1^2 < 0"); },
      [&] { return positivity_check("C3", k.cubic_at(gr), N, "a3 g^3 + a2 g^2 + a1 g + a0 > 0"); },
      [&] { return base_case_check(t, from, N); },
  };
  report.checks = run_all(tasks);

  bool all_hold = true;
  for (const auto& c : report.checks) all_hold = all_hold && c.status == CheckStatus::holds;
  const CheckOutcome* base = report.find("base-cases");
  if (all_hold) report.verdict = CertificateVerdict::certified;
  else if (base->status == CheckStatus::fails) report.verdict = CertificateVerdict::refuted;
  else report.verdict = CertificateVerdict::inconclusive;
  return report;
}

}  // namespace logcert
