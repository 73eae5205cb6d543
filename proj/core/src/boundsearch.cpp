#include "logcert/boundsearch.hpp"

#include <algorithm>
#include <functional>

#include "logcert/errors.hpp"
#include "logcert/parallel.hpp"
#include "logcert/positivity.hpp"

namespace logcert {

namespace {

BigRational limit_of(const RationalFunction& r, const char* what) {
  const int dn = r.num().degree();
  const int dd = r.den().degree();
  if (dn < 0 || dn < dd) return 0;
  if (dn > dd) throw DomainError(std::string(what) + "(n) has no finite limit");
  const QuadExt l = r.num().leading() / r.den().leading();
  if (!l.is_rational()) throw DomainError(std::string(what) + "(n) has an irrational limit");
  return l.rat();
}

// Polynomial in the unknown x whose coefficients are rational functions of n.
using XPoly = std::vector<RationalFunction>;

XPoly add(const XPoly& a, const XPoly& b, int sign = 1) {
  XPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] += a[i];
    if (i < b.size()) out[i] += sign > 0 ? b[i] : -b[i];
  }
  return out;
}

XPoly mul(const XPoly& a, const XPoly& b) {
  XPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

XPoly shift(const XPoly& a, long t) {
  XPoly out;
  out.reserve(a.size());
  for (const auto& c : a) out.push_back(c.shift(t));
  return out;
}

Poly lcm(const Poly& a, const Poly& b) { return exact_div(a * b, gcd(a, b)); }

}  // namespace

QuadExt asymptotic_root(const Recurrence& rec) {
  const BigRational b = limit_of(rec.b, "b");
  const BigRational c = limit_of(rec.c, "c");
  const BigRational disc = b * b + 4 * c;
  if (sgn(disc) <= 0) throw DomainError("b^2 + 4c = " + to_short_string(disc) + " is not positive");
  // sqrt(p/q) = sqrt(p q) / q = s sqrt(d) / q
  const BigInt p = disc.get_num();
  const BigInt q = disc.get_den();
  const SquarefreeSplit split = squarefree_split(p * q);
  const BigRational irr = BigRational(split.square_root, 2 * q);
  const long d = split.squarefree.get_si();
  if (d == 1) return QuadExt(b / 2 + irr);
  return QuadExt(b / 2, irr, d);
}

CandidateOutcome test_candidate(const Recurrence& rec, const BoundSeries& g, std::int64_t N,
                                const CriterionCoeffs& coeffs) {
  CandidateOutcome out;
  const std::vector<std::function<int()>> tasks = {
      [&] {
        const UpperBoundVerification v = verify_upper_bound(rec, g, N);
        out.upper_holds = v.holds();
        out.upper_witness = v.witness;
        out.upper_details = v.details;
        return 0;
      },
      [&] {
        try {
          const PositivityResult r = ratfunc_positive_from(coeffs.cubic_at(series_to_ratfunc(g)), N);
          out.c3_holds = r.holds();
          if (!r.holds()) out.c3_witness = r.witness->get_str();
        } catch (const SingularityError& e) {
          out.c3_witness = e.index();
        }
        return 0;
      },
  };
  run_all(tasks);
  return out;
}

DepthSolution solve_next_coefficient(const Recurrence& rec, const BoundSeries& known, UpperBoundRule rule) {
  if (known.coeffs.empty()) throw DomainError("the series needs its leading coefficient");
  const int depth = static_cast<int>(known.coeffs.size());
  const XPoly g = {series_to_ratfunc(known), RationalFunction(Poly(1), Poly::monomial(1, depth))};

  XPoly num;
  XPoly den;
  if (rule == UpperBoundRule::one_step) {
    // g(n+1) - b(n+1) - c(n+1)/g(n) = ((g(n+1) - b(n+1)) g(n) - c(n+1)) / g(n)
    num = add(mul(add(shift(g, 1), XPoly{rec.b.shift(1)}, -1), g), XPoly{rec.c.shift(1)}, -1);
    den = g;
  } else {
    // g - b - c g(n-2) / W with W = b(n-1) g(n-2) + c(n-1)
    const XPoly g2 = shift(g, -2);
    const XPoly w = add(mul(XPoly{rec.b.shift(-1)}, g2), XPoly{rec.c.shift(-1)});
    num = add(mul(add(g, XPoly{rec.b}, -1), w), mul(XPoly{rec.c}, g2), -1);
    den = w;
  }

  Poly clear(1);
  for (const auto& c : num) {
    if (!c.is_zero()) clear = lcm(clear, c.den());
  }
  std::vector<Poly> cleared;
  int top = -1;
  for (const auto& c : num) {
    cleared.push_back(c.is_zero() ? Poly() : c.num() * exact_div(clear, c.den()));
    top = std::max(top, cleared.back().degree());
  }
  if (top < 0) throw DomainError("condition numerator vanishes identically");
  // The x-free part of the denominator dominates in n; its leading
  // coefficient is the normalizer that makes the full denominator monic.
  const QuadExt normalizer = den.at(0).num().leading();

  std::vector<QuadExt> eq;
  for (const auto& p : cleared) eq.push_back(p.coeff(top) / normalizer);
  DepthSolution out{Poly{eq}, std::nullopt};
  if (out.equation.degree() == 1) out.value = -out.equation.coeff(0) / out.equation.coeff(1);
  return out;
}

const std::vector<BigRational>& adjustment_multipliers() {
  static const std::vector<BigRational> m = {BigRational(2),    BigRational(1, 2), BigRational(3, 2),
                                             BigRational(3),    BigRational(1, 4), BigRational(4)};
  return m;
}

std::optional<AdjustOutcome> adjust_coefficients(const BoundSeries& g, const Recurrence& rec, std::int64_t N,
                                                 const CriterionCoeffs& coeffs) {
  if (test_candidate(rec, g, N, coeffs).both()) return AdjustOutcome{g, std::nullopt};
  std::vector<BoundSeries> seen;
  const int last = g.depth();
  for (int idx = last; idx >= std::max(1, last - 1); --idx) {
    const QuadExt v = g.coeffs[static_cast<std::size_t>(idx)];
    const std::int64_t d = v.radicand();
    const QuadExt parts[] = {QuadExt(v.rat()), d == 1 ? QuadExt() : QuadExt(0, v.irr(), d), v};
    for (const QuadExt& part : parts) {
      if (part.is_zero()) continue;
      const QuadExt rest = v - part;
      std::vector<QuadExt> replacements;
      for (const auto& m : adjustment_multipliers()) replacements.push_back(rest + part * QuadExt(m));
      const QuadExt half = part.abs() / QuadExt(2);
      replacements.push_back(v + half);
      replacements.push_back(v - half);
      for (const QuadExt& r : replacements) {
        BoundSeries candidate = g;
        candidate.coeffs[static_cast<std::size_t>(idx)] = r;
        if (r == v || std::find(seen.begin(), seen.end(), candidate) != seen.end()) continue;
        seen.push_back(candidate);
        if (test_candidate(rec, candidate, N, coeffs).both()) {
          return AdjustOutcome{candidate, CoefficientAdjustment{idx, v, r}};
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

std::vector<std::int64_t> ladder(std::int64_t N, const SearchOptions& options) {
  std::vector<std::int64_t> out{N};
  if (!options.use_ladder) return out;
  for (std::int64_t f : {2, 5, 10}) {
    const std::int64_t m = std::min(N * f, options.ladder_cap);
    if (m > out.back()) out.push_back(m);
  }
  return out;
}

}  // namespace

SearchTrace search_upper_bound(const Recurrence& rec, std::int64_t N, int max_depth, const CriterionCoeffs& coeffs,
                               const SearchOptions& options) {
  if (max_depth < 0) throw DomainError("max depth must be non-negative");
  SearchTrace trace;
  trace.x0 = asymptotic_root(rec);

  std::vector<DepthSolution> solutions;  // shared across starting indices
  bool solve_failed = false;

  for (const std::int64_t n : ladder(N, options)) {
    const Sign sc = certified_sign(rec.c, n);
    trace.n_tried.push_back(n);
    if (sc == Sign::zero) {
      trace.failure = "c(n) has no certified constant sign on [" + std::to_string(n) + ", inf)";
      continue;
    }
    trace.rule = sc == Sign::negative ? UpperBoundRule::one_step : UpperBoundRule::two_step;
    trace.n_start = n;

    BoundSeries g{{trace.x0}};
    for (int depth = 0; depth <= max_depth; ++depth) {
      SearchStep step;
      step.depth = depth;
      step.n_start = n;
      if (depth > 0) {
        if (solutions.size() < static_cast<std::size_t>(depth)) {
          solutions.push_back(solve_next_coefficient(rec, g, trace.rule));
        }
        const DepthSolution& s = solutions[static_cast<std::size_t>(depth - 1)];
        if (!s.value) {
          trace.offending_equation = s.equation;
          trace.failure = "leading coefficient " + s.equation.to_string("x") +
                          (s.equation.degree() < 1 ? " does not depend on x" : " is not linear in x");
          solve_failed = true;
          break;
        }
        step.equation = s.equation;
        step.coefficient = *s.value;
        g.coeffs.push_back(*s.value);
      } else {
        step.coefficient = trace.x0;
      }
      step.candidate = g;
      step.outcome = test_candidate(rec, g, n, coeffs);
      const bool done = step.outcome.both();
      const bool try_adjust = options.adjust && depth > 0 && step.outcome.exactly_one();
      trace.steps.push_back(std::move(step));
      if (done) {
        trace.result = g;
        trace.failure.clear();
        return trace;
      }
      // Perturb the current candidate before paying for another depth.
      if (try_adjust) {
        if (auto adj = adjust_coefficients(g, rec, n, coeffs)) {
          if (adj->change) trace.adjustments.push_back(*adj->change);
          trace.result = adj->g;
          trace.failure.clear();
          return trace;
        }
      }
    }
    if (solve_failed) return trace;
    trace.failure = "max depth " + std::to_string(max_depth) + " exhausted";
  }
  return trace;
}

}  // namespace logcert
