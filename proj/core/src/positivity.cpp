#include "logcert/positivity.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "logcert/errors.hpp"

namespace logcert {

const char* to_string(PositivityResult::Verdict v) {
  return v == PositivityResult::Verdict::holds ? "holds" : "fails";
}

namespace {

constexpr long kPointwiseSpan = 32;

QuadExt value_at(const Poly& p, const BigInt& n) { return p.eval(QuadExt(BigRational(n))); }

int sign_variations(const Poly& p) {
  int count = 0;
  Sign last = Sign::zero;
  for (const auto& c : p.coefficients()) {
    const Sign s = c.sign();
    if (s == Sign::zero) continue;
    if (last != Sign::zero && s != last) ++count;
    last = s;
  }
  return count;
}

// True when Descartes' rule certifies no root of p in the open interval (lo, hi).
bool root_free(const Poly& p, const BigInt& lo, const BigInt& hi) {
  const Poly unit = p.shift(BigRational(lo)).scale_variable(BigRational(hi - lo));
  return sign_variations(unit.reversed().shift(BigRational(1))) == 0;
}

BigRational upper_abs(const QuadExt& x) {
  return quad_bracket(x.abs(), BigRational(1, 1024)).hi;
}

BigRational lower_abs(const QuadExt& x) {
  BigRational eps(1, 1024);
  for (;;) {
    const BigRational lo = quad_bracket(x.abs(), eps).lo;
    if (sgn(lo) > 0) return lo;
    eps /= 1024;
  }
}

}  // namespace

BigInt crossover_bound(const Poly& p, const BigInt& N) {
  if (p.degree() < 1) return N;
  const BigRational lead = lower_abs(p.leading());
  BigRational worst = 0;
  for (int i = 0; i < p.degree(); ++i) {
    const QuadExt c = p.coeff(i);
    if (c.is_zero()) continue;
    const BigRational r = upper_abs(c) / lead;
    if (r > worst) worst = r;
  }
  const BigInt m = 1 + ceil_of(worst);
  return std::max(N, m);
}

std::optional<BigInt> first_nonpositive(const Poly& p, const BigInt& lo, const BigInt& hi) {
  // Depth-first over [lo, hi], left halves first, so the first hit is the smallest.
  std::vector<std::pair<BigInt, BigInt>> stack{{lo, hi}};
  while (!stack.empty()) {
    auto [a, b] = std::move(stack.back());
    stack.pop_back();
    if (a > b) continue;
    if (b - a < kPointwiseSpan) {
      for (BigInt n = a; n <= b; ++n) {
        if (value_at(p, n).sign() != Sign::positive) return n;
      }
      continue;
    }
    if (value_at(p, a).sign() != Sign::positive) return a;
    if (value_at(p, b).sign() == Sign::positive && root_free(p, a, b)) continue;
    BigInt mid = (a + b) / 2;
    stack.emplace_back(mid + 1, b);
    stack.emplace_back(a, mid);
  }
  return std::nullopt;
}

PositivityResult poly_positive_from(const Poly& p, const BigInt& N) {
  if (p.is_zero()) throw DomainError("positivity of the zero polynomial");
  if (N < 1) throw DomainError("positivity start index must be >= 1");
  PositivityResult out;
  out.checked_up_to = crossover_bound(p, N);

  auto fail_at = [&](const BigInt& n) {
    out.verdict = PositivityResult::Verdict::fails;
    out.witness = n;
    out.witness_value = value_at(p, n);
    return out;
  };

  if (p.degree() == 0) {
    if (p.leading().sign() != Sign::positive) return fail_at(N);
    return out;
  }
  if (p.leading().sign() == Sign::negative) {
    // The crossover point itself is negative, so a witness always exists.
    return fail_at(*first_nonpositive(p, N, out.checked_up_to));
  }
  // All coefficients of p(N + m) non-negative with p(N) > 0 settles it.
  const Poly at_start = p.shift(BigRational(N));
  const bool nonneg = std::all_of(at_start.coefficients().begin(), at_start.coefficients().end(),
                                  [](const QuadExt& c) { return c.sign() != Sign::negative; });
  if (nonneg && at_start.coeff(0).sign() == Sign::positive) return out;

  if (auto w = first_nonpositive(p, N, out.checked_up_to)) return fail_at(*w);
  return out;
}

PositivityResult ratfunc_positive_from(const RationalFunction& r, const BigInt& N) {
  const Poly& den = r.den();
  Poly signed_num;
  if (poly_positive_from(den, N).holds()) {
    signed_num = r.num();
  } else if (poly_positive_from(-den, N).holds()) {
    signed_num = -r.num();
  } else {
    const BigInt bound = crossover_bound(den, N);
    if (auto zero = first_nonpositive(den * den, N, bound)) {
      throw SingularityError("denominator vanishes", zero->get_str());
    }
    const BigInt w = *first_nonpositive(den, N, bound);
    throw SingularityError("denominator changes sign", w.get_str());
  }
  if (signed_num.is_zero()) {
    PositivityResult out;
    out.verdict = PositivityResult::Verdict::fails;
    out.witness = N;
    out.witness_value = QuadExt();
    out.checked_up_to = N;
    return out;
  }
  PositivityResult out = poly_positive_from(signed_num, N);
  if (out.witness) out.witness_value = r.eval(QuadExt(BigRational(*out.witness)));
  return out;
}

}  // namespace logcert
