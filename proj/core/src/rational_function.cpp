#include "logcert/rational_function.hpp"

#include "logcert/errors.hpp"

namespace logcert {

namespace {

bool is_one(const Poly& p) { return p.degree() == 0 && p.leading() == QuadExt(1); }

}  // namespace

RationalFunction::RationalFunction(Poly num) : num_(std::move(num)), den_(1) {}

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ArithmeticError("rational function with zero denominator");
  reduce();
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_.degree() > 0) {
    const Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  const QuadExt lead = den_.leading();
  if (!(lead == QuadExt(1))) {
    const QuadExt inv = QuadExt(1) / lead;
    num_.scale(inv);
    den_.scale(inv);
  }
}

std::int64_t RationalFunction::radicand() const {
  return common_radicand(num_.radicand(), den_.radicand());
}

QuadExt RationalFunction::eval(const QuadExt& x) const {
  const QuadExt d = den_.eval(x);
  if (d.is_zero()) throw SingularityError("denominator vanishes", x.to_string());
  return num_.eval(x) / d;
}

RationalFunction RationalFunction::shift(long t) const {
  RationalFunction r;
  r.num_ = num_.shift(BigRational(t));
  r.den_ = den_.shift(BigRational(t));
  return r;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& r) {
  if (r.is_zero()) return *this;
  if (is_zero()) return *this = r;
  if (is_one(den_) && is_one(r.den_)) {
    num_ += r.num_;
    return *this;
  }
  // Henrici: only factors of gcd(d1, d2) can cancel against the new numerator.
  const Poly g = gcd(den_, r.den_);
  if (g.degree() == 0) {
    num_ = num_ * r.den_ + r.num_ * den_;
    den_ = den_ * r.den_;
    if (num_.is_zero()) den_ = Poly(1);
    return *this;
  }
  const Poly d1 = exact_div(den_, g);
  const Poly d2 = exact_div(r.den_, g);
  Poly t = num_ * d2 + r.num_ * d1;
  if (t.is_zero()) {
    num_ = Poly();
    den_ = Poly(1);
    return *this;
  }
  const Poly g2 = gcd(t, g);
  if (g2.degree() > 0) {
    num_ = exact_div(t, g2);
    den_ = d1 * d2 * exact_div(g, g2);
  } else {
    num_ = std::move(t);
    den_ = d1 * d2 * g;
  }
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& r) { return *this += -r; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& r) {
  if (is_zero() || r.is_zero()) {
    num_ = Poly();
    den_ = Poly(1);
    return *this;
  }
  Poly n1 = num_;
  Poly d1 = den_;
  Poly n2 = r.num_;
  Poly d2 = r.den_;
  if (d2.degree() > 0) {
    const Poly g = gcd(n1, d2);
    if (g.degree() > 0) {
      n1 = exact_div(n1, g);
      d2 = exact_div(d2, g);
    }
  }
  if (d1.degree() > 0) {
    const Poly g = gcd(n2, d1);
    if (g.degree() > 0) {
      n2 = exact_div(n2, g);
      d1 = exact_div(d1, g);
    }
  }
  num_ = n1 * n2;
  den_ = d1 * d2;
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& r) {
  if (r.is_zero()) throw ArithmeticError("rational function division by zero");
  RationalFunction inv;
  const QuadExt lead = r.num_.leading();
  inv.num_ = r.den_;
  inv.num_.scale(QuadExt(1) / lead);
  inv.den_ = r.num_.monic();
  return *this *= inv;
}

RationalFunction RationalFunction::pow(unsigned e) const {
  RationalFunction r;
  r.num_ = num_.pow(e);
  r.den_ = den_.pow(e);
  return r;
}

std::string RationalFunction::to_string(std::string_view var) const {
  if (is_one(den_)) return num_.to_string(var);
  return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

RationalFunction ratfunc_arith(const RationalFunction& a, const RationalFunction& b, RatFuncOp op) {
  switch (op) {
    case RatFuncOp::add:
      return a + b;
    case RatFuncOp::sub:
      return a - b;
    case RatFuncOp::mul:
      return a * b;
    case RatFuncOp::div:
      return a / b;
  }
  throw DomainError("unknown RatFuncOp");
}

}  // namespace logcert
