#include "logcert/exactnum.hpp"

#include <cctype>
#include <ostream>

#include "logcert/errors.hpp"

namespace logcert {

const char* to_string(Sign s) {
  switch (s) {
    case Sign::negative:
      return "negative";
    case Sign::zero:
      return "zero";
    case Sign::positive:
      return "positive";
  }
  return "?";
}

namespace {

bool valid_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!valid_integer_literal(s)) {
    throw DomainError("not an integer literal: '" + std::string(s) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  BigInt num = parse_integer(trim(text.substr(0, slash)));
  BigInt den = 1;
  if (slash != std::string_view::npos) {
    den = parse_integer(trim(text.substr(slash + 1)));
  }
  if (sgn(den) == 0) throw ArithmeticError("zero denominator in '" + std::string(text) + "'");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_fraction_string(const BigRational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_short_string(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return to_fraction_string(q);
}

BigInt floor_of(const BigRational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

BigInt ceil_of(const BigRational& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

RationalInterval sqrt_bracket(const BigRational& q, const BigRational& eps) {
  if (sgn(q) < 0) throw DomainError("sqrt_bracket of a negative rational");
  if (sgn(eps) <= 0) throw DomainError("sqrt_bracket needs eps > 0");
  // sqrt(p/r) = sqrt(p r) / r; bracket sqrt(p r) by isqrt(p r 4^k) / 2^k.
  const BigInt m = q.get_num() * q.get_den();
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
  if (root * root == m) {
    BigRational exact(root, q.get_den());
    exact.canonicalize();
    return {exact, exact};
  }
  BigInt scale = 1;
  for (;;) {
    const BigRational width(BigInt(1), scale * q.get_den());
    if (width < eps) break;
    scale *= 2;
  }
  const BigInt scaled = m * scale * scale;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  BigRational lo(root, scale * q.get_den());
  BigRational hi(root + 1, scale * q.get_den());
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

bool is_squarefree(const BigInt& d) {
  if (sgn(d) <= 0) return false;
  return squarefree_split(d).square_root == 1;
}

SquarefreeSplit squarefree_split(const BigInt& m) {
  if (sgn(m) <= 0) throw DomainError("squarefree_split needs a positive integer");
  BigInt rest = m;
  BigInt s = 1;
  BigInt d = 1;
  for (BigInt p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) s *= p;
    if (e % 2 == 1) d *= p;
  }
  d *= rest;
  return {s, d};
}

QuadExt::QuadExt(BigRational rat) : rat_(std::move(rat)) { rat_.canonicalize(); }

QuadExt::QuadExt(BigRational rat, BigRational irr, std::int64_t d)
    : rat_(std::move(rat)), irr_(std::move(irr)), d_(d) {
  if (d < 1 || !is_squarefree(BigInt(static_cast<long>(d)))) {
    throw ArithmeticError("radicand must be a positive squarefree integer, got " +
                          std::to_string(d));
  }
  rat_.canonicalize();
  irr_.canonicalize();
  normalize();
}

QuadExt QuadExt::sqrt(std::int64_t d) { return QuadExt(0, 1, d); }

void QuadExt::normalize() {
  if (d_ == 1) {
    rat_ += irr_;
    irr_ = 0;
  }
  if (sgn(irr_) == 0) d_ = 1;
}

std::int64_t common_radicand(std::int64_t d1, std::int64_t d2) {
  if (d1 == 1) return d2;
  if (d2 == 1 || d1 == d2) return d1;
  throw ArithmeticError("incompatible radicands sqrt(" + std::to_string(d1) +
                        ") and sqrt(" + std::to_string(d2) + ")");
}

QuadExt QuadExt::conjugate() const {
  QuadExt r = *this;
  r.irr_ = -r.irr_;
  return r;
}

BigRational QuadExt::norm() const {
  return rat_ * rat_ - BigRational(static_cast<long>(d_)) * irr_ * irr_;
}

Sign QuadExt::sign() const {
  const int sa = sgn(rat_);
  const int sb = sgn(irr_);
  if (sb == 0) return static_cast<Sign>(sa);
  if (sa == 0) return static_cast<Sign>(sb);
  if (sa == sb) return static_cast<Sign>(sa);
  // Mixed signs: compare a^2 against d b^2.
  const int cmp_sq = cmp(rat_ * rat_, BigRational(static_cast<long>(d_)) * irr_ * irr_);
  if (cmp_sq == 0) return Sign::zero;  // impossible for squarefree d > 1
  return static_cast<Sign>(cmp_sq > 0 ? sa : sb);
}

QuadExt QuadExt::abs() const { return sign() == Sign::negative ? -*this : *this; }

QuadExt QuadExt::operator-() const {
  QuadExt r = *this;
  r.rat_ = -r.rat_;
  r.irr_ = -r.irr_;
  return r;
}

QuadExt& QuadExt::operator+=(const QuadExt& y) {
  d_ = common_radicand(d_, y.d_);
  rat_ += y.rat_;
  if (!y.is_rational()) irr_ += y.irr_;
  normalize();
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& y) {
  d_ = common_radicand(d_, y.d_);
  rat_ -= y.rat_;
  if (!y.is_rational()) irr_ -= y.irr_;
  normalize();
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& y) {
  if (y.is_rational()) {
    rat_ *= y.rat_;
    if (!is_rational()) irr_ *= y.rat_;
    normalize();
    return *this;
  }
  if (is_rational()) {
    irr_ = rat_ * y.irr_;
    rat_ *= y.rat_;
    d_ = y.d_;
    normalize();
    return *this;
  }
  const std::int64_t d = common_radicand(d_, y.d_);
  BigRational r = rat_ * y.rat_ + BigRational(static_cast<long>(d)) * irr_ * y.irr_;
  BigRational i = rat_ * y.irr_ + irr_ * y.rat_;
  rat_ = std::move(r);
  irr_ = std::move(i);
  d_ = d;
  normalize();
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& y) {
  if (y.is_zero()) throw ArithmeticError("division by zero");
  if (y.is_rational()) {
    rat_ /= y.rat_;
    if (!is_rational()) irr_ /= y.rat_;
    return *this;
  }
  common_radicand(d_, y.d_);
  // x / y = x * conj(y) / norm(y)
  const BigRational n = y.norm();
  *this *= y.conjugate();
  rat_ /= n;
  irr_ /= n;
  normalize();
  return *this;
}

std::string QuadExt::to_string() const {
  if (is_rational()) return to_short_string(rat_);
  std::string out;
  if (sgn(rat_) != 0) out = to_short_string(rat_) + (sgn(irr_) < 0 ? " - " : " + ");
  else if (sgn(irr_) < 0) out = "-";
  const BigRational mag = ::abs(irr_);
  if (mag != 1) out += to_short_string(mag) + "*";
  out += "sqrt(" + std::to_string(d_) + ")";
  return out;
}

QuadExt quad_arith(const QuadExt& x, const QuadExt& y, QuadOp op) {
  switch (op) {
    case QuadOp::add:
      return x + y;
    case QuadOp::sub:
      return x - y;
    case QuadOp::mul:
      return x * y;
    case QuadOp::div:
      return x / y;
  }
  throw DomainError("unknown QuadOp");
}

RationalInterval quad_bracket(const QuadExt& x, const BigRational& eps) {
  if (sgn(eps) <= 0) throw DomainError("quad_bracket needs eps > 0");
  if (x.is_rational()) return {x.rat(), x.rat()};
  const BigRational mag = ::abs(x.irr());
  // sqrt(d) lies in [r / 2^k, (r + 1) / 2^k] with r = isqrt(d 4^k).
  BigInt scale = 1;
  while (mag / BigRational(scale) >= eps) scale *= 2;
  const BigInt scaled = BigInt(static_cast<long>(x.radicand())) * scale * scale;
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), scaled.get_mpz_t());
  BigRational root_lo(r, scale);
  BigRational root_hi(r + 1, scale);
  root_lo.canonicalize();
  root_hi.canonicalize();
  if (sgn(x.irr()) > 0) return {x.rat() + x.irr() * root_lo, x.rat() + x.irr() * root_hi};
  return {x.rat() + x.irr() * root_hi, x.rat() + x.irr() * root_lo};
}

Sign compare(const QuadExt& x, const BigRational& q) { return (x - QuadExt(q)).sign(); }

std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.to_string(); }

}  // namespace logcert
