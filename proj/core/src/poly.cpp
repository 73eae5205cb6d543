#include "logcert/poly.hpp"

#include <algorithm>

#include "logcert/errors.hpp"

namespace logcert {

Poly::Poly(std::vector<QuadExt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(const QuadExt& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

Poly Poly::variable() { return monomial(QuadExt(1), 1); }

Poly Poly::monomial(const QuadExt& c, int k) {
  if (k < 0) throw DomainError("negative monomial degree");
  std::vector<QuadExt> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

QuadExt Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return QuadExt();
  return coeffs_[static_cast<std::size_t>(i)];
}

const QuadExt& Poly::leading() const {
  if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

std::int64_t Poly::radicand() const {
  std::int64_t d = 1;
  for (const auto& c : coeffs_) d = common_radicand(d, c.radicand());
  return d;
}

QuadExt Poly::eval(const QuadExt& x) const {
  QuadExt acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly Poly::shift(const BigRational& t) const {
  if (sgn(t) == 0 || degree() < 1) return *this;
  std::vector<QuadExt> a = coeffs_;
  const QuadExt tq(t);
  const int d = degree();
  for (int i = 0; i < d; ++i) {
    for (int j = d - 1; j >= i; --j) {
      a[static_cast<std::size_t>(j)] += tq * a[static_cast<std::size_t>(j) + 1];
    }
  }
  return Poly(std::move(a));
}

Poly Poly::scale_variable(const BigRational& s) const {
  std::vector<QuadExt> a = coeffs_;
  BigRational power = 1;
  for (auto& c : a) {
    c *= QuadExt(power);
    power *= s;
  }
  return Poly(std::move(a));
}

Poly Poly::reversed() const {
  std::vector<QuadExt> a(coeffs_.rbegin(), coeffs_.rend());
  return Poly(std::move(a));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly r = *this;
  r.scale(QuadExt(1) / leading());
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& q) {
  if (coeffs_.size() < q.coeffs_.size()) coeffs_.resize(q.coeffs_.size());
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] += q.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& q) {
  if (coeffs_.size() < q.coeffs_.size()) coeffs_.resize(q.coeffs_.size());
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] -= q.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return Poly();
  std::vector<QuadExt> out(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (p.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
      out[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& q) { return *this = *this * q; }

Poly& Poly::scale(const QuadExt& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Poly Poly::pow(unsigned e) const {
  Poly result(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

std::string Poly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const QuadExt& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    std::string body;
    bool negative = false;
    if (c.is_rational()) {
      negative = sgn(c.rat()) < 0;
      const BigRational mag = abs(c.rat());
      if (mag != 1 || i == 0) body = to_short_string(mag);
    } else {
      body = "(" + c.to_string() + ")";
    }
    std::string mono;
    if (i >= 1) mono = std::string(var);
    if (i >= 2) mono += "^" + std::to_string(i);
    std::string term = body;
    if (!body.empty() && !mono.empty()) term += "*";
    term += mono;
    if (out.empty()) {
      out = (negative ? "-" : "") + term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

Poly poly_arith(const Poly& p, const Poly& q, PolyOp op) {
  switch (op) {
    case PolyOp::add:
      return p + q;
    case PolyOp::sub:
      return p - q;
    case PolyOp::mul:
      return p * q;
  }
  throw DomainError("unknown PolyOp");
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<QuadExt> rem = a.coefficients();
  std::vector<QuadExt> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const QuadExt inv_lead = QuadExt(1) / b.leading();
  const auto& bc = b.coefficients();
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    const QuadExt& top = rem[static_cast<std::size_t>(k + db)];
    if (top.is_zero()) continue;
    const QuadExt factor = top * inv_lead;
    quot[static_cast<std::size_t>(k)] = factor;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k + j)] -= factor * bc[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(std::max(db, 0)));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw ArithmeticError("polynomial division is not exact");
  return q;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a.monic();
  Poly y = b.monic();
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

BigInt denominator_lcm(const Poly& p) {
  BigInt l = 1;
  for (const auto& c : p.coefficients()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rat().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.irr().get_den_mpz_t());
  }
  return l;
}

}  // namespace logcert
