#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "logcert/exactnum.hpp"

namespace logcert {

/// Univariate polynomial in the index variable n over Q(sqrt d).
///
/// Coefficients are stored by ascending degree with trailing zeros trimmed,
/// so the zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<QuadExt> coeffs);
  Poly(const QuadExt& constant);  // NOLINT: implicit constant embedding
  Poly(long constant) : Poly(QuadExt(constant)) {}  // NOLINT
  Poly(int constant) : Poly(QuadExt(constant)) {}   // NOLINT

  /// The polynomial n.
  static Poly variable();
  /// c * n^k
  static Poly monomial(const QuadExt& c, int k);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<QuadExt>& coefficients() const { return coeffs_; }
  /// Coefficient of n^i (zero beyond the degree).
  QuadExt coeff(int i) const;
  /// Throws DomainError on the zero polynomial.
  const QuadExt& leading() const;
  /// 1 when every coefficient is rational.
  std::int64_t radicand() const;
  bool is_rational() const { return radicand() == 1; }

  QuadExt eval(const QuadExt& x) const;
  Sign sign_at(const BigInt& n) const { return eval(QuadExt(BigRational(n))).sign(); }

  /// p(n + t), by repeated synthetic division.
  Poly shift(const BigRational& t) const;
  /// p(s n).
  Poly scale_variable(const BigRational& s) const;
  /// n^k p(1/n) for k = degree.
  Poly reversed() const;
  /// Divides by the leading coefficient; zero stays zero.
  Poly monic() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& q);
  Poly& operator-=(const Poly& q);
  Poly& operator*=(const Poly& q);
  /// Multiplies every coefficient by c.
  Poly& scale(const QuadExt& c);

  friend Poly operator+(Poly p, const Poly& q) { return p += q; }
  friend Poly operator-(Poly p, const Poly& q) { return p -= q; }
  friend Poly operator*(const Poly& p, const Poly& q);
  friend bool operator==(const Poly& p, const Poly& q) { return p.coeffs_ == q.coeffs_; }

  Poly pow(unsigned e) const;

  /// Rendered in polyexpr style; irrational coefficients are parenthesized,
  /// e.g. "(17 + 12*sqrt(2))*n^3 - 5".
  std::string to_string(std::string_view var = "n") const;

 private:
  void trim();

  std::vector<QuadExt> coeffs_;
};

enum class PolyOp { add, sub, mul };
Poly poly_arith(const Poly& p, const Poly& q, PolyOp op);

/// Euclidean division over the coefficient field; throws on b = 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Exact quotient; throws ArithmeticError when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
/// Monic gcd (zero when both are zero).
Poly gcd(const Poly& a, const Poly& b);

/// Smallest positive integer multiplier clearing all coefficient
/// denominators (of both rational and irrational parts).
BigInt denominator_lcm(const Poly& p);

}  // namespace logcert
