#pragma once

#include <string>

#include "logcert/poly.hpp"

namespace logcert {

/// num(n) / den(n) over Q(sqrt d).
///
/// Every value is kept in lowest terms with a monic denominator; arithmetic
/// cancels through gcds of the denominators only, so the reduction cost
/// stays proportional to the (small) denominator degrees.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(Poly num);  // NOLINT: implicit polynomial embedding
  RationalFunction(const QuadExt& c) : RationalFunction(Poly(c)) {}  // NOLINT
  RationalFunction(long c) : RationalFunction(Poly(c)) {}            // NOLINT
  RationalFunction(int c) : RationalFunction(Poly(c)) {}             // NOLINT
  /// Throws ArithmeticError when den is the zero polynomial.
  RationalFunction(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  std::int64_t radicand() const;

  /// Throws SingularityError when the denominator vanishes at x.
  QuadExt eval(const QuadExt& x) const;
  QuadExt eval(long n) const { return eval(QuadExt(n)); }

  /// r(n + t)
  RationalFunction shift(long t) const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& r);
  RationalFunction& operator-=(const RationalFunction& r);
  RationalFunction& operator*=(const RationalFunction& r);
  RationalFunction& operator/=(const RationalFunction& r);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  /// Cross-multiplication equality.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  RationalFunction pow(unsigned e) const;

  std::string to_string(std::string_view var = "n") const;

 private:
  void reduce();

  Poly num_;
  Poly den_;
};

enum class RatFuncOp { add, sub, mul, div };
RationalFunction ratfunc_arith(const RationalFunction& a, const RationalFunction& b, RatFuncOp op);

/// shift(r, t) = r(n + t).
inline RationalFunction shift(const RationalFunction& r, long t) { return r.shift(t); }

}  // namespace logcert
