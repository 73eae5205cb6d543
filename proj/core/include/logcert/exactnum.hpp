#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace logcert {

using BigInt = mpz_class;
/// GMP rationals are kept canonical (den > 0, gcd 1, zero = 0/1) by
/// construction through the helpers below.
using BigRational = mpq_class;

enum class Sign : int { negative = -1, zero = 0, positive = 1 };

inline Sign sign_of(const BigRational& q) { return static_cast<Sign>(sgn(q)); }
inline Sign sign_of(const BigInt& z) { return static_cast<Sign>(sgn(z)); }
inline Sign operator*(Sign a, Sign b) {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}
const char* to_string(Sign s);

/// Parses "p", "-p" or "p/q" (decimal integers); the result is canonical.
BigRational parse_rational(std::string_view text);
/// Always "num/den", e.g. "5/1", "-3/4".
std::string to_fraction_string(const BigRational& q);
/// "num" when den = 1, "num/den" otherwise.
std::string to_short_string(const BigRational& q);

BigInt floor_of(const BigRational& q);
BigInt ceil_of(const BigRational& q);

struct RationalInterval {
  BigRational lo;
  BigRational hi;

  bool contains(const BigRational& q) const { return lo <= q && q <= hi; }
  BigRational width() const { return hi - lo; }
};

/// Rational interval around sqrt(q) with width < eps; q >= 0, eps > 0.
RationalInterval sqrt_bracket(const BigRational& q, const BigRational& eps);

bool is_squarefree(const BigInt& d);

/// Writes m = s^2 * d with d squarefree; m > 0.
struct SquarefreeSplit {
  BigInt square_root;  // s
  BigInt squarefree;   // d
};
SquarefreeSplit squarefree_split(const BigInt& m);

/// Exact element rat + irr * sqrt(d) of a real quadratic field.
///
/// The radicand travels with the value so that Q(sqrt 2), Q(sqrt 3) and
/// Q(sqrt 5) values coexist. Values with irr = 0 are stored with d = 1 and
/// combine with anything; two irrational values combine only when their
/// radicands agree, otherwise ArithmeticError is thrown.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(BigRational rat);  // NOLINT: implicit rational embedding
  QuadExt(long value) : QuadExt(BigRational(value)) {}  // NOLINT
  QuadExt(int value) : QuadExt(BigRational(value)) {}   // NOLINT
  /// Throws ArithmeticError unless d >= 1 is squarefree.
  QuadExt(BigRational rat, BigRational irr, std::int64_t d);

  /// sqrt(d) itself.
  static QuadExt sqrt(std::int64_t d);

  const BigRational& rat() const { return rat_; }
  const BigRational& irr() const { return irr_; }
  std::int64_t radicand() const { return d_; }

  bool is_rational() const { return sgn(irr_) == 0; }
  bool is_zero() const { return sgn(rat_) == 0 && sgn(irr_) == 0; }

  QuadExt conjugate() const;
  /// rat^2 - d irr^2; norm(x y) = norm(x) norm(y).
  BigRational norm() const;
  Sign sign() const;
  QuadExt abs() const;

  QuadExt operator-() const;
  QuadExt& operator+=(const QuadExt& y);
  QuadExt& operator-=(const QuadExt& y);
  QuadExt& operator*=(const QuadExt& y);
  QuadExt& operator/=(const QuadExt& y);

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.d_ == y.d_ && x.rat_ == y.rat_ && x.irr_ == y.irr_;
  }

  /// Human-readable form, e.g. "17 + 12*sqrt(2)".
  std::string to_string() const;

 private:
  void normalize();

  BigRational rat_{0};
  BigRational irr_{0};
  std::int64_t d_ = 1;
};

enum class QuadOp { add, sub, mul, div };

QuadExt quad_arith(const QuadExt& x, const QuadExt& y, QuadOp op);
inline Sign quad_sign(const QuadExt& x) { return x.sign(); }

/// Common radicand of two values; throws ArithmeticError when incompatible.
std::int64_t common_radicand(std::int64_t d1, std::int64_t d2);

/// Rationals lo <= x <= hi with hi - lo < eps (eps > 0). Uses integer square
/// roots of d * 4^k, no floating point.
RationalInterval quad_bracket(const QuadExt& x, const BigRational& eps);

/// Compares x against a rational exactly.
Sign compare(const QuadExt& x, const BigRational& q);

std::ostream& operator<<(std::ostream& os, const QuadExt& x);

}  // namespace logcert
