#include <doctest.h>

#include "logcert/errors.hpp"
#include "logcert/exactnum.hpp"
#include "oracles.hpp"

using namespace logcert;

namespace {

QuadExt q2(long a, long b) { return QuadExt(a, b, 2); }

QuadExt random_quad(oracle::Rng& rng, std::int64_t d) {
  const BigRational a(rng.range(-100, 100), rng.range(1, 100));
  const BigRational b(rng.range(-100, 100), rng.range(1, 100));
  BigRational ca = a, cb = b;
  ca.canonicalize();
  cb.canonicalize();
  return QuadExt(ca, cb, d);
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("6/4") == BigRational(3, 2));
  CHECK(parse_rational("-7") == BigRational(-7));
  CHECK(parse_rational(" 0/5 ") == BigRational(0));
  CHECK(to_fraction_string(parse_rational("-0/3")) == "0/1");
  CHECK(to_fraction_string(BigRational(5)) == "5/1");
  CHECK(to_short_string(BigRational(-3, 4)) == "-3/4");
  CHECK_THROWS_AS(parse_rational("1/0"), ArithmeticError);
  CHECK_THROWS(parse_rational("1.5"));
  CHECK_THROWS(parse_rational(""));
}

TEST_CASE("canonicalization is idempotent") {
  oracle::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    BigRational q(rng.range(-1000, 1000), rng.range(1, 1000));
    q.canonicalize();
    BigRational again = q;
    again.canonicalize();
    CHECK(again == q);
    CHECK(parse_rational(to_fraction_string(q)) == q);
    CHECK(q.get_den() > 0);
  }
}

TEST_CASE("floor and ceil") {
  CHECK(floor_of(BigRational(7, 2)) == 3);
  CHECK(ceil_of(BigRational(7, 2)) == 4);
  CHECK(floor_of(BigRational(-7, 2)) == -4);
  CHECK(ceil_of(BigRational(-7, 2)) == -3);
  CHECK(floor_of(BigRational(6)) == 6);
}

TEST_CASE("squarefree split") {
  auto s = squarefree_split(73008);  // 156^2 * 3
  CHECK(s.square_root == 156);
  CHECK(s.squarefree == 3);
  s = squarefree_split(1);
  CHECK(s.square_root == 1);
  CHECK(s.squarefree == 1);
  CHECK(is_squarefree(30));
  CHECK_FALSE(is_squarefree(12));
}

TEST_CASE("quad_arith examples") {
  CHECK(quad_arith(q2(1, 1), q2(1, -1), QuadOp::mul) == QuadExt(-1));
  CHECK(quad_arith(q2(17, 12), q2(17, -12), QuadOp::mul) == QuadExt(1));
  const QuadExt t(BigRational(11, 2), BigRational(5, 2), 5);
  CHECK(quad_arith(t, -t, QuadOp::add).is_zero());
  CHECK(quad_arith(q2(3, 1), q2(3, 1), QuadOp::sub).is_zero());
  CHECK(quad_arith(QuadExt(1), q2(17, 12), QuadOp::div) == q2(17, -12));
}

TEST_CASE("quad errors") {
  CHECK_THROWS_AS(QuadExt(1) / QuadExt(0), ArithmeticError);
  CHECK_THROWS_AS(QuadExt::sqrt(2) + QuadExt::sqrt(3), ArithmeticError);
  CHECK_THROWS_AS(QuadExt(1, 1, 4), ArithmeticError);
  CHECK_THROWS_AS(QuadExt(1, 1, 0), ArithmeticError);
  // A rational value combines with any field.
  CHECK_NOTHROW(QuadExt(BigRational(1, 2)) * QuadExt::sqrt(3));
}

TEST_CASE("d = 1 embeds rationals") {
  const QuadExt x(3, 2, 1);
  CHECK(x.is_rational());
  CHECK(x.radicand() == 1);
  CHECK(x == QuadExt(5));
  CHECK((QuadExt::sqrt(5) - QuadExt::sqrt(5)).radicand() == 1);
}

TEST_CASE("quad_sign examples") {
  CHECK(quad_sign(QuadExt(-275, 123, 5)) == Sign::positive);
  CHECK(quad_sign(QuadExt(-24, 17, 2)) == Sign::positive);
  CHECK(quad_sign(QuadExt(0, 0, 3)) == Sign::zero);
  CHECK(quad_sign(QuadExt(24, -17, 2)) == Sign::negative);
}

TEST_CASE("quad_sign near the conjugate of a unit") {
  // 577^2 - 2 * 408^2 = 1, so 577 - 408 sqrt 2 is a tiny positive number.
  CHECK(quad_sign(q2(577, -408)) == Sign::positive);
  CHECK(quad_sign(q2(-577, 408)) == Sign::negative);
}

TEST_CASE("quad_bracket examples") {
  auto iv = quad_bracket(QuadExt::sqrt(2), BigRational(1, 100));
  CHECK(iv.width() < BigRational(1, 100));
  CHECK(iv.lo * iv.lo <= 2);
  CHECK(iv.hi * iv.hi >= 2);

  iv = quad_bracket(QuadExt(5, 0, 3), 1);
  CHECK(iv.lo == 5);
  CHECK(iv.hi == 5);

  iv = quad_bracket(q2(17, 12), BigRational(1, 1000000));
  CHECK(iv.width() < BigRational(1, 1000000));
  CHECK(iv.lo > 33);
  CHECK(iv.hi < 34);
  // 17 + 12 sqrt 2 = 33.97056274...
  CHECK(iv.lo <= BigRational(339705628, 10000000));
  CHECK(iv.hi >= BigRational(339705627, 10000000));
}

TEST_CASE("sqrt_bracket") {
  const auto iv = sqrt_bracket(BigRational(9, 4), BigRational(1, 1000));
  CHECK(iv.contains(BigRational(3, 2)));
  CHECK(iv.width() < BigRational(1, 1000));
}

TEST_CASE("property: sign agrees with any bracket excluding zero") {
  oracle::Rng rng(7);
  for (std::int64_t d : {2, 3, 5, 7}) {
    for (int i = 0; i < 150; ++i) {
      const QuadExt x = random_quad(rng, d);
      const auto iv = quad_bracket(x, BigRational(1, 1000));
      CHECK(iv.lo <= iv.hi);
      if (sgn(iv.lo) > 0) CHECK(x.sign() == Sign::positive);
      if (sgn(iv.hi) < 0) CHECK(x.sign() == Sign::negative);
      CHECK(compare(x, iv.lo) != Sign::negative);
      CHECK(compare(x, iv.hi) != Sign::positive);
    }
  }
}

TEST_CASE("property: field identities") {
  oracle::Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    const std::int64_t d = std::vector<std::int64_t>{2, 3, 5}[static_cast<std::size_t>(i % 3)];
    const QuadExt x = random_quad(rng, d);
    const QuadExt y = random_quad(rng, d);
    CHECK((x * y).sign() == x.sign() * y.sign());
    CHECK((x * y).norm() == x.norm() * y.norm());
    CHECK(x + y - y == x);
    if (!y.is_zero()) CHECK((x / y) * y == x);
    CHECK(x * x.conjugate() == QuadExt(x.norm()));
    CHECK(x.abs().sign() != Sign::negative);
  }
}

TEST_CASE("to_string") {
  CHECK(q2(17, 12).to_string() == "17 + 12*sqrt(2)");
  CHECK(QuadExt(BigRational(-51, 2), -18, 2).to_string() == "-51/2 - 18*sqrt(2)");
  CHECK(QuadExt(0, 1, 3).to_string() == "sqrt(3)");
  CHECK(QuadExt(0).to_string() == "0");
}
