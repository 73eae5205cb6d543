#include <doctest.h>

#include "logcert/errors.hpp"
#include "logcert/recurrence.hpp"
#include "oracles.hpp"

using namespace logcert;

namespace {

std::vector<BigRational> prefix(const char* name, std::size_t count) { return generate(catalog_entry(name), count).values; }

std::vector<BigRational> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("catalog prefixes") {
  CHECK(prefix("apery-a", 5) == ints({1, 5, 73, 1445, 33001}));
  CHECK(prefix("apery-b", 4) == ints({1, 3, 19, 147}));
  CHECK(prefix("cohen-rhin-u", 3) == ints({1, 12, 804}));
  CHECK(prefix("motzkin", 7) == ints({1, 1, 2, 4, 9, 21, 51}));
  CHECK(prefix("franel-3", 5) == ints({1, 2, 10, 56, 346}));
  CHECK(prefix("franel-4", 5) == ints({1, 2, 18, 164, 1810}));
  CHECK(prefix("schroder", 6) == ints({1, 2, 6, 22, 90, 394}));
  const SequenceTable fine = generate(catalog_entry("fine"), 5);
  CHECK(fine.offset == 2);
  CHECK(fine.values == ints({1, 2, 6, 18, 57}));
}

TEST_CASE("catalog entries carry the published coefficients") {
  const Poly n = Poly::variable();
  const Recurrence& a = catalog_entry("apery-a");
  CHECK(a.b == RationalFunction(34 * n.pow(3) - 51 * n * n + 27 * n - Poly(5), n.pow(3)));
  CHECK(a.c == RationalFunction(-(n - Poly(1)).pow(3), n.pow(3)));
  // U_{n+1} = R(n) U_n + G(n) U_{n-1} read with n -> n - 1.
  const Recurrence& u = catalog_entry("cohen-rhin-u");
  const RationalFunction R(3 * (2 * n + Poly(1)) * (3 * n * n + 3 * n + Poly(1)) * (15 * n * n + 15 * n + Poly(4)),
                           (n + Poly(1)).pow(5));
  const RationalFunction G(3 * n.pow(3) * (3 * n - Poly(1)) * (3 * n + Poly(1)), (n + Poly(1)).pow(5));
  CHECK(u.b == R.shift(-1));
  CHECK(u.c == G.shift(-1));
  CHECK(catalog().size() == 8);
  CHECK_THROWS_AS(catalog_entry("nope"), DomainError);
}

TEST_CASE("generation matches independent sums") {
  const std::size_t count = 120;
  const auto a = prefix("apery-a", count);
  const auto b = prefix("apery-b", count);
  const auto m = prefix("motzkin", count);
  const auto f3 = prefix("franel-3", count);
  const auto f4 = prefix("franel-4", count);
  const auto s = prefix("schroder", count);
  for (long k = 0; k < static_cast<long>(count); ++k) {
    const auto i = static_cast<std::size_t>(k);
    CHECK(a[i] == BigRational(oracle::apery_a(k)));
    CHECK(b[i] == BigRational(oracle::apery_b(k)));
    CHECK(m[i] == BigRational(oracle::motzkin(k)));
    CHECK(f3[i] == BigRational(oracle::franel(k, 3)));
    CHECK(f4[i] == BigRational(oracle::franel(k, 4)));
    CHECK(s[i] == BigRational(oracle::schroder(k)));
  }
  const auto fine_ref = oracle::fine_prefix(count + 2);
  const SequenceTable fine = generate(catalog_entry("fine"), count);
  for (std::int64_t k = 2; k <= fine.last_index(); ++k) CHECK(fine.at(k) == BigRational(fine_ref[k]));
  const auto u_ref = oracle::cohen_rhin_prefix(count);
  CHECK(prefix("cohen-rhin-u", count) == u_ref);
}

TEST_CASE("direct_oracle agrees with independent sums") {
  for (long k : {0L, 1L, 2L, 17L, 60L}) {
    CHECK(direct_oracle("apery-a", k) == BigRational(oracle::apery_a(k)));
    CHECK(direct_oracle("apery-b", k) == BigRational(oracle::apery_b(k)));
    CHECK(direct_oracle("schroder", k) == BigRational(oracle::schroder(k)));
  }
  CHECK(direct_oracle("apery-a", 2) == 73);
  CHECK(direct_oracle("apery-b", 2) == 19);
  CHECK(direct_oracle("fine", 0) == 1);
  CHECK(direct_oracle("fine", 1) == 0);
  CHECK_FALSE(has_direct_oracle("cohen-rhin-u"));
  CHECK_THROWS_AS(direct_oracle("cohen-rhin-u", 3), DomainError);
  CHECK_THROWS_AS(direct_oracle("apery-a", -1), DomainError);
}

TEST_CASE("generation errors") {
  CHECK_THROWS_AS(generate(catalog_entry("apery-a"), 1), DomainError);
  // b has a pole at n = 4, reached when generating S_4.
  const Recurrence r = parse_spec("name = pole\ninitial = 1, 1\nb = 1 / (n - 4)\nc = 1\n");
  CHECK(r.singularities.count(4) == 1);
  CHECK_NOTHROW(generate(r, 4));
  CHECK_THROWS_AS(generate(r, 5), SingularityError);
}

TEST_CASE("spec parser") {
  const Recurrence r = parse_spec(
      "# Apery numbers, zeta(3)\n"
      "name = my-apery\n"
      "initial = 1, 5\n"
      "b = (34*n^3 - 51*n^2 + 27*n - 5) / n^3   # leading 34\n"
      "c = -(n-1)^3 / n^3\n");
  CHECK(r.name == "my-apery");
  CHECK(r.offset == 0);
  CHECK(r.b == catalog_entry("apery-a").b);
  CHECK(r.c == catalog_entry("apery-a").c);
  CHECK(r.initial == catalog_entry("apery-a").initial);
  CHECK_FALSE(same_recurrence(r, catalog_entry("apery-a")));  // names differ

  const Recurrence q = parse_spec("name = q\noffset = 3\ninitial = 1/2, 3/4\nb = 2*n\nc = (n^2)\n");
  CHECK(q.offset == 3);
  CHECK(q.initial[0] == BigRational(1, 2));
  CHECK(q.initial[1] == BigRational(3, 4));
}

TEST_CASE("spec parser errors carry positions") {
  auto error_at = [](const std::string& text) -> std::pair<std::size_t, std::size_t> {
    try {
      (void)parse_spec(text);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(error_at("name = x\ninitial = 1, 1\nb = n^1.5\nc = 1\n").first == 3);
  CHECK(error_at("name = x\ninitial = 1, 1\nb = (n / 2)\nc = 1\n").first == 3);
  CHECK(error_at("name = x\ninitial = 1, 1\nb = n / 2 / 3\nc = 1\n").first == 3);
  CHECK(error_at("name = x\ninitial = 1, 1\nb = n +\nc = 1\n").first == 3);
  CHECK(error_at("name = x\ninitial = 1, 1\nb = n\n").first != 0);            // missing c
  CHECK(error_at("name = x\nname = y\ninitial = 1, 1\nb = n\nc = 1\n").first == 2);
  CHECK(error_at("name = x\ninitial = 1, 1\nb = n\nc = 1\nd = 2\n").first == 5);
  CHECK(error_at("name = x\ninitial = 1, 1\nb = n\nc = 1 / 0\n").first == 4);
  CHECK(error_at("just text\n") == std::pair<std::size_t, std::size_t>{1, 1});

  try {
    (void)parse_spec("name = x\ninitial = 1, 1\nb = 2 * m\nc = 1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 9);
  }
}

TEST_CASE("render and parse round trip on the catalog") {
  for (const auto& r : catalog()) {
    const Recurrence back = parse_spec(render_spec(r));
    CHECK(same_recurrence(back, r));
    CHECK(back.name == r.name);
    CHECK(back.offset == r.offset);
  }
}
