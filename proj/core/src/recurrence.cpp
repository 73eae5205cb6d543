#include "logcert/recurrence.hpp"

#include <cstdlib>
#include <sstream>

#include "logcert/errors.hpp"

namespace logcert {

namespace {

// Integer roots of a rational polynomial via the rational root theorem.
std::set<std::int64_t> integer_roots(const Poly& p) {
  std::set<std::int64_t> roots;
  if (p.degree() < 1) return roots;
  int low = 0;
  while (p.coeff(low).is_zero()) ++low;
  if (low > 0) roots.insert(0);
  const BigInt scale = denominator_lcm(p);
  const BigRational scaled = abs(p.coeff(low).rat() * BigRational(scale));
  BigInt trailing = scaled.get_num();
  if (!trailing.fits_slong_p()) {
    throw DomainError("denominator constant term too large for singularity analysis");
  }
  std::vector<long> divisors;
  const long t = trailing.get_si();
  for (long k = 1; k * k <= t; ++k) {
    if (t % k != 0) continue;
    divisors.push_back(k);
    if (k != t / k) divisors.push_back(t / k);
  }
  for (long k : divisors) {
    for (long cand : {k, -k}) {
      if (p.eval(QuadExt(cand)).is_zero()) roots.insert(cand);
    }
  }
  return roots;
}

void require_rational(const Poly& p, const std::string& what) {
  if (!p.is_rational()) throw DomainError(what + " must have rational coefficients");
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  BigInt r;
  if (k < 0 || k > n) return 0;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt catalan(std::int64_t k) { return binomial(2 * k, k) / (k + 1); }

}  // namespace

Recurrence make_recurrence(std::string name, const Poly& b_num, const Poly& b_den, const Poly& c_num,
                           const Poly& c_den, BigRational s0, BigRational s1, std::int64_t offset) {
  for (const Poly* p : {&b_num, &b_den, &c_num, &c_den}) require_rational(*p, "recurrence coefficient");
  s0.canonicalize();
  s1.canonicalize();
  if (sgn(s0) <= 0 || sgn(s1) <= 0) throw DomainError("initial values must be positive");
  Recurrence rec;
  rec.name = std::move(name);
  rec.b = RationalFunction(b_num, b_den);
  rec.c = RationalFunction(c_num, c_den);
  rec.initial = {s0, s1};
  rec.offset = offset;
  rec.singularities = integer_roots(b_den);
  rec.singularities.merge(integer_roots(c_den));
  return rec;
}

BigRational eval_rational(const RationalFunction& r, std::int64_t n) {
  const QuadExt v = r.eval(QuadExt(static_cast<long>(n)));
  if (!v.is_rational()) throw DomainError("irrational value where a rational was expected");
  return v.rat();
}

SequenceTable generate(const Recurrence& rec, std::size_t count) {
  if (count < 2) throw DomainError("generate needs count >= 2");
  SequenceTable t;
  t.offset = rec.offset;
  t.source = SequenceTable::Source::recurrence;
  t.values.reserve(count);
  t.values.push_back(rec.initial[0]);
  t.values.push_back(rec.initial[1]);
  for (std::size_t i = 2; i < count; ++i) {
    const std::int64_t n = rec.offset + static_cast<std::int64_t>(i);
    if (rec.singularities.count(n) != 0) {
      throw SingularityError("recurrence coefficient undefined", std::to_string(n));
    }
    BigRational next = eval_rational(rec.b, n) * t.values[i - 1] + eval_rational(rec.c, n) * t.values[i - 2];
    next.canonicalize();
    t.values.push_back(std::move(next));
  }
  return t;
}

bool has_direct_oracle(std::string_view seq) {
  return seq == "apery-a" || seq == "apery-b" || seq == "motzkin" || seq == "fine" ||
         seq == "franel-3" || seq == "franel-4" || seq == "schroder";
}

BigRational direct_oracle(std::string_view seq, std::int64_t n) {
  if (n < 0) throw DomainError("direct_oracle needs n >= 0");
  if (seq == "cohen-rhin-u") throw DomainError("cohen-rhin-u has no direct formula");
  BigInt sum = 0;
  if (seq == "apery-a") {
    for (std::int64_t k = 0; k <= n; ++k) {
      const BigInt x = binomial(n, k) * binomial(n + k, k);
      sum += x * x;
    }
  } else if (seq == "apery-b") {
    for (std::int64_t k = 0; k <= n; ++k) {
      const BigInt x = binomial(n, k);
      sum += x * x * binomial(n + k, k);
    }
  } else if (seq == "motzkin") {
    for (std::int64_t k = 0; 2 * k <= n; ++k) sum += binomial(n, 2 * k) * catalan(k);
  } else if (seq == "schroder") {
    for (std::int64_t k = 0; k <= n; ++k) sum += binomial(n + k, 2 * k) * catalan(k);
  } else if (seq == "franel-3" || seq == "franel-4") {
    const unsigned long e = seq == "franel-3" ? 3 : 4;
    for (std::int64_t k = 0; k <= n; ++k) {
      BigInt x;
      mpz_pow_ui(x.get_mpz_t(), binomial(n, k).get_mpz_t(), e);
      sum += x;
    }
  } else if (seq == "fine") {
    // Catalan(m) = 2 F_m + F_{m-1}, F_0 = 1.
    sum = 1;
    for (std::int64_t m = 1; m <= n; ++m) sum = (catalan(m) - sum) / 2;
  } else {
    throw DomainError("unknown sequence '" + std::string(seq) + "'");
  }
  return BigRational(sum);
}

SequenceTable oracle_table(std::string_view seq, std::int64_t first, std::size_t count) {
  SequenceTable t;
  t.offset = first;
  t.source = SequenceTable::Source::oracle;
  for (std::size_t i = 0; i < count; ++i) t.values.push_back(direct_oracle(seq, first + static_cast<std::int64_t>(i)));
  return t;
}

namespace {

constexpr std::string_view kCatalogSpecs[] = {
    R"(name = apery-a
initial = 1, 5
b = (34*n^3 - 51*n^2 + 27*n - 5) / n^3
c = -(n - 1)^3 / n^3
)",
    R"(name = apery-b
initial = 1, 3
b = (11*n^2 - 11*n + 3) / n^2
c = (n - 1)^2 / n^2
)",
    // U_{n+1} = R(n) U_n + G(n) U_{n-1}, re-indexed to S_n = R(n-1) S_{n-1} + G(n-1) S_{n-2}.
    R"(name = cohen-rhin-u
initial = 1, 12
b = 3*(2*n - 1)*(3*n^2 - 3*n + 1)*(15*n^2 - 15*n + 4) / n^5
c = 3*(n - 1)^3*(3*n - 4)*(3*n - 2) / n^5
)",
    R"(name = motzkin
initial = 1, 1
b = (2*n + 1) / (n + 2)
c = (3*n - 3) / (n + 2)
)",
    // F_1 = 0, so the positive part starts at F_2 = 1, F_3 = 2.
    R"(name = fine
offset = 2
initial = 1, 2
b = (7*n - 5) / (2*n + 2)
c = (4*n - 2) / (2*n + 2)
)",
    R"(name = franel-3
initial = 1, 2
b = (7*n^2 - 7*n + 2) / n^2
c = 8*(n - 1)^2 / n^2
)",
    R"(name = franel-4
initial = 1, 2
b = 2*(2*n - 1)*(3*n^2 - 3*n + 1) / n^3
c = 4*(n - 1)*(4*n - 5)*(4*n - 3) / n^3
)",
    R"(name = schroder
initial = 1, 2
b = 3*(2*n - 1) / (n + 1)
c = -(n - 2) / (n + 1)
)",
};

}  // namespace

const std::vector<Recurrence>& catalog() {
  static const std::vector<Recurrence> entries = [] {
    std::vector<Recurrence> out;
    for (auto spec : kCatalogSpecs) out.push_back(parse_spec(spec));
    return out;
  }();
  return entries;
}

const Recurrence& catalog_entry(std::string_view name) {
  for (const auto& rec : catalog()) {
    if (rec.name == name) return rec;
  }
  throw DomainError("unknown catalog sequence '" + std::string(name) + "'");
}

namespace {

std::string render_ratfunc(const RationalFunction& r) {
  BigInt scale = denominator_lcm(r.num());
  mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), denominator_lcm(r.den()).get_mpz_t());
  Poly num = r.num();
  Poly den = r.den();
  num.scale(QuadExt(BigRational(scale)));
  den.scale(QuadExt(BigRational(scale)));
  return "(" + num.to_string() + ") / (" + den.to_string() + ")";
}

}  // namespace

std::string render_spec(const Recurrence& rec) {
  std::ostringstream os;
  os << "name = " << rec.name << "\n";
  os << "offset = " << rec.offset << "\n";
  os << "initial = " << to_short_string(rec.initial[0]) << ", " << to_short_string(rec.initial[1]) << "\n";
  os << "b = " << render_ratfunc(rec.b) << "\n";
  os << "c = " << render_ratfunc(rec.c) << "\n";
  return os.str();
}

bool same_recurrence(const Recurrence& a, const Recurrence& b) {
  return a.name == b.name && a.offset == b.offset && a.initial == b.initial && a.b == b.b && a.c == b.c;
}

}  // namespace logcert
