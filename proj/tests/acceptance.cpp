// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "logcert/boundsearch.hpp"
#include "logcert/errors.hpp"
#include "logcert/certify.hpp"
#include "logcert/convexity.hpp"
#include "logcert/known_bounds.hpp"
#include "logcert/report_json.hpp"
#include "oracles.hpp"

using namespace logcert;

namespace {

const Poly n = Poly::variable();

struct Result {
  bool pass = true;
  /// Failed a requirement not listed as a known defect.
  bool hard_fail = false;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) hard_fail = true;
    known_gap(ok, what);
  }
  /// A requirement whose statement is known to be unattainable: it still
  /// turns the line red but does not fail the suite.
  void known_gap(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

QuadExt q(const char* rat, const char* irr, std::int64_t d) {
  return QuadExt(parse_rational(rat), parse_rational(irr), d);
}

BoundSeries load_bound(const std::string& name) {
  std::ifstream in(std::string(LOGCERT_DATA_DIR) + "/bounds/" + name + ".json");
  if (!in) throw DomainError("missing bound file " + name);
  return bound_series_from_json(json::parse(in));
}

// ---------------------------------------------------------------------------

Result sequence_fidelity() {
  Result r;
  const auto t0 = std::chrono::steady_clock::now();
  for (const char* name : {"apery-a", "apery-b", "motzkin", "fine", "franel-3", "franel-4", "schroder"}) {
    const Recurrence& rec = catalog_entry(name);
    const SequenceTable t = generate(rec, static_cast<std::size_t>(201 - rec.offset));
    for (std::int64_t k = rec.offset; k <= 200; ++k) {
      if (t.at(k) != direct_oracle(name, k)) {
        r.require(false, std::string(name) + " differs at " + std::to_string(k));
        break;
      }
    }
  }
  auto prefix = [](const char* name, std::initializer_list<long> want) {
    const SequenceTable t = generate(catalog_entry(name), want.size());
    return t.values == std::vector<BigRational>(want.begin(), want.end());
  };
  r.require(prefix("apery-a", {1, 5, 73, 1445, 33001}), "apery-a prefix");
  r.require(prefix("apery-b", {1, 3, 19, 147}), "apery-b prefix");
  r.require(prefix("cohen-rhin-u", {1, 12, 804}), "cohen-rhin-u prefix");
  // The U recurrence against its original indexing.
  r.require(generate(catalog_entry("cohen-rhin-u"), 60).values == oracle::cohen_rhin_prefix(60),
            "cohen-rhin-u against original recurrence");
  const double s = seconds_since(t0);
  r.require(s < 10, "runtime above 10 s");
  return r;
}

Result integrality() {
  Result r;
  for (const auto& rec : catalog()) {
    const SequenceTable t = generate(rec, static_cast<std::size_t>(1001 - rec.offset));
    for (std::int64_t k = rec.offset; k <= 1000; ++k) {
      const BigRational& v = t.at(k);
      if (v.get_den() != 1 || sgn(v) <= 0) {
        r.require(false, rec.name + " not a positive integer at " + std::to_string(k));
        break;
      }
    }
  }
  return r;
}

Result bound_reproduction() {
  Result r;
  const Recurrence& rec = catalog_entry("apery-a");
  const SearchTrace t = search_upper_bound(rec, 2, 4, theorem_coeffs(rec));
  const BoundSeries want{{q("17", "12", 2), q("-51/2", "-18", 2), q("27/2", "609/64", 2),
                          q("-645/256", "-225/128", 2)}};
  r.require(t.result.has_value() && *t.result == want, "search result differs from the expected series");
  if (t.steps.size() > 1) {
    const Poly x = Poly::variable();
    const Poly want1 = -Poly(q("-24", "17", 2)) * (48 * x + Poly(q("1224", "864", 2)));
    const Poly& got = t.steps[1].equation;
    const QuadExt lambda = got.leading() / want1.leading();
    r.require(lambda.is_rational() && got == Poly(lambda) * want1, "depth-1 equation is not a rational multiple");
    r.note("depth-1 equation = " + lambda.to_string() + " times the expected factorization");
  } else {
    r.require(false, "no depth-1 step");
  }
  return r;
}

Result certificates() {
  Result r;
  struct Case {
    const char* name;
    const char* file;
    std::int64_t N;
  };
  for (const Case& c : {Case{"apery-a", "apery-a", 2}, Case{"apery-b", "apery-b", 20},
                        Case{"cohen-rhin-u", "cohen-rhin-u", 100}}) {
    const auto t0 = std::chrono::steady_clock::now();
    const Recurrence& rec = catalog_entry(c.name);
    const CertificateReport rep =
        verify_certificate(rec, default_lower_bound(rec, c.N), load_bound(c.file), c.N, 1000);
    const double s = seconds_since(t0);
    r.require(rep.verdict == CertificateVerdict::certified, std::string(c.name) + " " + to_string(rep.verdict));
    r.require(s < 60, std::string(c.name) + " above 60 s");
    if (std::string(c.name) == "apery-b") {
      r.require(rep.claim_from == 1 && rep.n_start == 20, "apery-b base window is not 1..19");
    }
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << c.name << " " << s << " s";
    r.note(os.str());
  }
  return r;
}

Result closed_forms() {
  Result r;
  const Poly r2 = Poly(QuadExt::sqrt(2));
  const RationalFunction a_want(
      9 * Poly(q("17", "-12", 2)) * (5664 * n * n - 3560 * r2 * n + Poly(1225)),
      256 * (256 * n.pow(3) - 384 * n * n - 60 * r2 * n + 288 * n + 90 * r2 - Poly(165)) * (n + Poly(1)).pow(3));
  const RationalFunction P = series_to_ratfunc(apery_a_upper_bound());
  r.require(one_step_condition(catalog_entry("apery-a"), P) == a_want, "apery-a one-step expression");

  const Poly r5 = Poly(QuadExt::sqrt(5));
  const Poly J = 1718750 * n.pow(6) - 4656250 * r5 * n.pow(5) - 18026250 * n.pow(5) + 98010000 * n.pow(4) +
                 38885750 * r5 * n.pow(4) - 136205250 * r5 * n.pow(3) - 310595950 * n.pow(3) +
                 248642319 * r5 * n * n + 557184100 * n * n - 233557457 * r5 * n - 522290000 * n +
                 Poly(199152500) + 89063225 * r5;
  const Poly K = 2500 * n.pow(6) - 30000 * n.pow(5) + 150000 * n.pow(4) - 500 * r5 * n.pow(4) -
                 401100 * n.pow(3) + 4500 * r5 * n.pow(3) + 642325 * n * n - 30881 * r5 * n * n - 619575 * n +
                 78143 * r5 * n - 60525 * r5 + Poly(278125);
  const RationalFunction b_want(Poly(q("-275", "123", 5)) * J, 1250 * n.pow(4) * K);
  const RationalFunction T = series_to_ratfunc(apery_b_upper_bound());
  r.require(two_step_condition(catalog_entry("apery-b"), T) == b_want, "apery-b two-step expression");
  return r;
}

Result negative_control() {
  Result r;
  const Recurrence& rec = catalog_entry("apery-b");
  const UpperBoundVerification v = verify_upper_bound(rec, load_bound("apery-b-unadjusted"), 20);
  r.require(!v.holds(), "unadjusted series passes");
  if (v.witness) r.note("unadjusted fails: " + v.details);
  const auto out = adjust_coefficients(load_bound("apery-b-unadjusted"), rec, 20, theorem_coeffs(rec));
  r.require(out.has_value() && out->g == apery_b_upper_bound(), "adjustment does not recover the bound");
  if (out && out->change) {
    r.require(out->change->index == 4 && out->change->replacement.rat() == 2 * out->change->original.rat() &&
                  out->change->replacement.irr() == out->change->original.irr(),
              "adjustment is not a doubling of the rational part at index 4");
  }
  return r;
}

// Cubic coefficients at n from the definition alone: the left side of the
// identity divided by S_{n+1} S_{n-1}^3 is a cubic in x = S_n / S_{n-1};
// four samples determine it.
std::array<BigRational, 4> interpolated_cubic(const Recurrence& rec, long k) {
  auto b = [&](long m) { return eval_rational(rec.b, m); };
  auto c = [&](long m) { return eval_rational(rec.c, m); };
  std::array<BigRational, 4> xs{1, 2, 3, 5}, ys;
  for (std::size_t i = 0; i < 4; ++i) {
    const BigRational s0 = 1, s1 = xs[i];
    const BigRational s2 = b(k + 1) * s1 + c(k + 1) * s0;
    const BigRational s3 = b(k + 2) * s2 + c(k + 2) * s1;
    const BigRational s4 = b(k + 3) * s3 + c(k + 3) * s2;
    const BigRational x = s0 * s2 - s1 * s1, y = s1 * s3 - s2 * s2, z = s2 * s4 - s3 * s3;
    ys[i] = (x * z - y * y) / s2;
  }
  // Newton divided differences, then expand to monomial coefficients.
  std::array<BigRational, 4> dd = ys;
  for (std::size_t j = 1; j < 4; ++j)
    for (std::size_t i = 3; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
  std::array<BigRational, 4> coef{0, 0, 0, 0};
  for (std::size_t i = 4; i-- > 0;) {
    // coef = coef * (x - xs[i]) + dd[i]
    std::array<BigRational, 4> next{0, 0, 0, 0};
    for (std::size_t p = 0; p < 3; ++p) {
      next[p + 1] += coef[p];
      next[p] -= coef[p] * xs[i];
    }
    next[0] += dd[i];
    coef = next;
  }
  return coef;  // a0, a1, a2, a3
}

Result cubic_identity() {
  Result r;
  oracle::Rng rng(7);
  int agreed = 0;
  auto random_poly = [&](int deg) {
    std::vector<QuadExt> c;
    for (int i = 0; i <= deg; ++i) c.push_back(QuadExt(rng.range(-9, 9)));
    if (c.back().is_zero()) c.back() = QuadExt(1);
    return Poly(c);
  };
  while (agreed < 500) {
    const Recurrence rec = make_recurrence("random", random_poly(2), random_poly(1), random_poly(2),
                                           random_poly(1), 1, 1, 0);
    const long k = rng.range(1, 30);
    bool singular = false;
    for (long m = k + 1; m <= k + 3; ++m) singular = singular || rec.singularities.count(m) != 0;
    if (singular) continue;
    BigRational s0(rng.range(1, 500), rng.range(1, 30)), s1(rng.range(1, 500), rng.range(1, 30));
    s0.canonicalize();
    s1.canonicalize();
    const IdentitySides sides = cubic_residual_identity(rec, k, s0, s1);
    if (sides.left != sides.right) {
      r.require(false, "identity fails for instance " + std::to_string(agreed));
      break;
    }
    ++agreed;
  }
  r.note(std::to_string(agreed) + "/500 identity instances");

  // Constant coefficients, against the interpolation oracle.
  bool collapse = true, a2_claim = true;
  for (auto [bv, cv] : {std::pair{2L, 1L}, {3L, -1L}, {5L, 7L}, {1L, 3L}}) {
    const Recurrence rec = make_recurrence("const", Poly(bv), Poly(1), Poly(cv), Poly(1), 1, 1, 0);
    const CriterionCoeffs k = theorem_coeffs(rec);
    const auto want = interpolated_cubic(rec, 4);
    collapse = collapse && k.a3.is_zero() && k.a1.is_zero() && k.a0.is_zero() && want[3] == 0 &&
               want[1] == 0 && want[0] == 0;
    r.require(eval_rational(k.a2, 4) == want[2], "library a2 disagrees with the oracle");
    a2_claim = a2_claim && want[2] == BigRational(bv * bv * cv);
  }
  r.require(collapse, "a3 = a1 = a0 = 0 collapse");
  r.known_gap(a2_claim, "[known defect] a2 = b^2 c does not hold: library and interpolation oracle both give a2 = 0");
  return r;
}

std::string onset_line(const std::vector<ConvexityReport>& reps) {
  std::string s;
  for (const auto& rep : reps) {
    if (!s.empty()) s += ",";
    s += std::to_string(rep.onset_index);
  }
  return s;
}

Result doslic() {
  Result r;
  for (const char* name : {"motzkin", "fine", "franel-3", "franel-4", "schroder"}) {
    const Recurrence& rec = catalog_entry(name);
    const SequenceTable t = generate(rec, static_cast<std::size_t>(504 - rec.offset));
    const auto reps = check_k_log_convex(t, 2);
    const auto& lvl = reps.at(1);
    r.require(!lvl.degenerate && lvl.onset_index <= lvl.horizon && lvl.horizon >= 500,
              std::string(name) + " has no level-1 onset");
    r.note(std::string(name) + " onset " + std::to_string(lvl.onset_index));
  }
  return r;
}

Result deep_level_evidence() {
  Result r;
  const auto t0 = std::chrono::steady_clock::now();
  for (const char* name : {"apery-a", "apery-b", "cohen-rhin-u", "schroder"}) {
    const Recurrence& rec = catalog_entry(name);
    const SequenceTable t = generate(rec, static_cast<std::size_t>(308 - rec.offset));
    const auto reps = check_k_log_convex(t, 4);
    r.require(reps.size() == 4, std::string(name) + " degenerate level");
    for (const auto& rep : reps) {
      bool late = false;
      for (const auto& [lvl, at] : rep.violations) late = late || at >= rep.onset_index;
      r.require(!late && rep.onset_index <= rep.horizon && rep.horizon >= 300,
                std::string(name) + " level " + std::to_string(rep.level) + " fails at the horizon");
    }
    r.note(std::string(name) + " onsets " + onset_line(reps));
  }
  r.require(seconds_since(t0) < 300, "runtime above 5 min");
  return r;
}

// Exact sign of p(k) over Q(sqrt 2) with cleared denominators.
Sign brute_sign(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b, long k) {
  mpz_class x = 0, y = 0;
  for (std::size_t i = a.size(); i-- > 0;) {
    x = x * k + a[i];
    y = y * k + b[i];
  }
  const int sx = sgn(x), sy = sgn(y);
  if (sx >= 0 && sy >= 0) return sx + sy == 0 ? Sign::zero : Sign::positive;
  if (sx <= 0 && sy <= 0) return Sign::negative;
  const mpz_class lhs = x * x, rhs = 2 * y * y;
  const int cmp = ::cmp(lhs, rhs);
  if (cmp == 0) return Sign::zero;
  return (cmp > 0) == (sx > 0) ? Sign::positive : Sign::negative;
}

Result decider_equivalence() {
  Result r;
  oracle::Rng rng(10);
  int compared = 0;
  long longest = 0;
  while (compared < 200) {
    const int deg = static_cast<int>(rng.range(0, 6));
    std::vector<QuadExt> c;
    for (int i = 0; i <= deg; ++i) {
      BigRational x(rng.range(-100, 100), rng.range(1, 100)), y(rng.range(-100, 100), rng.range(1, 100));
      x.canonicalize();
      y.canonicalize();
      c.push_back(QuadExt(x, y, 2));
    }
    const Poly p(c);
    if (p.is_zero()) continue;
    const long N = rng.range(1, 50);
    mpz_class L = 1;
    for (const auto& v : c) {
      L = lcm(L, v.rat().get_den());
      L = lcm(L, v.irr().get_den());
    }
    std::vector<mpz_class> a, b;
    for (const auto& v : c) {
      a.push_back(mpz_class(v.rat() * L));
      b.push_back(mpz_class(v.irr() * L));
    }
    const mpz_class M = crossover_bound(p, N);
    const long hi = M.get_si() + 1000;
    std::optional<long> first;
    for (long k = N; k <= hi && !first; ++k)
      if (brute_sign(a, b, k) != Sign::positive) first = k;
    longest = std::max(longest, hi - N);
    const PositivityResult res = poly_positive_from(p, N);
    const bool agree = first ? (!res.holds() && res.witness && *res.witness == *first) : res.holds();
    if (!agree) {
      r.require(false, "disagreement on " + p.to_string());
      break;
    }
    ++compared;
  }
  r.note(std::to_string(compared) + " polynomials, longest scan " + std::to_string(longest));
  return r;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Result()> run;
};

}  // namespace

int main() {
  const Criterion all[] = {
      {1, "sequence fidelity", sequence_fidelity},
      {2, "integrality and positivity through n = 1000", integrality},
      {3, "bound search reproduces the Apery A series", bound_reproduction},
      {4, "certificates for apery-a, apery-b, cohen-rhin-u", certificates},
      {5, "closed-form step conditions", closed_forms},
      {6, "negative control and coefficient adjustment", negative_control},
      {7, "cubic identity and constant-coefficient collapse", cubic_identity},
      {8, "level-1 onsets for the Doslic sequences", doslic},
      {9, "k = 4 evidence through n = 300", deep_level_evidence},
      {10, "positivity decider against brute force", decider_equivalence},
  };
  int unexpected = 0;
  for (const Criterion& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.pass = false;
      r.hard_fail = true;
      r.detail = std::string("exception: ") + e.what();
    }
    const double s = seconds_since(t0);
    std::printf("%s  %2d  %-50s %7.2fs  %s\n", r.pass ? "PASS" : "FAIL", c.id, c.title, s, r.detail.c_str());
    std::fflush(stdout);
    if (r.hard_fail) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
