#include "logcert/bound_series.hpp"

#include "logcert/errors.hpp"

namespace logcert {

std::int64_t BoundSeries::radicand() const {
  std::int64_t d = 1;
  for (const auto& c : coeffs) d = common_radicand(d, c.radicand());
  return d;
}

QuadExt BoundSeries::eval(const BigRational& n) const {
  if (sgn(n) == 0) throw SingularityError("bound series evaluated", "0");
  QuadExt acc;
  BigRational inv_power = 1;
  for (const auto& c : coeffs) {
    acc += c * QuadExt(inv_power);
    inv_power /= n;
  }
  return acc;
}

std::string BoundSeries::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i > 0) out += " + ";
    out += "(" + coeffs[i].to_string() + ")";
    if (i == 1) out += "/n";
    if (i > 1) out += "/n^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

RationalFunction series_to_ratfunc(const BoundSeries& g) {
  if (g.coeffs.empty()) return RationalFunction();
  const int k = g.depth();
  std::vector<QuadExt> num(g.coeffs.size());
  for (int i = 0; i <= k; ++i) num[static_cast<std::size_t>(k - i)] = g.coeffs[static_cast<std::size_t>(i)];
  return RationalFunction(Poly(std::move(num)), Poly::monomial(QuadExt(1), k));
}

}  // namespace logcert
