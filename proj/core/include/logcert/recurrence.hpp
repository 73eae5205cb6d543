#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "logcert/rational_function.hpp"

namespace logcert {

/// S_n = b(n) S_{n-1} + c(n) S_{n-2} for n >= offset + 2, with rational
/// coefficient functions and positive initial values S_offset, S_{offset+1}.
struct Recurrence {
  std::string name;
  RationalFunction b;
  RationalFunction c;
  std::array<BigRational, 2> initial;
  std::int64_t offset = 0;
  /// Integers where the denominator of b or c (as written) vanishes.
  std::set<std::int64_t> singularities;
};

/// Builds a Recurrence; singularities come from the denominators as given,
/// before any cancellation. Throws DomainError on non-positive initial
/// values or irrational coefficients.
Recurrence make_recurrence(std::string name, const Poly& b_num, const Poly& b_den, const Poly& c_num,
                           const Poly& c_den, BigRational s0, BigRational s1, std::int64_t offset = 0);

struct SequenceTable {
  enum class Source { recurrence, oracle, derived };

  std::vector<BigRational> values;
  /// Index of values[0].
  std::int64_t offset = 0;
  Source source = Source::recurrence;

  std::int64_t last_index() const { return offset + static_cast<std::int64_t>(values.size()) - 1; }
  const BigRational& at(std::int64_t n) const { return values.at(static_cast<std::size_t>(n - offset)); }
};

/// Exact terms S_offset .. S_{offset+count-1}. Throws SingularityError when a
/// generated index hits a singularity and DomainError when count < 2.
SequenceTable generate(const Recurrence& rec, std::size_t count);

/// b(n) as an exact rational; the coefficient functions are rational.
BigRational eval_rational(const RationalFunction& r, std::int64_t n);

/// Value of a catalog sequence by explicit summation, independent of its
/// recurrence. Throws DomainError for cohen-rhin-u (no direct formula) and
/// unknown identifiers.
BigRational direct_oracle(std::string_view seq, std::int64_t n);
SequenceTable oracle_table(std::string_view seq, std::int64_t first, std::size_t count);
bool has_direct_oracle(std::string_view seq);

/// The eight built-in recurrences: apery-a, apery-b, cohen-rhin-u, motzkin,
/// fine, franel-3, franel-4, schroder.
const std::vector<Recurrence>& catalog();
/// Throws DomainError for unknown names.
const Recurrence& catalog_entry(std::string_view name);

/// Parses the line-oriented recurrence spec format:
///
///     name = <identifier>
///     offset = <integer>               # optional, default 0
///     initial = <rational>, <rational>
///     b = <polyexpr> / <polyexpr>      # single top-level division
///     c = <polyexpr> / <polyexpr>
///
/// polyexpr: integer literals, n, + - * ^ (non-negative integer exponent),
/// parentheses. '#' starts a comment. Throws ParseError with line/column.
Recurrence parse_spec(std::string_view text);

/// Inverse of parse_spec: integer-coefficient polyexpr rendering.
std::string render_spec(const Recurrence& rec);

/// Structural equality: name, offset, initial values, b and c.
bool same_recurrence(const Recurrence& a, const Recurrence& b);

}  // namespace logcert
