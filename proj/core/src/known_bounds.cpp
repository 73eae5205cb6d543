#include "logcert/known_bounds.hpp"

namespace logcert {

namespace {

QuadExt q(const char* rat, const char* irr, std::int64_t d) {
  return QuadExt(parse_rational(rat), parse_rational(irr), d);
}

}  // namespace

BoundSeries apery_a_upper_bound() {
  return BoundSeries{{
      q("17", "12", 2),
      q("-51/2", "-18", 2),
      q("27/2", "609/64", 2),
      q("-645/256", "-225/128", 2),
  }};
}

BoundSeries apery_b_upper_bound() {
  BoundSeries g = apery_b_unadjusted_bound();
  g.coeffs[4] = q("1/25", "23/1250", 5);
  return g;
}

BoundSeries apery_b_unadjusted_bound() {
  return BoundSeries{{
      q("11/2", "5/2", 5),
      q("-11/2", "-5/2", 5),
      q("3/2", "7/10", 5),
      q("1/25", "0", 5),
      q("1/50", "23/1250", 5),
  }};
}

BoundSeries cohen_rhin_upper_bound() {
  return BoundSeries{{
      q("135", "78", 3),
      q("-675/2", "-195", 3),
      q("351", "9737/48", 3),
      q("-6045/32", "-3497/32", 3),
      q("2701/32", "841763/27648", 3),
  }};
}

std::optional<KnownBound> known_upper_bound(std::string_view seq) {
  if (seq == "apery-a") return KnownBound{apery_a_upper_bound(), 2};
  if (seq == "apery-b") return KnownBound{apery_b_upper_bound(), 20};
  if (seq == "cohen-rhin-u") return KnownBound{cohen_rhin_upper_bound(), 100};
  return std::nullopt;
}

}  // namespace logcert
