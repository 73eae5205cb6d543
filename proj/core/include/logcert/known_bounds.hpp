#pragma once

#include <optional>
#include <string_view>

#include "logcert/bound_series.hpp"

namespace logcert {

/// Published upper ratio bounds with the starting index they are proved from.
struct KnownBound {
  BoundSeries g;
  std::int64_t n_start = 0;
};

/// Four-term bound for apery-a (n >= 2).
BoundSeries apery_a_upper_bound();
/// Five-term bound for apery-b (n >= 20).
BoundSeries apery_b_upper_bound();
/// The apery-b series before its last rational part 1/50 was doubled.
BoundSeries apery_b_unadjusted_bound();
/// Five-term bound for cohen-rhin-u (n >= 100).
BoundSeries cohen_rhin_upper_bound();

std::optional<KnownBound> known_upper_bound(std::string_view seq);

}  // namespace logcert
