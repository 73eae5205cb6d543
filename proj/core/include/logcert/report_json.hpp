#pragma once

#include <nlohmann/json.hpp>

#include "logcert/boundsearch.hpp"
#include "logcert/certify.hpp"
#include "logcert/convexity.hpp"

namespace logcert {

using json = nlohmann::json;

// Exact values travel as strings: "num/den" for rationals and
// {"rat", "irr", "d"} objects for quadratic values.
json to_json(const BigRational& q);
json to_json(const QuadExt& x);
json to_json(const Poly& p, std::string_view var = "n");
json to_json(const RationalFunction& r);
json to_json(const BoundSeries& g);
json to_json(const SequenceTable& t);
json to_json(const ConvexityReport& r);
json to_json(const CheckOutcome& c);
json to_json(const CertificateReport& r);
json to_json(const SearchTrace& t);

BigRational rational_from_json(const json& j);
QuadExt quad_from_json(const json& j);
/// Accepts a bare list of {rat, irr, d} objects, or an object whose
/// "coefficients" member is such a list. Throws DomainError on bad input.
BoundSeries bound_series_from_json(const json& j);

}  // namespace logcert
