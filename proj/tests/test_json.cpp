#include <doctest.h>

#include <fstream>

#include "logcert/errors.hpp"
#include "logcert/known_bounds.hpp"
#include "logcert/report_json.hpp"
#include "oracles.hpp"

using namespace logcert;

TEST_CASE("rationals travel as exact strings") {
  oracle::Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    BigRational r(rng.range(-100000, 100000), rng.range(1, 100000));
    r.canonicalize();
    const json j = to_json(r);
    CHECK(j.is_string());
    CHECK(rational_from_json(json::parse(j.dump())) == r);
  }
  CHECK(to_json(parse_rational("-6/4")) == "-3/2");
}

TEST_CASE("quadratic values round trip") {
  const QuadExt x(parse_rational("-645/256"), parse_rational("-225/128"), 2);
  CHECK(quad_from_json(json::parse(to_json(x).dump())) == x);
  CHECK(quad_from_json(to_json(QuadExt(7))) == QuadExt(7));
}

TEST_CASE("bound series round trip and shipped files") {
  for (const auto& g : {apery_a_upper_bound(), apery_b_upper_bound(), cohen_rhin_upper_bound()}) {
    CHECK(bound_series_from_json(to_json(g)) == g);
    CHECK(bound_series_from_json(to_json(g)["coefficients"]) == g);
  }
  struct File {
    const char* name;
    BoundSeries g;
  };
  for (const File& f : {File{"apery-a", apery_a_upper_bound()}, File{"apery-b", apery_b_upper_bound()},
                        File{"apery-b-unadjusted", apery_b_unadjusted_bound()},
                        File{"cohen-rhin-u", cohen_rhin_upper_bound()}}) {
    std::ifstream in(std::string(LOGCERT_DATA_DIR) + "/bounds/" + f.name + ".json");
    REQUIRE(in);
    CHECK(bound_series_from_json(json::parse(in)) == f.g);
  }
}

TEST_CASE("malformed bound files") {
  CHECK_THROWS_AS(bound_series_from_json(json::parse("{}")), DomainError);
  CHECK_THROWS_AS(bound_series_from_json(json::parse("[{\"rat\": \"x\"}]")), DomainError);
  CHECK_THROWS_AS(bound_series_from_json(json::parse("[{\"rat\": 1, \"irr\": 1, \"d\": 4}]")), DomainError);
  // Missing parts default to zero.
  CHECK(bound_series_from_json(json::parse("[{\"rat\": \"3/2\"}]")) == BoundSeries{{QuadExt(parse_rational("3/2"))}});
  CHECK_THROWS_AS(bound_series_from_json(json::parse("[]")), DomainError);
}

TEST_CASE("certificate report layout") {
  const Recurrence& rec = catalog_entry("apery-a");
  const CertificateReport r = verify_certificate(rec, default_lower_bound(rec, 2), apery_a_upper_bound(), 2, 50);
  const json j = to_json(r);
  CHECK(j["verdict"] == "certified");
  CHECK(j["N"] == 2);
  CHECK(j["checks"].size() == std::size(kCertificateChecks));
  CHECK(j["checks"][0]["name"] == "a3-negative");
  CHECK(bound_series_from_json(j["g"]) == apery_a_upper_bound());
}
