#include "logcert/report_json.hpp"

#include "logcert/errors.hpp"

namespace logcert {

json to_json(const BigRational& q) { return to_fraction_string(q); }

json to_json(const QuadExt& x) {
  return json{{"rat", to_fraction_string(x.rat())},
              {"irr", to_fraction_string(x.irr())},
              {"d", std::to_string(x.radicand())}};
}

json to_json(const Poly& p, std::string_view var) {
  json coeffs = json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(to_json(c));
  return json{{"text", p.to_string(var)}, {"coefficients", coeffs}};
}

json to_json(const RationalFunction& r) {
  return json{{"text", r.to_string()}, {"num", to_json(r.num())}, {"den", to_json(r.den())}};
}

json to_json(const BoundSeries& g) {
  json coeffs = json::array();
  for (const auto& c : g.coeffs) coeffs.push_back(to_json(c));
  return json{{"text", g.to_string()}, {"coefficients", coeffs}};
}

json to_json(const SequenceTable& t) {
  json values = json::array();
  for (const auto& v : t.values) values.push_back(to_json(v));
  return json{{"offset", t.offset}, {"values", values}};
}

json to_json(const ConvexityReport& r) {
  json violations = json::array();
  for (const auto& [level, n] : r.violations) violations.push_back(json{{"level", level}, {"n", n}});
  return json{{"level", r.level},
              {"onsetIndex", r.onset_index},
              {"firstIndex", r.first_index},
              {"horizon", r.horizon},
              {"degenerate", r.degenerate},
              {"violations", violations}};
}

json to_json(const CheckOutcome& c) {
  json j{{"name", c.name}, {"verdict", to_string(c.status)}, {"details", c.details}};
  if (c.witness) j["witness"] = *c.witness;
  if (c.bound_m) j["boundM"] = c.bound_m->get_str();
  return j;
}

json to_json(const CertificateReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return json{{"sequence", r.seq_name},
              {"N", r.n_start},
              {"claimFrom", r.claim_from},
              {"horizon", r.horizon},
              {"lowerBoundMode", to_string(r.mode)},
              {"f", to_json(r.f)},
              {"g", to_json(r.g)},
              {"checks", checks},
              {"verdict", to_string(r.verdict)}};
}

namespace {

json outcome_json(const CandidateOutcome& o) {
  json j{{"upperBound", o.upper_holds}, {"C3", o.c3_holds}, {"upperDetails", o.upper_details}};
  if (o.upper_witness) j["upperWitness"] = *o.upper_witness;
  if (o.c3_witness) j["C3Witness"] = *o.c3_witness;
  return j;
}

}  // namespace

json to_json(const SearchTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    json step{{"depth", s.depth},
              {"N", s.n_start},
              {"coefficient", to_json(s.coefficient)},
              {"candidate", to_json(s.candidate)},
              {"outcomes", outcome_json(s.outcome)}};
    if (s.depth > 0) step["equation"] = to_json(s.equation, "x");
    steps.push_back(std::move(step));
  }
  json adjustments = json::array();
  for (const auto& a : t.adjustments) {
    adjustments.push_back(
        json{{"index", a.index}, {"original", to_json(a.original)}, {"replacement", to_json(a.replacement)}});
  }
  json j{{"x0", to_json(t.x0)},
         {"rule", t.rule == UpperBoundRule::one_step ? "one-step" : "two-step"},
         {"nTried", t.n_tried},
         {"N", t.n_start},
         {"steps", steps},
         {"adjustments", adjustments},
         {"result", t.result ? to_json(*t.result) : json(nullptr)}};
  if (!t.failure.empty()) j["failure"] = t.failure;
  if (t.offending_equation) j["offendingEquation"] = to_json(*t.offending_equation, "x");
  return j;
}

BigRational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return BigRational(BigInt(std::to_string(j.get<long long>())));
  throw DomainError("expected a rational string");
}

QuadExt quad_from_json(const json& j) {
  if (!j.is_object()) return QuadExt(rational_from_json(j));
  const BigRational rat = j.contains("rat") ? rational_from_json(j.at("rat")) : BigRational(0);
  const BigRational irr = j.contains("irr") ? rational_from_json(j.at("irr")) : BigRational(0);
  std::int64_t d = 1;
  if (j.contains("d")) {
    const json& dj = j.at("d");
    d = dj.is_string() ? std::stoll(dj.get<std::string>()) : dj.get<std::int64_t>();
  }
  if (d == 1 && sgn(irr) != 0) return QuadExt(rat + irr);
  return QuadExt(rat, irr, d);
}

BoundSeries bound_series_from_json(const json& j) {
  const json* list = &j;
  if (j.is_object()) {
    if (!j.contains("coefficients")) throw DomainError("bound file object needs a \"coefficients\" list");
    list = &j.at("coefficients");
  }
  if (!list->is_array() || list->empty()) throw DomainError("bound series must be a non-empty list");
  BoundSeries g;
  try {
    for (const auto& c : *list) g.coeffs.push_back(quad_from_json(c));
    (void)g.radicand();
  } catch (const DomainError&) {
    throw;
  } catch (const std::exception& e) {
    throw DomainError(std::string("bad bound coefficient: ") + e.what());
  }
  return g;
}

}  // namespace logcert
