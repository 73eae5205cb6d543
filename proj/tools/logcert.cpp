#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "logcert/boundsearch.hpp"
#include "logcert/certify.hpp"
#include "logcert/convexity.hpp"
#include "logcert/errors.hpp"
#include "logcert/known_bounds.hpp"
#include "logcert/report_json.hpp"

namespace {

using namespace logcert;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;

// Raised for bad user input that CLI11 cannot see (unknown sequence, etc).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string sequence;
  std::size_t count = 10;
  int k = 2;
  std::optional<std::int64_t> n_start;
  std::optional<std::int64_t> claim_from;
  std::int64_t horizon = 1000;
  int max_depth = 6;
  std::string bound_file;
  std::string format = "text";
  std::string output;
};

Recurrence resolve(const std::string& selector) {
  for (const auto& r : catalog()) {
    if (r.name == selector) return r;
  }
  if (std::filesystem::is_regular_file(selector)) {
    std::ifstream in(selector);
    std::stringstream text;
    text << in.rdbuf();
    try {
      return parse_spec(text.str());
    } catch (const ParseError& e) {
      throw UsageError(selector + ": " + e.what());
    }
  }
  std::string names;
  for (const auto& r : catalog()) names += (names.empty() ? "" : ", ") + r.name;
  throw UsageError("unknown sequence '" + selector + "' (catalog: " + names + ", or a spec-file path)");
}

std::string value_text(const BigRational& q) { return to_short_string(q); }

// --- gen / oracle -----------------------------------------------------------

int emit_table(const SequenceTable& t, const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == "json") {
    json j = to_json(t);
    j["sequence"] = cfg.sequence;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& v : t.values) out << value_text(v) << "\n";
  }
  return kExitOk;
}

int run_gen(const RunConfig& cfg, std::ostream& out) {
  return emit_table(generate(resolve(cfg.sequence), cfg.count), cfg, out);
}

int run_oracle(const RunConfig& cfg, std::ostream& out) {
  const Recurrence rec = resolve(cfg.sequence);
  if (!has_direct_oracle(rec.name)) throw UsageError("no direct formula for '" + rec.name + "'");
  return emit_table(oracle_table(rec.name, rec.offset, cfg.count), cfg, out);
}

// --- check ------------------------------------------------------------------

int run_check(const RunConfig& cfg, std::ostream& out) {
  const Recurrence rec = resolve(cfg.sequence);
  const SequenceTable t = generate(rec, cfg.count);
  const auto reports = check_k_log_convex(t, cfg.k);

  bool violation = false;
  bool degenerate = false;
  for (const auto& r : reports) {
    violation = violation || !r.violations.empty();
    degenerate = degenerate || r.degenerate;
  }
  if (cfg.format == "json") {
    json levels = json::array();
    for (const auto& r : reports) levels.push_back(to_json(r));
    out << json{{"sequence", rec.name}, {"count", cfg.count}, {"k", cfg.k}, {"levels", levels}}.dump(2) << "\n";
  } else {
    out << rec.name << ": " << cfg.count << " terms, k = " << cfg.k << "\n";
    for (const auto& r : reports) {
      out << "  level " << r.level << ": ";
      if (r.degenerate) {
        out << "degenerate (no positive entries)\n";
        continue;
      }
      out << "strict from n = " << r.onset_index << " (scanned " << r.first_index << ".." << r.horizon << ", "
          << r.violations.size() << (r.violations.size() == 1 ? " violation" : " violations");
      if (!r.violations.empty()) {
        out << ", at n =";
        std::size_t shown = 0;
        for (const auto& v : r.violations) {
          if (++shown > 10) {
            out << " ...";
            break;
          }
          out << " " << v.second;
        }
      }
      out << ")\n";
    }
  }
  if (violation) return kExitViolation;
  return degenerate ? kExitInconclusive : kExitOk;
}

// --- bounds -----------------------------------------------------------------

std::int64_t default_start(const Recurrence& rec) { return std::max<std::int64_t>(rec.offset + 2, 2); }

void print_trace(const SearchTrace& tr, std::ostream& out) {
  out << "x0 = " << tr.x0 << "\n";
  out << "rule: " << (tr.rule == UpperBoundRule::one_step ? "one-step (c < 0)" : "two-step (c > 0)") << "\n";
  for (const auto& s : tr.steps) {
    out << "  N = " << s.n_start << ", depth " << s.depth << ": x = " << s.coefficient;
    if (s.depth > 0) out << "  [from " << s.equation.to_string("x") << " = 0]";
    out << "\n      upper bound " << (s.outcome.upper_holds ? "holds" : "fails");
    if (s.outcome.upper_witness) out << " (" << *s.outcome.upper_witness << ")";
    out << ", C3 " << (s.outcome.c3_holds ? "holds" : "fails");
    if (s.outcome.c3_witness) out << " (n = " << *s.outcome.c3_witness << ")";
    out << "\n";
  }
  for (const auto& a : tr.adjustments) {
    out << "  adjusted x" << a.index << ": " << a.original << " -> " << a.replacement << "\n";
  }
  if (tr.result) {
    out << "g(n) = " << tr.result->to_string() << "  (n >= " << tr.n_start << ")\n";
  } else {
    out << "no bound found: " << tr.failure << "\n";
  }
}

int run_bounds(const RunConfig& cfg, std::ostream& out) {
  const Recurrence rec = resolve(cfg.sequence);
  const std::int64_t N = cfg.n_start.value_or(default_start(rec));
  const SearchTrace tr = search_upper_bound(rec, N, cfg.max_depth, theorem_coeffs(rec));
  if (cfg.format == "json") {
    json j = to_json(tr);
    j["sequence"] = rec.name;
    out << j.dump(2) << "\n";
  } else {
    out << rec.name << ": upper-bound search from N = " << N << ", max depth " << cfg.max_depth << "\n";
    print_trace(tr, out);
  }
  return tr.result ? kExitOk : kExitInconclusive;
}

// --- certify ----------------------------------------------------------------

int verdict_exit(CertificateVerdict v) {
  switch (v) {
    case CertificateVerdict::certified:
      return kExitOk;
    case CertificateVerdict::refuted:
      return kExitViolation;
    case CertificateVerdict::inconclusive:
      return kExitInconclusive;
  }
  return kExitInconclusive;
}

BoundSeries read_bound_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read bound file '" + path + "'");
  try {
    return bound_series_from_json(json::parse(in));
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const DomainError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

struct CertifyAttempt {
  std::optional<CertificateReport> report;
  std::optional<SearchTrace> trace;
  std::string failure;
};

CertifyAttempt attempt(const Recurrence& rec, std::int64_t N, const std::optional<BoundSeries>& bound,
                       const RunConfig& cfg) {
  CertifyAttempt a;
  BoundSeries g;
  if (bound) {
    g = *bound;
  } else {
    a.trace = search_upper_bound(rec, N, cfg.max_depth, theorem_coeffs(rec));
    if (!a.trace->result) {
      a.failure = "upper-bound search failed: " + a.trace->failure;
      return a;
    }
    g = *a.trace->result;
    N = a.trace->n_start;
  }
  LowerBoundPlan plan;
  try {
    plan = default_lower_bound(rec, N);
  } catch (const DomainError& e) {
    a.failure = std::string("lower bound: ") + e.what();
    return a;
  }
  a.report = verify_certificate(rec, plan, g, N, std::max(cfg.horizon, N + 3), cfg.claim_from);
  return a;
}

void print_report(const CertificateReport& r, std::ostream& out) {
  out << r.seq_name << ": strict 2-log-convexity for n >= " << r.claim_from << "\n";
  out << "  N = " << r.n_start << ", horizon = " << r.horizon << "\n";
  out << "  f(n) = " << r.f.to_string() << "  [" << to_string(r.mode) << "]\n";
  out << "  g(n) = " << r.g.to_string() << "\n";
  for (const auto& c : r.checks) {
    out << "  " << c.name << ": " << to_string(c.status);
    if (c.witness) out << " (witness " << *c.witness << ")";
    out << " - " << c.details << "\n";
  }
  out << "verdict: " << to_string(r.verdict) << "\n";
}

int run_certify(const RunConfig& cfg, std::ostream& out) {
  const Recurrence rec = resolve(cfg.sequence);
  std::optional<BoundSeries> bound;
  if (!cfg.bound_file.empty()) bound = read_bound_file(cfg.bound_file);

  // Without an explicit N, walk a candidate list until a certificate closes.
  std::vector<std::int64_t> starts;
  if (cfg.n_start) {
    starts.push_back(*cfg.n_start);
  } else {
    const std::int64_t n0 = default_start(rec);
    for (std::int64_t f : {1, 2, 5, 10, 20, 50, 100}) {
      const std::int64_t n = n0 * f;
      if (n + 3 > cfg.horizon) break;
      starts.push_back(n);
    }
    if (starts.empty()) starts.push_back(n0);
  }

  CertifyAttempt last;
  for (std::int64_t N : starts) {
    last = attempt(rec, N, bound, cfg);
    if (last.report && last.report->verdict != CertificateVerdict::inconclusive) break;
  }

  if (cfg.format == "json") {
    json j = last.report ? to_json(*last.report) : json{{"sequence", rec.name}, {"verdict", "inconclusive"}};
    if (last.trace) j["search"] = to_json(*last.trace);
    if (!last.failure.empty()) j["failure"] = last.failure;
    out << j.dump(2) << "\n";
  } else if (last.report) {
    print_report(*last.report, out);
  } else {
    out << rec.name << ": " << last.failure << "\nverdict: inconclusive\n";
  }
  return last.report ? verdict_exit(last.report->verdict) : kExitInconclusive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact log-convexity certificates for three-term recurrences"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("sequence", cfg.sequence, "Catalog name or recurrence spec-file path")->required();
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("-o,--output", cfg.output, "Write the report to this file");
  };
  auto add_count = [&cfg](CLI::App* sub) {
    sub->add_option("--count", cfg.count, "Number of terms")->check(CLI::Range(std::size_t{2}, std::size_t{1000000}));
  };

  CLI::App* gen = app.add_subcommand("gen", "Exact terms from the recurrence");
  add_common(gen);
  add_count(gen);

  CLI::App* oracle = app.add_subcommand("oracle", "Exact terms from the direct summation formula");
  add_common(oracle);
  add_count(oracle);

  CLI::App* check = app.add_subcommand("check", "Scan k-log-convexity levels exactly");
  add_common(check);
  add_count(check);
  check->add_option("--k", cfg.k, "Number of levels")->check(CLI::Range(1, 64));

  CLI::App* bounds = app.add_subcommand("bounds", "Search an upper bound for S_n/S_{n-1}");
  add_common(bounds);
  bounds->add_option("--n-start", cfg.n_start, "Starting index N");
  bounds->add_option("--max-depth", cfg.max_depth, "Deepest 1/n^i term")->check(CLI::Range(0, 32));

  CLI::App* certify = app.add_subcommand("certify", "Certify strict 2-log-convexity");
  add_common(certify);
  certify->add_option("--n-start", cfg.n_start, "Starting index N");
  certify->add_option("--horizon", cfg.horizon, "Last index scanned for positivity and log-convexity")
      ->check(CLI::PositiveNumber);
  certify->add_option("--max-depth", cfg.max_depth, "Deepest 1/n^i term")->check(CLI::Range(0, 32));
  certify->add_option("--bound-file", cfg.bound_file, "JSON list of {rat, irr, d} upper-bound coefficients");
  certify->add_option("--claim-from", cfg.claim_from, "First index of the claim (default: offset + 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  std::ofstream file;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) {
      std::cerr << "error: cannot write '" << cfg.output << "'\n";
      return kExitUsage;
    }
  }
  std::ostream& out = cfg.output.empty() ? std::cout : file;

  try {
    if (*gen) return run_gen(cfg, out);
    if (*oracle) return run_oracle(cfg, out);
    if (*check) return run_check(cfg, out);
    if (*bounds) return run_bounds(cfg, out);
    if (*certify) return run_certify(cfg, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const logcert::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInconclusive;
  }
  return kExitUsage;
}
