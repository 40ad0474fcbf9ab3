#include "cli_app.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "rootnum/error.hpp"
#include "rootnum/oracle.hpp"
#include "rootnum/parallel.hpp"
#include "rootnum/record.hpp"
#include "rootnum/suites.hpp"

namespace rootnum::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Integer parse_arg(const std::string& text, const char* name) {
  auto n = parse_integer(text);
  if (!n) throw UsageError(std::string(name) + " must be an integer, got '" + text + "'");
  return *n;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("--range expects MIN..MAX");
  const auto lo = parse_integer(text.substr(0, dots));
  const auto hi = parse_integer(text.substr(dots + 2));
  const auto lo64 = lo ? to_int64(*lo) : std::nullopt;
  const auto hi64 = hi ? to_int64(*hi) : std::nullopt;
  if (!lo64 || !hi64) throw UsageError("--range bounds must be 64-bit integers");
  if (*lo64 > *hi64) throw UsageError("--range is empty: " + text);
  return {*lo64, *hi64};
}

// Arguments that name the curve itself are usage errors, not results.
bool is_usage_kind(ErrorKind kind) {
  return kind == ErrorKind::NotPrime || kind == ErrorKind::ZeroInput ||
         kind == ErrorKind::InvalidArgument;
}

int exit_code_for(const std::string& status) {
  if (status == "ok") return kExitOk;
  if (status == "UnsupportedTameCase") return kExitUnsupported;
  if (status == "ModelSearchFailed") return kExitModelSearch;
  return kExitFailure;
}

void print_report(const suites::SuiteReport& r, std::ostream& out) {
  out << "suite " << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << " ("
      << r.checks << " checks, " << r.failed << " failed)\n";
  for (const auto& note : r.notes) out << "  " << note << "\n";
  for (const auto& f : r.first_failures) out << "  FAILED " << f << "\n";
}

struct Settings {
  std::string p_text;
  std::string a_text;
  std::string range;
  bool json = false;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  unsigned long bound = 200;
  std::string file;
  std::string suite;
  std::uint64_t max_p = 10000;
  unsigned max_f = 3;
  std::uint64_t max_q = 400;
  std::int64_t max_abs = 0;
  std::size_t count = 0;
};

EngineOptions engine_options(const Settings& s) {
  EngineOptions o;
  o.model_bound = s.bound;
  return o;
}

int cmd_compute(const Settings& s, std::ostream& out, std::ostream& err) {
  const Integer p = parse_arg(s.p_text, "-p");
  const Integer a = parse_arg(s.a_text, "-a");
  CurveSpec::make(p, a);  // invalid p or a is a usage error
  const OutputRecord rec = compute_record(p, a, engine_options(s));
  if (s.json) {
    out << to_json(rec).dump(2) << "\n";
  } else {
    out << render_table(rec);
  }
  if (!rec.result) err << "error: " << rec.message << "\n";
  return exit_code_for(rec.status);
}

int cmd_batch(const Settings& s, std::ostream& out) {
  const Integer p = parse_arg(s.p_text, "-p");
  if (p == 2 || !is_prime(p)) throw UsageError("-p must be an odd prime");
  const auto [lo, hi] = parse_range(s.range);
  std::vector<std::int64_t> values;
  for (std::int64_t a = lo; a <= hi; ++a) {
    if (a != 0) values.push_back(a);
  }
  const EngineOptions options = engine_options(s);
  const auto records = parallel_map(values.size(), s.jobs, [&](std::size_t i) {
    return compute_record(p, static_cast<long>(values[i]), options);
  });
  if (!s.json) out << "a\tglobal\tstatus\n";
  for (const OutputRecord& rec : records) {
    if (s.json) {
      out << to_json(rec).dump() << "\n";
    } else {
      out << rec.a << "\t"
          << (rec.result ? (rec.result->global_sign > 0 ? "+1" : "-1") : "-") << "\t"
          << rec.status << "\n";
    }
  }
  return kExitOk;
}

std::vector<std::uint64_t> primes_or(const Settings& s,
                                     std::vector<std::uint64_t> fallback) {
  if (s.p_text.empty()) return fallback;
  const Integer p = parse_arg(s.p_text, "-p");
  const auto small = to_int64(p);
  if (p == 2 || !is_prime(p) || !small) throw UsageError("-p must be an odd prime");
  return {static_cast<std::uint64_t>(*small)};
}

int cmd_verify(const Settings& s, std::ostream& out) {
  const EngineOptions options = engine_options(s);
  auto pick = [](auto value, auto fallback) { return value ? value : fallback; };
  suites::SuiteReport report;
  if (s.suite == "gauss") {
    report = suites::gauss(
        suites::field_grid(primes_or(s, {3, 5, 7}), s.max_f, s.max_q));
  } else if (s.suite == "parity") {
    report = suites::parity(s.max_p);
  } else if (s.suite == "hilbert") {
    report = suites::hilbert(pick(s.max_abs, std::int64_t{30}),
                             primes_or(s, {2, 3, 5, 7}), pick(s.count, std::size_t{1000}),
                             s.seed);
  } else if (s.suite == "scaling") {
    report = suites::scaling(primes_or(s, {3, 5}), pick(s.max_abs, std::int64_t{30}),
                             {2, 3}, options, s.jobs);
  } else if (s.suite == "fixtures") {
    if (s.file.empty()) throw UsageError("verify fixtures needs --file PATH");
    std::ifstream in(s.file);
    if (!in) throw UsageError("cannot open fixture file " + s.file);
    report = suites::fixtures(oracle::parse_fixture(in), options, s.jobs);
  } else if (s.suite == "disc") {
    report = suites::discriminant(pick(s.count, std::size_t{500}), s.seed,
                                  primes_or(s, {3, 5, 7, 11}),
                                  pick(s.max_abs, std::int64_t{20}));
  } else if (s.suite == "pthpower") {
    report = suites::pth_power(primes_or(s, {3, 5}), pick(s.max_abs, std::int64_t{200}));
  } else if (s.suite == "engine") {
    report = suites::engine(primes_or(s, {3, 5, 7}), pick(s.max_abs, std::int64_t{100}),
                            options, s.jobs);
  } else {
    throw UsageError("unknown suite '" + s.suite + "'");
  }
  print_report(report, out);
  return report.passed() ? kExitOk : kExitFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Root numbers of Jacobians of y^2 = x^p + a", "rootnum"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "Root number of one curve");
  compute->add_option("-p,--p", s.p_text, "Odd prime p")->required();
  compute->add_option("-a,--a", s.a_text, "Nonzero integer a")->required();
  compute->add_flag("--json", s.json, "Emit JSON instead of a table");
  compute->add_option("--bound", s.bound, "Model search bound on |t|");

  auto* batch = app.add_subcommand("batch", "Root numbers for a range of a");
  batch->add_option("-p,--p", s.p_text, "Odd prime p")->required();
  batch->add_option("--range", s.range, "MIN..MAX")->required();
  batch->add_flag("--json", s.json, "Emit JSON lines");
  batch->add_option("--jobs", s.jobs, "Worker threads")->check(CLI::PositiveNumber);
  batch->add_option("--bound", s.bound, "Model search bound on |t|");

  auto* verify = app.add_subcommand("verify", "Run an oracle suite");
  verify->add_option("suite", s.suite,
                     "gauss | parity | hilbert | scaling | fixtures | disc | pthpower | engine")
      ->required();
  verify->add_option("-p,--p", s.p_text, "Restrict to one prime");
  verify->add_option("--max-p", s.max_p, "Parity: primes below this bound");
  verify->add_option("--max-f", s.max_f, "Gauss: largest extension degree");
  verify->add_option("--max-q", s.max_q, "Gauss: largest field order");
  verify->add_option("--max-abs", s.max_abs, "Bound on |a| (suite default if 0)");
  verify->add_option("--count", s.count, "Random checks (suite default if 0)");
  verify->add_option("--seed", s.seed, "Seed for randomized checks");
  verify->add_option("--file", s.file, "Fixture file");
  verify->add_option("--jobs", s.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--bound", s.bound, "Model search bound on |t|");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(s, out, err);
    if (batch->parsed()) return cmd_batch(s, out);
    return cmd_verify(s, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_usage_kind(e.kind()) ? kExitUsage : kExitFailure;
  }
}

}  // namespace rootnum::cli
