#pragma once

// Verification suites shared by the CLI `verify` command and the
// acceptance test binary. Each suite counts individual checks and keeps
// the first few failures for the report.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rootnum/engine.hpp"
#include "rootnum/oracle.hpp"

namespace rootnum::suites {

struct SuiteReport {
  SuiteReport() = default;
  explicit SuiteReport(std::string suite) : name(std::move(suite)) {}

  std::string name;
  std::size_t checks = 0;
  std::size_t failed = 0;
  std::vector<std::string> first_failures;
  std::vector<std::string> notes;

  bool passed() const { return failed == 0; }
  void record(bool ok, const std::string& what);
};

using FieldSpec = std::pair<std::uint64_t, unsigned>;  // (p, f)

/// Point-count identity, eigenvalue norms and G^2 sign on each F_{p^f}.
SuiteReport gauss(const std::vector<FieldSpec>& fields);

/// Fields p^f for p in primes, 1 <= f <= max_f, p^f <= max_q.
std::vector<FieldSpec> field_grid(const std::vector<std::uint64_t>& primes,
                                  unsigned max_f, std::uint64_t max_q);

SuiteReport parity(std::uint64_t max_p);

/// Formula vs conic search on 0 < |a|, |b| <= max_abs, plus random
/// bimultiplicativity, symmetry, (a,-a) = 1 and (a,1-a) = 1 checks.
SuiteReport hilbert(std::int64_t max_abs, const std::vector<std::uint64_t>& primes,
                    std::size_t random_checks, std::uint64_t seed);

SuiteReport pth_power(const std::vector<std::uint64_t>& primes, std::int64_t max_abs);

/// Random shift invariance plus the closed form for x^p + a.
SuiteReport discriminant(std::size_t random_count, std::uint64_t seed,
                         const std::vector<std::uint64_t>& primes,
                         std::int64_t max_abs);

SuiteReport scaling(const std::vector<std::uint64_t>& primes, std::int64_t max_abs,
                    const std::vector<std::int64_t>& t_set,
                    const EngineOptions& options, unsigned jobs);

SuiteReport fixtures(const std::vector<oracle::FixtureRow>& rows,
                     const EngineOptions& options, unsigned jobs);

/// Every 0 < |a| <= max_abs either yields a well-formed result (places,
/// signs, product) or a declared error, identically for jobs = 1 and jobs.
SuiteReport engine(const std::vector<std::uint64_t>& primes, std::int64_t max_abs,
                   const EngineOptions& options, unsigned jobs);

}  // namespace rootnum::suites
