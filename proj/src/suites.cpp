#include "rootnum/suites.hpp"

#include <random>
#include <set>

#include "rootnum/arith.hpp"
#include "rootnum/error.hpp"
#include "rootnum/padic.hpp"
#include "rootnum/parallel.hpp"
#include "rootnum/poly.hpp"
#include "rootnum/record.hpp"

namespace rootnum::suites {

namespace {

constexpr std::size_t kKeptFailures = 10;

Integer big(std::int64_t n) { return static_cast<long>(n); }

std::string field_label(const FieldSpec& fs) {
  return "F_" + std::to_string(fs.first) + "^" + std::to_string(fs.second);
}

}  // namespace

void SuiteReport::record(bool ok, const std::string& what) {
  ++checks;
  if (ok) return;
  ++failed;
  if (first_failures.size() < kKeptFailures) first_failures.push_back(what);
}

std::vector<FieldSpec> field_grid(const std::vector<std::uint64_t>& primes,
                                  unsigned max_f, std::uint64_t max_q) {
  std::vector<FieldSpec> out;
  for (std::uint64_t p : primes) {
    std::uint64_t q = 1;
    for (unsigned f = 1; f <= max_f && f <= FqContext::kMaxDegree; ++f) {
      q *= p;
      if (q > max_q) break;
      out.emplace_back(p, f);
    }
  }
  return out;
}

SuiteReport gauss(const std::vector<FieldSpec>& fields) {
  SuiteReport r{"gauss"};
  for (const FieldSpec& fs : fields) {
    const FqContext ctx = FqContext::make(fs.first, fs.second);
    const std::string label = field_label(fs);
    const Integer count = oracle::count_points(ctx);
    const Integer predicted = oracle::gauss_trace_prediction(ctx);
    r.record(count == predicted, label + ": #C = " + to_string(count) +
                                     " but Gauss prediction " + to_string(predicted));
    const CycInt q = CycInt::rational(ctx.characteristic(),
                                      static_cast<unsigned long>(ctx.order()));
    const auto eigen = oracle::frobenius_eigenvalues(ctx);
    for (std::size_t j = 0; j < eigen.size(); ++j) {
      r.record(eigen[j] * eigen[j].conj() == q,
               label + ": |lambda_" + std::to_string(j + 1) + "|^2 != q");
    }
    r.record(oracle::gauss_sum_square_check(ctx), label + ": G^2 != (-1)^((q-1)/2) q");
    r.notes.push_back(label + ": #C = " + to_string(count));
  }
  return r;
}

SuiteReport parity(std::uint64_t max_p) {
  SuiteReport r{"parity"};
  for (std::uint64_t p = 3; p < max_p; p += 2) {
    const Integer pz = static_cast<unsigned long>(p);
    if (!is_prime(pz)) continue;
    r.record(oracle::parity_identity_check(pz), "p = " + std::to_string(p));
  }
  return r;
}

SuiteReport hilbert(std::int64_t max_abs, const std::vector<std::uint64_t>& primes,
                    std::size_t random_checks, std::uint64_t seed) {
  SuiteReport r{"hilbert"};
  for (std::uint64_t l : primes) {
    const Integer ell = static_cast<unsigned long>(l);
    for (std::int64_t a = -max_abs; a <= max_abs; ++a) {
      if (a == 0) continue;
      for (std::int64_t b = -max_abs; b <= max_abs; ++b) {
        if (b == 0) continue;
        const int formula = rootnum::hilbert(big(a), big(b), ell);
        const int search = oracle::hilbert_bruteforce(big(a), big(b), ell);
        r.record(formula == search, "(" + std::to_string(a) + ", " + std::to_string(b) +
                                        ")_" + std::to_string(l) + ": formula " +
                                        std::to_string(formula) + ", search " +
                                        std::to_string(search));
      }
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> value(-100000, 100000);
  std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
  auto nonzero = [&] {
    std::int64_t v = 0;
    while (v == 0) v = value(rng);
    return big(v);
  };
  for (std::size_t i = 0; i < random_checks; ++i) {
    const Integer ell = static_cast<unsigned long>(primes[pick(rng)]);
    const Integer a = nonzero(), a2 = nonzero(), b = nonzero();
    const std::string tag = "(" + to_string(a) + ", " + to_string(a2) + ", " +
                            to_string(b) + ") at " + to_string(ell);
    const int ab = rootnum::hilbert(a, b, ell);
    r.record(rootnum::hilbert(a * a2, b, ell) == ab * rootnum::hilbert(a2, b, ell),
             "bimultiplicativity " + tag);
    r.record(ab == rootnum::hilbert(b, a, ell), "symmetry " + tag);
    r.record(rootnum::hilbert(a, -a, ell) == 1, "(a,-a) " + tag);
    if (a != 1) r.record(rootnum::hilbert(a, 1 - a, ell) == 1, "(a,1-a) " + tag);
  }
  return r;
}

SuiteReport pth_power(const std::vector<std::uint64_t>& primes, std::int64_t max_abs) {
  SuiteReport r{"pthpower"};
  for (std::uint64_t p : primes) {
    const Integer pz = static_cast<unsigned long>(p);
    for (std::int64_t a = -max_abs; a <= max_abs; ++a) {
      if (a == 0) continue;
      const bool formula = is_pth_power(big(a), pz);
      const bool search = oracle::pth_power_bruteforce(big(a), pz);
      r.record(formula == search, "a = " + std::to_string(a) + ", p = " + std::to_string(p));
    }
  }
  return r;
}

SuiteReport discriminant(std::size_t random_count, std::uint64_t seed,
                         const std::vector<std::uint64_t>& primes,
                         std::int64_t max_abs) {
  SuiteReport r{"disc"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> degree(1, 7);
  std::uniform_int_distribution<long> coeff(-20, 20);
  std::uniform_int_distribution<long> shift(-10, 10);
  for (std::size_t i = 0; i < random_count; ++i) {
    std::vector<Integer> c(degree(rng) + 1);
    for (std::size_t k = 0; k + 1 < c.size(); ++k) c[k] = coeff(rng);
    c.back() = 1;
    const IntPoly f(std::move(c));
    const Integer s = shift(rng);
    r.record(rootnum::discriminant(f.shift(s)) == rootnum::discriminant(f),
             "disc(f(x + " + to_string(s) + ")) != disc(f) for f = " + f.to_string());
  }
  for (std::uint64_t p : primes) {
    for (std::int64_t a = -max_abs; a <= max_abs; ++a) {
      if (a == 0) continue;
      const auto deg = static_cast<unsigned>(p);
      Integer expected = pow(Integer(static_cast<unsigned long>(p)), deg) *
                         pow(big(a), deg - 1);
      if (((p - 1) / 2) % 2 != 0) expected = -expected;
      const Integer got = rootnum::discriminant(IntPoly::binomial(deg, big(a)));
      r.record(got == expected, "disc(x^" + std::to_string(p) + " + " +
                                    std::to_string(a) + ") = " + to_string(got));
    }
  }
  return r;
}

SuiteReport scaling(const std::vector<std::uint64_t>& primes, std::int64_t max_abs,
                    const std::vector<std::int64_t>& t_set,
                    const EngineOptions& options, unsigned jobs) {
  SuiteReport r{"scaling"};
  for (std::uint64_t p : primes) {
    const oracle::ScanReport scan = oracle::scaling_scan(
        static_cast<unsigned long>(p), -max_abs, max_abs, t_set, options, jobs);
    r.checks += scan.checked - scan.violations.size();
    for (const auto& v : scan.violations) {
      r.record(false, "p = " + std::to_string(p) + ", a = " + to_string(v.a) +
                          ", t = " + to_string(v.t) + ": " + std::to_string(v.base_sign) +
                          " vs " + std::to_string(v.scaled_sign));
    }
    std::size_t unsupported = 0;
    for (const auto& s : scan.skipped) {
      if (s.reason == "UnsupportedTameCase") {
        ++unsupported;
      } else {
        r.notes.push_back("p = " + std::to_string(p) + ": skipped a = " +
                          to_string(s.a) + " (" + s.reason + ")");
      }
    }
    r.notes.push_back("p = " + std::to_string(p) + ": " + std::to_string(scan.checked) +
                      " pairs compared, " + std::to_string(unsupported) +
                      " unsupported values skipped");
  }
  return r;
}

SuiteReport fixtures(const std::vector<oracle::FixtureRow>& rows,
                     const EngineOptions& options, unsigned jobs) {
  SuiteReport r{"fixtures"};
  const oracle::FixtureReport report = oracle::fixture_check(rows, options, jobs);
  r.checks = report.matches;
  for (const auto& m : report.mismatches) {
    r.record(false, "(" + to_string(m.row.p) + ", " + to_string(m.row.a) +
                        "): fixture " + std::to_string(m.row.w) + ", computed " + m.got);
  }
  r.notes.push_back(std::to_string(report.matches) + " of " + std::to_string(rows.size()) +
                    " rows match");
  return r;
}

SuiteReport engine(const std::vector<std::uint64_t>& primes, std::int64_t max_abs,
                   const EngineOptions& options, unsigned jobs) {
  SuiteReport r{"engine"};
  for (std::uint64_t pu : primes) {
    const Integer p = static_cast<unsigned long>(pu);
    std::vector<std::int64_t> values;
    for (std::int64_t a = -max_abs; a <= max_abs; ++a) {
      if (a != 0) values.push_back(a);
    }
    auto compute = [&](std::size_t i) { return compute_record(p, big(values[i]), options); };
    const auto serial = parallel_map(values.size(), 1, compute);
    const auto again = parallel_map(values.size(), 1, compute);
    const auto pooled = parallel_map(values.size(), std::max(jobs, 2u), compute);

    for (std::size_t i = 0; i < values.size(); ++i) {
      const std::int64_t a = values[i];
      const std::string tag = "p = " + std::to_string(pu) + ", a = " + std::to_string(a);
      const OutputRecord& rec = serial[i];
      r.record(rec == again[i] && rec == pooled[i], tag + ": nondeterministic output");

      if (!rec.result) {
        const bool declared = rec.status == "UnsupportedTameCase" ||
                              rec.status == "ModelSearchFailed" ||
                              rec.status == "FactorizationFailed";
        r.record(declared, tag + ": undeclared error " + rec.status);
        r.record((rec.status == "UnsupportedTameCase") ==
                     oracle::pth_power_bruteforce(big(a), p),
                 tag + ": support status disagrees with brute force");
        continue;
      }

      // Expected places by trial division, independent of factorize().
      std::set<std::uint64_t> expected{2, pu};
      std::int64_t m = a < 0 ? -a : a;
      for (std::int64_t d = 3; d <= m; d += 2) {
        if (m % d == 0) {
          expected.insert(static_cast<std::uint64_t>(d));
          while (m % d == 0) m /= d;
        }
      }
      const GlobalResult& g = *rec.result;
      std::set<std::uint64_t> seen;
      bool infinity_seen = false, signs_ok = true, duplicate = false;
      int product = 1;
      for (const LocalFactor& f : g.factors) {
        signs_ok = signs_ok && (f.sign == 1 || f.sign == -1);
        product *= f.sign;
        if (f.place.is_infinite()) {
          duplicate = duplicate || infinity_seen;
          infinity_seen = true;
        } else {
          duplicate = duplicate || !seen.insert(mpz_get_ui(f.place.prime->get_mpz_t())).second;
        }
      }
      r.record(signs_ok, tag + ": factor sign outside {-1, +1}");
      r.record(product == g.global_sign, tag + ": global sign is not the product");
      r.record(infinity_seen && !duplicate && seen == expected, tag + ": wrong place set");
      r.record(!oracle::pth_power_bruteforce(big(a), p),
               tag + ": computed a value for an unsupported curve");
    }
  }
  return r;
}

}  // namespace rootnum::suites
