#include "rootnum/oracle.hpp"

#include <optional>
#include <sstream>

#include "rootnum/arith.hpp"
#include "rootnum/error.hpp"
#include "rootnum/padic.hpp"
#include "rootnum/parallel.hpp"

namespace rootnum::oracle {

namespace {

// Sum of chi(u) over nonzero u grouped by Tr(u), indexed by trace in [0, p).
std::vector<Integer> character_mass_by_trace(const FqContext& ctx) {
  const std::uint64_t p = ctx.characteristic();
  std::vector<std::int64_t> mass(p, 0);
  for (std::uint64_t i = 1; i < ctx.order(); ++i) {
    const FqElem u = ctx.element(i);
    mass[ctx.trace(u)] += ctx.quadratic_character(u);
  }
  std::vector<Integer> out(p);
  for (std::uint64_t k = 0; k < p; ++k) out[k] = static_cast<long>(mass[k]);
  return out;
}

std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t out = 1;
  while (e--) out *= base;
  return out;
}

std::uint64_t residue(const Integer& n, std::uint64_t m) { return mod_ui(n, m); }

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t out = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) out = mulmod(out, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return out;
}

}  // namespace

Integer count_points(const FqContext& ctx) {
  const std::uint64_t p = ctx.characteristic();
  Integer total = 1;  // point at infinity
  for (std::uint64_t i = 0; i < ctx.order(); ++i) {
    const FqElem x = ctx.element(i);
    const FqElem rhs = ctx.sub(ctx.pow(x, p), x);
    total += 1 + ctx.quadratic_character(rhs);
  }
  return total;
}

std::vector<CycInt> frobenius_eigenvalues(const FqContext& ctx) {
  const std::uint64_t p = ctx.characteristic();
  const std::vector<Integer> mass = character_mass_by_trace(ctx);
  std::vector<CycInt> out;
  out.reserve(p - 1);
  for (std::uint64_t j = 1; j < p; ++j) {
    std::vector<Integer> w(p, Integer(0));
    for (std::uint64_t k = 0; k < p; ++k) {
      // zeta^(-j k)
      const std::uint64_t e = (p - (j * k) % p) % p;
      w[e] -= mass[k];
    }
    out.push_back(CycInt::from_exponent_weights(p, w));
  }
  return out;
}

Integer gauss_trace_prediction(const FqContext& ctx) {
  const std::uint64_t p = ctx.characteristic();
  CycInt trace(p);
  for (const CycInt& lambda : frobenius_eigenvalues(ctx)) trace += lambda;
  const std::optional<Integer> value = trace.rational_value();
  if (!value) {
    throw Error(ErrorKind::NonIntegerTrace,
                "eigenvalue sum " + trace.to_string() + " is not rational");
  }
  return Integer(static_cast<unsigned long>(ctx.order())) + 1 - *value;
}

CycInt gauss_sum(const FqContext& ctx) {
  return CycInt::from_exponent_weights(ctx.characteristic(),
                                       character_mass_by_trace(ctx));
}

bool gauss_sum_square_check(const FqContext& ctx) {
  const CycInt g = gauss_sum(ctx);
  const std::uint64_t q = ctx.order();
  Integer expected = static_cast<unsigned long>(q);
  if (((q - 1) / 2) % 2 != 0) expected = -expected;
  return g * g == CycInt::rational(ctx.characteristic(), expected);
}

bool parity_identity_check(const Integer& p) {
  if (p == 2) throw Error(ErrorKind::NotPrime, "parity identity needs an odd prime");
  require_prime(p, "p");
  const Integer half = (p - 1) / 2;
  int parity = 1;
  for (Integer j = 1; j < half; j += 2) parity = -parity;
  return parity == legendre(-2, p);
}

int hilbert_bruteforce(const Integer& a, const Integer& b, const Integer& ell) {
  if (a == 0 || b == 0) throw Error(ErrorKind::ZeroInput, "Hilbert symbol of 0");
  require_prime(ell, "ell");
  const std::uint64_t l = mpz_get_ui(ell.get_mpz_t());
  const std::int64_t k = valuation(4 * a * b, ell).exponent + 3;
  std::uint64_t m = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    m *= l;
    if (m > (1u << 26)) {
      throw Error(ErrorKind::ContextTooLarge, "search modulus too large");
    }
  }
  const std::uint64_t A = residue(a, m), B = residue(b, m);

  std::vector<bool> square(m, false);
  for (std::uint64_t z = 0; z < m; ++z) square[z * z % m] = true;

  // A primitive solution can be scaled so that its first unit coordinate
  // is 1: x = 1; or x non-unit and y = 1; or x, y non-units and z = 1.
  for (std::uint64_t y = 0; y < m; ++y) {
    if (square[(A + B * (y * y % m)) % m]) return 1;
  }
  for (std::uint64_t x = 0; x < m; x += l) {
    if (square[(A * (x * x % m) + B) % m]) return 1;
  }
  std::vector<bool> b_values(m, false);
  for (std::uint64_t y = 0; y < m; y += l) b_values[B * (y * y % m) % m] = true;
  for (std::uint64_t x = 0; x < m; x += l) {
    const std::uint64_t ax2 = A * (x * x % m) % m;
    if (b_values[(1 + m - ax2) % m]) return 1;
  }
  return -1;
}

bool pth_power_bruteforce(const Integer& a, const Integer& p) {
  if (a == 0) throw Error(ErrorKind::ZeroInput, "p-th power test of 0");
  require_prime(p, "p");
  const std::uint64_t pp = mpz_get_ui(p.get_mpz_t());
  const Valuation v = valuation(a, p);
  if (v.exponent % static_cast<std::int64_t>(pp) != 0) return false;
  const std::uint64_t m = ipow(pp, 4);
  const std::uint64_t target = residue(v.unit, m);
  for (std::uint64_t y = 1; y < m; ++y) {
    if (y % pp == 0) continue;
    if (powmod(y, pp, m) == target) return true;
  }
  return false;
}

ScanReport scaling_scan(const Integer& p, std::int64_t a_min, std::int64_t a_max,
                        const std::vector<std::int64_t>& t_set,
                        const EngineOptions& options, unsigned jobs) {
  if (a_min > a_max) {
    throw Error(ErrorKind::InvalidArgument, "empty range for scaling scan");
  }
  std::vector<std::int64_t> values;
  for (std::int64_t a = a_min; a <= a_max; ++a) {
    if (a != 0) values.push_back(a);
  }
  const unsigned long exponent = 2 * mpz_get_ui(p.get_mpz_t());

  struct Outcome {
    std::size_t checked = 0;
    std::vector<ScanViolation> violations;
    std::vector<ScanSkip> skipped;
  };
  auto run = [&](std::size_t i) {
    Outcome out;
    const Integer a = static_cast<long>(values[i]);
    int base = 0;
    try {
      base = global_root_number(p, a, options).global_sign;
    } catch (const Error& e) {
      out.skipped.push_back({a, std::string(error_name(e.kind()))});
      return out;
    }
    for (std::int64_t t : t_set) {
      const Integer scale = pow(Integer(static_cast<long>(t)), exponent);
      try {
        const int scaled = global_root_number(p, a * scale, options).global_sign;
        ++out.checked;
        if (scaled != base) {
          out.violations.push_back({a, static_cast<long>(t), base, scaled});
        }
      } catch (const Error& e) {
        out.skipped.push_back({a * scale, std::string(error_name(e.kind()))});
      }
    }
    return out;
  };

  ScanReport report;
  for (Outcome& o : parallel_map(values.size(), jobs, run)) {
    report.checked += o.checked;
    for (auto& v : o.violations) report.violations.push_back(std::move(v));
    for (auto& s : o.skipped) report.skipped.push_back(std::move(s));
  }
  return report;
}

std::vector<FixtureRow> parse_fixture(std::istream& in) {
  std::vector<FixtureRow> rows;
  std::string line;
  std::size_t line_no = 0;
  auto malformed = [&](const std::string& why) {
    return Error(ErrorKind::MalformedFixture,
                 "line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first) || first[0] == '#') continue;
    std::string second, third, extra;
    if (!(fields >> second >> third) || (fields >> extra)) {
      throw malformed("expected three fields \"p a w\"");
    }
    const auto p = parse_integer(first);
    const auto a = parse_integer(second);
    const auto w = parse_integer(third);
    if (!p || !a || !w) throw malformed("non-integer field");
    if (*p == 2 || !is_prime(*p)) throw malformed("p is not an odd prime");
    if (*a == 0) throw malformed("a is zero");
    if (*w != 1 && *w != -1) throw malformed("w must be 1 or -1");
    rows.push_back({*p, *a, *w == 1 ? 1 : -1});
  }
  return rows;
}

FixtureReport fixture_check(const std::vector<FixtureRow>& rows,
                            const EngineOptions& options, unsigned jobs) {
  for (const FixtureRow& row : rows) {
    if (is_pth_power(row.a, row.p)) {
      throw Error(ErrorKind::MalformedFixture,
                  "row (" + to_string(row.p) + ", " + to_string(row.a) +
                      ") names an unsupported curve");
    }
  }
  auto run = [&](std::size_t i) -> std::optional<FixtureMismatch> {
    const FixtureRow& row = rows[i];
    try {
      const int sign = global_root_number(row.p, row.a, options).global_sign;
      if (sign == row.w) return std::nullopt;
      return FixtureMismatch{row, std::to_string(sign)};
    } catch (const Error& e) {
      return FixtureMismatch{row, std::string(error_name(e.kind()))};
    }
  };
  FixtureReport report;
  for (auto& outcome : parallel_map(rows.size(), jobs, run)) {
    if (outcome) {
      report.mismatches.push_back(std::move(*outcome));
    } else {
      ++report.matches;
    }
  }
  return report;
}

}  // namespace rootnum::oracle
