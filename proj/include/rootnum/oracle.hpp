#pragma once

// Independent checks of the finite identities behind the root number
// formulas: point counts against Gauss-sum eigenvalues, the sign of G^2,
// the parity identity for (-2/p), Hilbert symbols by conic search, and
// end-to-end cross-checks of the engine.

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "rootnum/cyclotomic.hpp"
#include "rootnum/engine.hpp"
#include "rootnum/finite_field.hpp"
#include "rootnum/integer.hpp"

namespace rootnum::oracle {

/// #C(F_q) for C: y^2 = x^p - x, including the single point at infinity.
Integer count_points(const FqContext& ctx);

/// lambda_j = -sum_{u != 0} chi(u) zeta^(-j Tr(u)) for j = 1 .. p-1.
std::vector<CycInt> frobenius_eigenvalues(const FqContext& ctx);

/// q + 1 - sum_j lambda_j. Throws NonIntegerTrace if the sum is not rational.
Integer gauss_trace_prediction(const FqContext& ctx);

/// G = sum_{u != 0} chi(u) zeta^Tr(u).
CycInt gauss_sum(const FqContext& ctx);

/// G^2 == (-1)^((q-1)/2) q.
bool gauss_sum_square_check(const FqContext& ctx);

/// (-1)^#{odd j : 1 <= j < (p-1)/2} == (-2/p).
bool parity_identity_check(const Integer& p);

/// +1 iff z^2 = a x^2 + b y^2 has a primitive solution mod ell^k,
/// k = v_ell(4ab) + 3, found by exhaustive search.
int hilbert_bruteforce(const Integer& a, const Integer& b, const Integer& ell);

/// Searches x with p * v_p(x) = v_p(a) and x^p = a, comparing unit parts
/// modulo p^4.
bool pth_power_bruteforce(const Integer& a, const Integer& p);

struct ScanViolation {
  Integer a;
  Integer t;
  int base_sign = 0;
  int scaled_sign = 0;
};

struct ScanSkip {
  Integer a;
  std::string reason;
};

struct ScanReport {
  std::size_t checked = 0;
  std::vector<ScanViolation> violations;
  std::vector<ScanSkip> skipped;
  bool passed() const { return violations.empty(); }
};

/// Compares the root number for a against a * t^(2p) for each nonzero a in
/// [a_min, a_max] and t in t_set.
ScanReport scaling_scan(const Integer& p, std::int64_t a_min, std::int64_t a_max,
                        const std::vector<std::int64_t>& t_set,
                        const EngineOptions& options = {}, unsigned jobs = 1);

struct FixtureRow {
  Integer p;
  Integer a;
  int w = 1;
  friend bool operator==(const FixtureRow&, const FixtureRow&) = default;
};

/// Reads "p a w" rows; '#' starts a comment line. Throws MalformedFixture.
std::vector<FixtureRow> parse_fixture(std::istream& in);

struct FixtureMismatch {
  FixtureRow row;
  std::string got;  // computed sign or error name
};

struct FixtureReport {
  std::size_t matches = 0;
  std::vector<FixtureMismatch> mismatches;
  bool passed() const { return mismatches.empty(); }
};

/// Throws MalformedFixture if any row names an unsupported curve.
FixtureReport fixture_check(const std::vector<FixtureRow>& rows,
                            const EngineOptions& options = {}, unsigned jobs = 1);

}  // namespace rootnum::oracle
