#pragma once

#include <cstdint>
#include <map>

#include "rootnum/integer.hpp"

namespace rootnum {

/// n = prime^exponent * unit with prime not dividing unit.
struct Valuation {
  std::int64_t exponent = 0;
  Integer unit;
};

/// Signed prime factorization: n = sign * prod(prime^exponent).
struct Factorization {
  int sign = 1;
  std::map<Integer, unsigned> primes;

  Integer product() const;
};

struct FactorOptions {
  unsigned long trial_limit = 1'000'000;
  // Iterations of Brent's cycle search per rho attempt.
  unsigned long rho_iterations = 2'000'000;
  unsigned rho_attempts = 16;
};

/// Deterministic Miller-Rabin below 3.3e24 (covers 2^64); above that adds
/// further fixed bases, so the answer is probabilistic but reproducible.
bool is_prime(const Integer& n);

/// Throws NotPrime unless ell is prime.
void require_prime(const Integer& ell, const char* what = "modulus");

/// Throws ZeroInput for n == 0 and NotPrime for composite ell.
Valuation valuation(const Integer& n, const Integer& ell);

/// Legendre symbol (a/p) for an odd prime p, via Euler's criterion.
int legendre(const Integer& a, const Integer& p);

/// Complete factorization of a nonzero integer. Trial division up to
/// options.trial_limit, then Pollard-Brent rho on the remaining cofactor.
Factorization factorize(const Integer& n, const FactorOptions& options = {});

}  // namespace rootnum
