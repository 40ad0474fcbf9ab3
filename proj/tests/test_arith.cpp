#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rootnum/arith.hpp"
#include "rootnum/error.hpp"

using rootnum::Error;
using rootnum::ErrorKind;
using rootnum::Integer;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected rootnum::Error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("valuation splits off prime powers") {
  auto v = rootnum::valuation(108, 3);
  CHECK(v.exponent == 3);
  CHECK(v.unit == 4);

  v = rootnum::valuation(-12, 2);
  CHECK(v.exponent == 2);
  CHECK(v.unit == -3);

  v = rootnum::valuation(5, 3);
  CHECK(v.exponent == 0);
  CHECK(v.unit == 5);

  CHECK(kind_of([] { rootnum::valuation(0, 3); }) == ErrorKind::ZeroInput);
  CHECK(kind_of([] { rootnum::valuation(12, 4); }) == ErrorKind::NotPrime);
}

TEST_CASE("valuation round-trips") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(-1000000, 1000000);
  for (long ell : {2L, 3L, 5L, 7L, 101L}) {
    for (int i = 0; i < 200; ++i) {
      long n = dist(rng);
      if (n == 0) continue;
      const auto v = rootnum::valuation(n, ell);
      CHECK(rootnum::pow(ell, v.exponent) * v.unit == n);
      CHECK(rootnum::mod_ui(v.unit, ell) != 0);
    }
  }
}

TEST_CASE("legendre examples") {
  CHECK(rootnum::legendre(2, 7) == 1);
  CHECK(rootnum::legendre(-1, 5) == 1);
  CHECK(rootnum::legendre(7, 7) == 0);
  CHECK(rootnum::legendre(3, 7) == -1);
  CHECK(rootnum::legendre(-1, 3) == -1);
  CHECK(kind_of([] { rootnum::legendre(2, 9); }) == ErrorKind::NotPrime);
  CHECK(kind_of([] { rootnum::legendre(3, 2); }) == ErrorKind::NotPrime);
}

TEST_CASE("legendre matches square enumeration for p < 200") {
  for (long p = 3; p < 200; p += 2) {
    if (!rootnum::is_prime(p)) continue;
    std::vector<bool> square(p, false);
    for (long x = 1; x < p; ++x) square[x * x % p] = true;
    for (long a = -p; a < 2 * p; ++a) {
      const long r = ((a % p) + p) % p;
      const int expected = r == 0 ? 0 : (square[r] ? 1 : -1);
      REQUIRE(rootnum::legendre(a, p) == expected);
    }
  }
}

TEST_CASE("legendre is multiplicative") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> value(-100000, 100000);
  std::uniform_int_distribution<long> prime_pick(3, 999);
  int checked = 0;
  while (checked < 500) {
    const long p = prime_pick(rng);
    if (!rootnum::is_prime(p) || p == 2) continue;
    const Integer a = value(rng), b = value(rng);
    CHECK(rootnum::legendre(a * b, p) == rootnum::legendre(a, p) * rootnum::legendre(b, p));
    ++checked;
  }
}

TEST_CASE("is_prime") {
  CHECK_FALSE(rootnum::is_prime(0));
  CHECK_FALSE(rootnum::is_prime(1));
  CHECK(rootnum::is_prime(2));
  CHECK(rootnum::is_prime(97));
  CHECK_FALSE(rootnum::is_prime(561));           // Carmichael
  CHECK_FALSE(rootnum::is_prime(3215031751L));  // strong pseudoprime to 2,3,5,7
  CHECK(rootnum::is_prime(Integer("18446744073709551557")));  // largest below 2^64
  CHECK(rootnum::is_prime(Integer("170141183460469231731687303715884105727")));
  CHECK_FALSE(rootnum::is_prime(Integer("3317044064679887385961981")));
  for (long n = 0; n < 5000; ++n) {
    bool naive = n >= 2;
    for (long d = 2; d * d <= n; ++d) naive = naive && n % d != 0;
    REQUIRE(rootnum::is_prime(n) == naive);
  }
}

TEST_CASE("factorize examples") {
  auto f = rootnum::factorize(108);
  CHECK(f.sign == 1);
  CHECK(f.primes == std::map<Integer, unsigned>{{2, 2}, {3, 3}});

  f = rootnum::factorize(-1);
  CHECK(f.sign == -1);
  CHECK(f.primes.empty());

  // Expected value from the trial-division oracle.
  const auto oracle = rootnum::testing::trial_division(9991);
  CHECK(oracle == std::map<long, unsigned>{{97, 1}, {103, 1}});
  f = rootnum::factorize(9991);
  CHECK(f.primes == std::map<Integer, unsigned>{{97, 1}, {103, 1}});

  CHECK(kind_of([] { rootnum::factorize(0); }) == ErrorKind::ZeroInput);
}

TEST_CASE("factorize reconstructs every n up to 10^6") {
  for (long n = 1; n <= 1000000; ++n) {
    for (long s : {1L, -1L}) {
      const auto f = rootnum::factorize(s * n);
      REQUIRE(f.product() == s * n);
      for (const auto& [prime, e] : f.primes) REQUIRE(rootnum::is_prime(prime));
    }
  }
}

TEST_CASE("factorize beyond trial division uses rho") {
  const Integer p1("1000000007"), p2("998244353"), p3("18446744073709551557");
  const Integer n = p1 * p1 * p2 * p3 * 12;
  const auto f = rootnum::factorize(-n);
  CHECK(f.sign == -1);
  CHECK(f.product() == -n);
  CHECK(f.primes.at(p1) == 2);
  CHECK(f.primes.at(p2) == 1);
  CHECK(f.primes.at(p3) == 1);
}

TEST_CASE("factorize honours its effort budget") {
  rootnum::FactorOptions tiny;
  tiny.trial_limit = 10;
  tiny.rho_iterations = 1;
  tiny.rho_attempts = 1;
  const Integer n = Integer("1000000007") * Integer("998244353");
  CHECK(kind_of([&] { rootnum::factorize(n, tiny); }) == ErrorKind::FactorizationFailed);
}
