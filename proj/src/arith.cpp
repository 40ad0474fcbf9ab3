#include "rootnum/arith.hpp"

#include <array>
#include <vector>

#include "rootnum/error.hpp"

namespace rootnum {

namespace {

// Jaeschke / Sorenson-Webster: the first 12 prime bases are a deterministic
// witness set for n < 3.317e24.
constexpr std::array<unsigned long, 12> kDeterministicBases = {
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
constexpr std::array<unsigned long, 13> kExtraBases = {
    41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
const Integer kDeterministicBound("3317044064679887385961981");

bool strong_probable_prime(const Integer& n, const Integer& d, unsigned long s,
                           unsigned long base) {
  Integer a = base;
  a %= n;
  if (a == 0) return true;
  Integer x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const Integer n_minus_1 = n - 1;
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor or 0.
Integer brent_rho(const Integer& n, unsigned long c, unsigned long budget) {
  const unsigned long batch = 128;
  Integer y = 2, x, ys, q = 1, g = 1;
  auto step = [&](Integer& v) { v = (v * v + c) % n; };
  unsigned long r = 1, spent = 0;
  while (g == 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) step(y);
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      const unsigned long m = std::min(batch, r - k);
      for (unsigned long i = 0; i < m; ++i) {
        step(y);
        Integer diff = x - y;
        q = (q * abs(diff)) % n;
      }
      g = gcd(q, n);
      k += m;
      spent += m;
      if (spent > budget) return 0;
    }
    r *= 2;
  }
  if (g == n) {
    // Batch overshot; retrace one step at a time.
    do {
      step(ys);
      Integer diff = x - ys;
      g = gcd(abs(diff), n);
    } while (g == 1);
  }
  return g == n ? Integer(0) : g;
}

void split(const Integer& m, const FactorOptions& options,
           std::map<Integer, unsigned>& out) {
  if (m == 1) return;
  if (is_prime(m)) {
    ++out[m];
    return;
  }
  if (mpz_perfect_square_p(m.get_mpz_t())) {
    Integer root;
    mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
    split(root, options, out);
    split(root, options, out);
    return;
  }
  for (unsigned attempt = 0; attempt < options.rho_attempts; ++attempt) {
    Integer d = brent_rho(m, 1 + attempt, options.rho_iterations);
    if (d != 0) {
      split(d, options, out);
      split(m / d, options, out);
      return;
    }
  }
  throw Error(ErrorKind::FactorizationFailed,
              "composite cofactor " + to_string(m) + " resisted rho");
}

}  // namespace

Integer Factorization::product() const {
  Integer out = sign;
  for (const auto& [prime, exponent] : primes) out *= pow(prime, exponent);
  return out;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  for (unsigned long b : kDeterministicBases) {
    if (n == b) return true;
    if (mod_ui(n, b) == 0) return false;
  }
  Integer d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  for (unsigned long b : kDeterministicBases) {
    if (!strong_probable_prime(n, d, s, b)) return false;
  }
  if (n < kDeterministicBound) return true;
  for (unsigned long b : kExtraBases) {
    if (!strong_probable_prime(n, d, s, b)) return false;
  }
  return true;
}

void require_prime(const Integer& ell, const char* what) {
  if (!is_prime(ell)) {
    throw Error(ErrorKind::NotPrime, std::string(what) + " " + to_string(ell) +
                                         " is not prime");
  }
}

Valuation valuation(const Integer& n, const Integer& ell) {
  if (n == 0) throw Error(ErrorKind::ZeroInput, "valuation of zero");
  require_prime(ell);
  Valuation out{0, n};
  Integer q, r;
  for (;;) {
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), out.unit.get_mpz_t(),
                ell.get_mpz_t());
    if (r != 0) break;
    out.unit = q;
    ++out.exponent;
  }
  return out;
}

int legendre(const Integer& a, const Integer& p) {
  if (p == 2) throw Error(ErrorKind::NotPrime, "Legendre symbol needs an odd prime");
  require_prime(p);
  Integer residue = a % p;
  if (residue < 0) residue += p;
  if (residue == 0) return 0;
  Integer e = (p - 1) / 2, out;
  mpz_powm(out.get_mpz_t(), residue.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  return out == 1 ? 1 : -1;
}

Factorization factorize(const Integer& n, const FactorOptions& options) {
  if (n == 0) throw Error(ErrorKind::ZeroInput, "factorization of zero");
  Factorization out;
  out.sign = n < 0 ? -1 : 1;
  Integer m = abs(n);

  unsigned long twos = mpz_scan1(m.get_mpz_t(), 0);
  if (twos > 0) {
    out.primes[2] = static_cast<unsigned>(twos);
    mpz_fdiv_q_2exp(m.get_mpz_t(), m.get_mpz_t(), twos);
  }
  Integer root;
  mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
  for (unsigned long d = 3; d <= options.trial_limit && root >= d; d += 2) {
    if (mod_ui(m, d) != 0) continue;
    unsigned count = 0;
    do {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
      ++count;
    } while (mod_ui(m, d) == 0);
    out.primes[Integer(d)] = count;
    mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
  }
  if (m > 1 && root < options.trial_limit) {
    // No factor up to sqrt(m): m is prime.
    ++out.primes[m];
    m = 1;
  }
  split(m, options, out.primes);
  return out;
}

}  // namespace rootnum
