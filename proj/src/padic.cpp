#include "rootnum/padic.hpp"

#include "rootnum/arith.hpp"
#include "rootnum/error.hpp"

namespace rootnum {

namespace {

void require_odd_prime(const Integer& p) {
  if (p == 2) throw Error(ErrorKind::NotPrime, "expected an odd prime, got 2");
  require_prime(p);
}

void require_nonzero(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) throw Error(ErrorKind::ZeroInput, "Hilbert symbol of 0");
}

// (x - 1)/2 mod 2 and (x^2 - 1)/8 mod 2 for odd x.
int epsilon(const Integer& x) { return mod_ui(x, 4) == 3 ? 1 : 0; }
int omega(const Integer& x) {
  const unsigned long r = mod_ui(x, 8);
  return (r == 3 || r == 5) ? 1 : 0;
}

}  // namespace

LocalUnitDecomp decompose(const Integer& value, const Integer& prime) {
  Valuation v = valuation(value, prime);
  return {prime, v.exponent, std::move(v.unit)};
}

bool is_pth_power(const Integer& a, const Integer& p) {
  if (a == 0) throw Error(ErrorKind::ZeroInput, "p-th power test of 0");
  require_odd_prime(p);
  const LocalUnitDecomp d = decompose(a, p);
  if (Integer(static_cast<long>(d.valuation)) % p != 0) return false;
  Integer modulus = p * p, e = p - 1, r;
  Integer u = d.unit % modulus;
  if (u < 0) u += modulus;
  mpz_powm(r.get_mpz_t(), u.get_mpz_t(), e.get_mpz_t(), modulus.get_mpz_t());
  return r == 1;
}

int hilbert_odd(const Integer& a, const Integer& b, const Integer& p) {
  require_nonzero(a, b);
  require_odd_prime(p);
  const LocalUnitDecomp da = decompose(a, p);
  const LocalUnitDecomp db = decompose(b, p);
  const std::int64_t alpha = da.valuation % 2;
  const std::int64_t beta = db.valuation % 2;
  int out = 1;
  if (alpha && beta && mod_ui(p, 4) == 3) out = -out;
  if (beta) out *= legendre(da.unit, p);
  if (alpha) out *= legendre(db.unit, p);
  return out;
}

int hilbert_two(const Integer& a, const Integer& b) {
  require_nonzero(a, b);
  const LocalUnitDecomp da = decompose(a, 2);
  const LocalUnitDecomp db = decompose(b, 2);
  const int exponent = epsilon(da.unit) * epsilon(db.unit) +
                       static_cast<int>(da.valuation % 2) * omega(db.unit) +
                       static_cast<int>(db.valuation % 2) * omega(da.unit);
  return exponent % 2 == 0 ? 1 : -1;
}

int hilbert(const Integer& a, const Integer& b, const Integer& ell) {
  if (ell == 2) return hilbert_two(a, b);
  return hilbert_odd(a, b, ell);
}

}  // namespace rootnum
