#include "rootnum/finite_field.hpp"

#include <string>

#include "rootnum/arith.hpp"
#include "rootnum/error.hpp"

namespace rootnum {

namespace {

// Monic polynomial of degree f <= 3 is irreducible over F_p iff it has no
// root in F_p.
bool has_root(const std::vector<std::uint64_t>& m, std::uint64_t p) {
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t acc = 0;
    for (auto it = m.rbegin(); it != m.rend(); ++it) acc = (acc * x + *it) % p;
    if (acc == 0) return true;
  }
  return false;
}

}  // namespace

FqContext::FqContext(std::uint64_t p, unsigned f, std::vector<std::uint64_t> modulus)
    : p_(p), f_(f), q_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < f; ++i) q_ *= p;
}

FqContext FqContext::make(std::uint64_t p, unsigned f) {
  if (p == 2 || !is_prime(Integer(static_cast<unsigned long>(p)))) {
    throw Error(ErrorKind::NotPrime, "field characteristic " + std::to_string(p) +
                                         " is not an odd prime");
  }
  if (f == 0 || f > kMaxDegree) {
    throw Error(ErrorKind::ContextTooLarge,
                "extension degree " + std::to_string(f) + " outside [1, 3]");
  }
  std::uint64_t q = 1;
  for (unsigned i = 0; i < f; ++i) {
    q *= p;
    if (q > kMaxOrder) {
      throw Error(ErrorKind::ContextTooLarge,
                  "field order " + std::to_string(p) + "^" + std::to_string(f) +
                      " exceeds " + std::to_string(kMaxOrder));
    }
  }
  if (f == 1) return FqContext(p, 1, {0, 1});

  // Scan lower coefficients in base-p order.
  std::vector<std::uint64_t> m(f + 1, 0);
  m[f] = 1;
  for (std::uint64_t idx = 0; idx < q; ++idx) {
    std::uint64_t rest = idx;
    for (unsigned i = 0; i < f; ++i) {
      m[i] = rest % p;
      rest /= p;
    }
    if (!has_root(m, p)) return FqContext(p, f, m);
  }
  throw Error(ErrorKind::InvalidArgument, "no irreducible modulus found");
}

FqElem FqContext::element(std::uint64_t index) const {
  FqElem out;
  for (unsigned i = 0; i < f_; ++i) {
    out.c[i] = index % p_;
    index /= p_;
  }
  return out;
}

FqElem FqContext::from_int(std::int64_t n) const {
  FqElem out;
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += static_cast<std::int64_t>(p_);
  out.c[0] = static_cast<std::uint64_t>(r);
  return out;
}

FqElem FqContext::add(const FqElem& x, const FqElem& y) const {
  FqElem out;
  for (unsigned i = 0; i < f_; ++i) out.c[i] = (x.c[i] + y.c[i]) % p_;
  return out;
}

FqElem FqContext::sub(const FqElem& x, const FqElem& y) const {
  FqElem out;
  for (unsigned i = 0; i < f_; ++i) out.c[i] = (x.c[i] + p_ - y.c[i]) % p_;
  return out;
}

FqElem FqContext::mul(const FqElem& x, const FqElem& y) const {
  std::array<std::uint64_t, 2 * kMaxDegree - 1> prod{};
  for (unsigned i = 0; i < f_; ++i) {
    if (x.c[i] == 0) continue;
    for (unsigned j = 0; j < f_; ++j) {
      prod[i + j] = (prod[i + j] + x.c[i] * y.c[j]) % p_;
    }
  }
  // t^f = -(m_0 + ... + m_{f-1} t^{f-1}).
  for (unsigned k = 2 * f_ - 2; k >= f_; --k) {
    const std::uint64_t top = prod[k];
    prod[k] = 0;
    if (top == 0) continue;
    for (unsigned i = 0; i < f_; ++i) {
      const std::uint64_t sub = (top * modulus_[i]) % p_;
      prod[k - f_ + i] = (prod[k - f_ + i] + p_ - sub) % p_;
    }
  }
  FqElem out;
  for (unsigned i = 0; i < f_; ++i) out.c[i] = prod[i];
  return out;
}

FqElem FqContext::pow(FqElem x, std::uint64_t e) const {
  FqElem out = from_int(1);
  while (e > 0) {
    if (e & 1) out = mul(out, x);
    x = mul(x, x);
    e >>= 1;
  }
  return out;
}

std::uint64_t FqContext::trace(const FqElem& x) const {
  FqElem acc{}, conj = x;
  for (unsigned i = 0; i < f_; ++i) {
    acc = add(acc, conj);
    conj = pow(conj, p_);
  }
  for (unsigned i = 1; i < f_; ++i) {
    if (acc.c[i] != 0) {
      throw Error(ErrorKind::InvalidArgument, "trace left the prime field");
    }
  }
  return acc.c[0];
}

int FqContext::quadratic_character(const FqElem& x) const {
  if (x == FqElem{}) return 0;
  const FqElem r = pow(x, (q_ - 1) / 2);
  return r == from_int(1) ? 1 : -1;
}

}  // namespace rootnum
