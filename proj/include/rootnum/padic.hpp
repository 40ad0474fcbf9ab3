#pragma once

#include <cstdint>

#include "rootnum/integer.hpp"

namespace rootnum {

/// value = prime^valuation * unit, prime not dividing unit.
struct LocalUnitDecomp {
  Integer prime;
  std::int64_t valuation = 0;
  Integer unit;
};

LocalUnitDecomp decompose(const Integer& value, const Integer& prime);

/// Whether a lies in (Q_p^x)^p for an odd prime p: p | v_p(a) and the unit
/// part u satisfies u^(p-1) = 1 mod p^2.
bool is_pth_power(const Integer& a, const Integer& p);

/// Hilbert symbol (a, b) over Q_p for odd p.
int hilbert_odd(const Integer& a, const Integer& b, const Integer& p);

/// Hilbert symbol (a, b) over Q_2.
int hilbert_two(const Integer& a, const Integer& b);

/// Hilbert symbol (a, b) over Q_ell, dispatching on ell.
int hilbert(const Integer& a, const Integer& b, const Integer& ell);

}  // namespace rootnum
