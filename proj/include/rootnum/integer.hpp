#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace rootnum {

/// Arbitrary-precision signed integer used for every exact quantity.
using Integer = mpz_class;

inline std::string to_string(const Integer& n) { return n.get_str(10); }

/// Parses an optionally signed decimal literal; nullopt on malformed text.
std::optional<Integer> parse_integer(std::string_view text);

/// Value as int64 when it fits.
std::optional<std::int64_t> to_int64(const Integer& n);

/// Least non-negative residue of n modulo m (m > 0).
inline unsigned long mod_ui(const Integer& n, unsigned long m) {
  return mpz_fdiv_ui(n.get_mpz_t(), m);
}

inline Integer pow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

}  // namespace rootnum
