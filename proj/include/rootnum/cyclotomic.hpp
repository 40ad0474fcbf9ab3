#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rootnum/integer.hpp"

namespace rootnum {

/// Element of Z[zeta_p] in the power basis 1, zeta, ..., zeta^(p-2).
/// zeta^(p-1) is rewritten as -(1 + zeta + ... + zeta^(p-2)), so equal
/// elements have equal coordinates.
class CycInt {
 public:
  explicit CycInt(std::uint64_t p);

  static CycInt rational(std::uint64_t p, const Integer& n);
  static CycInt zeta_power(std::uint64_t p, std::int64_t k);
  /// sum_k weights[k] * zeta^k with weights indexed by k in [0, p).
  static CycInt from_exponent_weights(std::uint64_t p,
                                      const std::vector<Integer>& weights);

  std::uint64_t prime() const { return p_; }
  const std::vector<Integer>& coords() const { return coords_; }

  CycInt operator+(const CycInt& o) const;
  CycInt operator-(const CycInt& o) const;
  CycInt operator-() const;
  CycInt operator*(const CycInt& o) const;
  CycInt& operator+=(const CycInt& o);

  /// Complex conjugation, zeta -> zeta^(-1).
  CycInt conj() const;

  bool is_rational() const;
  std::optional<Integer> rational_value() const;

  friend bool operator==(const CycInt&, const CycInt&) = default;

  std::string to_string() const;

 private:
  void check_same_ring(const CycInt& o) const;

  std::uint64_t p_;
  std::vector<Integer> coords_;
};

}  // namespace rootnum
