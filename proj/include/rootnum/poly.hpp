#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "rootnum/integer.hpp"

namespace rootnum {

/// Dense polynomial with integer coefficients, stored low degree first.
/// The zero polynomial has no coefficients and degree -1; otherwise the
/// last stored coefficient is nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  /// x^degree + constant.
  static IntPoly binomial(unsigned degree, const Integer& constant);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& operator[](std::size_t i) const { return coeffs_[i]; }

  /// Leading coefficient; throws ZeroPolynomial for the zero polynomial.
  const Integer& leading() const;
  Integer constant_term() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }

  Integer operator()(const Integer& x) const;
  IntPoly derivative() const;

  /// g(x) = f(x + r).
  IntPoly shift(const Integer& r) const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  /// Human-readable form, e.g. "x^3 + 3*x^2 - 2".
  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Res(f, g) = det Sylvester(f, g) = lc(f)^deg(g) * prod_{f(r)=0} g(r).
Integer resultant(const IntPoly& f, const IntPoly& g);

/// (-1)^(n(n-1)/2) Res(f, f') / lc(f) for deg f = n >= 1.
Integer discriminant(const IntPoly& f);

/// Determinant of a square integer matrix by fraction-free elimination.
Integer bareiss_determinant(std::vector<std::vector<Integer>> m);

}  // namespace rootnum
