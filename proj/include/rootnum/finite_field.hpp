#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace rootnum {

/// Element of F_q = F_p[t]/(m(t)), coefficients low degree first.
struct FqElem {
  std::array<std::uint64_t, 3> c{};
  friend bool operator==(const FqElem&, const FqElem&) = default;
};

/// Finite field of order q = p^f for small p and f <= 3, realized as
/// F_p[t]/(m) with m the first monic irreducible found in lexicographic
/// order of its lower coefficients.
class FqContext {
 public:
  static constexpr unsigned kMaxDegree = 3;
  static constexpr std::uint64_t kMaxOrder = 1u << 20;

  /// Throws NotPrime for even or composite p and ContextTooLarge when
  /// f > kMaxDegree or p^f > kMaxOrder.
  static FqContext make(std::uint64_t p, unsigned f);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return f_; }
  std::uint64_t order() const { return q_; }
  /// Monic modulus, f + 1 coefficients low degree first.
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  /// Bijection [0, q) -> F_q through base-p digits.
  FqElem element(std::uint64_t index) const;
  FqElem from_int(std::int64_t n) const;

  FqElem add(const FqElem& x, const FqElem& y) const;
  FqElem sub(const FqElem& x, const FqElem& y) const;
  FqElem mul(const FqElem& x, const FqElem& y) const;
  FqElem pow(FqElem x, std::uint64_t e) const;

  /// Tr_{F_q/F_p}(x) = x + x^p + ... + x^(p^(f-1)), as an integer in [0, p).
  std::uint64_t trace(const FqElem& x) const;

  /// Quadratic character via Euler's criterion; 0 at 0.
  int quadratic_character(const FqElem& x) const;

 private:
  FqContext(std::uint64_t p, unsigned f, std::vector<std::uint64_t> modulus);

  std::uint64_t p_;
  unsigned f_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;
};

}  // namespace rootnum
