#pragma once

// Root number of the Jacobian of y^2 = x^p + a over Q, assembled from
// local factors at infinity, 2, p and the odd primes dividing a.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rootnum/arith.hpp"
#include "rootnum/integer.hpp"
#include "rootnum/poly.hpp"

namespace rootnum {

/// The curve y^2 = x^p + a.
struct CurveSpec {
  Integer p;
  Integer a;

  /// Validates p odd prime, a != 0.
  static CurveSpec make(const Integer& p, const Integer& a);
  bool supported() const;
  friend bool operator==(const CurveSpec&, const CurveSpec&) = default;
};

/// A place of Q: the real place or a finite prime.
struct Place {
  std::optional<Integer> prime;  // nullopt for the infinite place

  static Place infinity() { return {}; }
  static Place finite(Integer ell) { return {std::move(ell)}; }
  bool is_infinite() const { return !prime.has_value(); }
  std::string label() const;
  friend bool operator==(const Place&, const Place&) = default;
};

enum class CaseTag {
  Archimedean,
  Two_Case1,
  Two_Case2,
  Two_Else,
  Tame_S1,
  Tame_S2,
  Tame_Trivial,
  Wild_P,
};

std::string_view case_name(CaseTag tag) noexcept;
std::optional<CaseTag> parse_case(std::string_view name) noexcept;

/// Intermediates of the wild factor at p, kept for auditing.
struct WildDetails {
  Integer shift;           // g(x) = x^p + a evaluated at x + shift
  IntPoly model;           // g
  Integer constant;        // g(0)
  Integer discriminant;    // disc(g)
  std::int64_t v_constant = 0;
  std::int64_t v_discriminant = 0;
  int hilbert = 1;         // (g(0)(p-1)v_p(g(0)), disc g)_p
  friend bool operator==(const WildDetails&, const WildDetails&) = default;
};

/// Residue data that decided the factor at 2.
struct TwoDetails {
  std::int64_t v2 = 0;
  int odd_part_mod4 = 1;  // a / 2^v2 mod 4, in {1, 3}
  friend bool operator==(const TwoDetails&, const TwoDetails&) = default;
};

struct LocalFactor {
  Place place;
  int sign = 1;
  CaseTag tag = CaseTag::Archimedean;
  std::optional<std::int64_t> valuation;  // v_ell(a) for tame places
  std::optional<TwoDetails> two;
  std::optional<WildDetails> wild;
  friend bool operator==(const LocalFactor&, const LocalFactor&) = default;
};

struct GlobalResult {
  CurveSpec spec;
  std::vector<LocalFactor> factors;  // ordered: infinity, then primes ascending
  int global_sign = 1;

  const LocalFactor* factor_at(const Place& place) const;
  friend bool operator==(const GlobalResult&, const GlobalResult&) = default;
};

enum class Hypothesis {
  Degree,
  Monic,
  ConstantValuation,
  Squarefree,
  DiscriminantParity,
  DiscriminantCoprime,
};

std::string_view hypothesis_name(Hypothesis h) noexcept;

struct EngineOptions {
  // Model search scans shifts r0 + p*t for |t| <= model_bound.
  unsigned long model_bound = 200;
  FactorOptions factor;
};

struct ModelChoice {
  Integer shift;
  IntPoly model;
};

int w_infinity(const Integer& p);

LocalFactor w_two(const Integer& p, const Integer& a);

/// Factor at an odd prime ell != p dividing a (tame ramification).
LocalFactor w_tame(const Integer& p, const Integer& a, const Integer& ell);

/// Searches g(x) = f(x + r), f = x^p + a, with p not dividing v_p(g(0)).
/// Tries r = 0 when p does not divide v_p(a); otherwise r = r0 + p*t for
/// t = 0, 1, -1, 2, -2, ... with r0 the balanced residue of -a mod p.
ModelChoice find_model(const Integer& p, const Integer& a,
                       unsigned long bound = 200);

/// Wild local root number at p for a monic degree-p model g:
///   -(-2/p) * (g(0)(p-1)v_p(g(0)), disc g)_p * (-1/p)^((1 + v_p(disc g))/2).
/// Throws HypothesisViolated when a checkable precondition fails.
LocalFactor w_p_local(const IntPoly& g, const Integer& p,
                      const Integer& shift = 0);

/// Throws UnsupportedTameCase when a is a p-th power in Q_p.
GlobalResult global_root_number(const Integer& p, const Integer& a,
                                const EngineOptions& options = {});

}  // namespace rootnum
