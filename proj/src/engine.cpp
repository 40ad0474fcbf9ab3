#include "rootnum/engine.hpp"

#include <algorithm>
#include <array>

#include "rootnum/error.hpp"
#include "rootnum/padic.hpp"

namespace rootnum {

namespace {

constexpr std::array<std::string_view, 8> kCaseNames = {
    "Archimedean", "Two_Case1", "Two_Case2",    "Two_Else",
    "Tame_S1",     "Tame_S2",   "Tame_Trivial", "Wild_P"};

void require_odd_prime(const Integer& p) {
  if (p == 2) throw Error(ErrorKind::NotPrime, "p must be an odd prime, got 2");
  require_prime(p, "p");
}

[[noreturn]] void violated(Hypothesis h, const std::string& detail) {
  throw Error(ErrorKind::HypothesisViolated,
              std::string(hypothesis_name(h)) + " (" + detail + ")");
}

bool divides(const Integer& p, std::int64_t v) {
  return Integer(static_cast<long>(v)) % p == 0;
}

// Balanced representative of n mod p, in (-p/2, p/2].
Integer balanced_residue(const Integer& n, const Integer& p) {
  Integer r = n % p;
  if (r < 0) r += p;
  if (2 * r > p) r -= p;
  return r;
}

}  // namespace

std::string_view case_name(CaseTag tag) noexcept {
  return kCaseNames[static_cast<std::size_t>(tag)];
}

std::optional<CaseTag> parse_case(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kCaseNames.size(); ++i) {
    if (kCaseNames[i] == name) return static_cast<CaseTag>(i);
  }
  return std::nullopt;
}

std::string_view hypothesis_name(Hypothesis h) noexcept {
  switch (h) {
    case Hypothesis::Degree: return "degree";
    case Hypothesis::Monic: return "monic";
    case Hypothesis::ConstantValuation: return "constant-valuation";
    case Hypothesis::Squarefree: return "squarefree";
    case Hypothesis::DiscriminantParity: return "discriminant-parity";
    case Hypothesis::DiscriminantCoprime: return "discriminant-coprime";
  }
  return "unknown";
}

CurveSpec CurveSpec::make(const Integer& p, const Integer& a) {
  require_odd_prime(p);
  if (a == 0) throw Error(ErrorKind::ZeroInput, "a must be nonzero");
  return {p, a};
}

bool CurveSpec::supported() const { return !is_pth_power(a, p); }

std::string Place::label() const {
  return prime ? to_string(*prime) : std::string("inf");
}

const LocalFactor* GlobalResult::factor_at(const Place& place) const {
  auto it = std::find_if(factors.begin(), factors.end(),
                         [&](const LocalFactor& f) { return f.place == place; });
  return it == factors.end() ? nullptr : &*it;
}

int w_infinity(const Integer& p) {
  require_odd_prime(p);
  return legendre(-1, p);
}

LocalFactor w_two(const Integer& p, const Integer& a) {
  require_odd_prime(p);
  const Valuation v = valuation(a, 2);
  const int odd_mod4 = static_cast<int>(mod_ui(v.unit, 4));

  LocalFactor out;
  out.place = Place::finite(2);
  out.two = TwoDetails{v.exponent, odd_mod4};
  if (v.exponent % 2 == 0 && !divides(p, v.exponent + 2) && odd_mod4 == 1) {
    out.sign = legendre(2, p);
    out.tag = CaseTag::Two_Case1;
  } else if (odd_mod4 == 3) {
    out.sign = legendre(-1, p);
    out.tag = CaseTag::Two_Case2;
  } else {
    out.sign = 1;
    out.tag = CaseTag::Two_Else;
  }
  return out;
}

LocalFactor w_tame(const Integer& p, const Integer& a, const Integer& ell) {
  require_odd_prime(p);
  require_prime(ell, "ell");
  if (ell == 2 || ell == p) {
    throw Error(ErrorKind::InvalidArgument,
                "tame factor needs ell outside {2, p}, got " + to_string(ell));
  }
  const Valuation v = valuation(a, ell);
  if (v.exponent == 0) {
    throw Error(ErrorKind::InvalidArgument,
                to_string(ell) + " does not divide " + to_string(a));
  }

  LocalFactor out;
  out.place = Place::finite(ell);
  out.valuation = v.exponent;
  if (v.exponent % 2 != 0) {
    // (-1/ell)^((p-1)/2)
    const bool odd_power = mod_ui(p, 4) == 3;
    out.sign = odd_power ? legendre(-1, ell) : 1;
    out.tag = CaseTag::Tame_S1;
  } else if (!divides(p, v.exponent)) {
    out.sign = legendre(ell, p);
    out.tag = CaseTag::Tame_S2;
  } else {
    out.sign = 1;
    out.tag = CaseTag::Tame_Trivial;
  }
  return out;
}

ModelChoice find_model(const Integer& p, const Integer& a, unsigned long bound) {
  const CurveSpec spec = CurveSpec::make(p, a);
  if (!spec.supported()) {
    throw Error(ErrorKind::UnsupportedTameCase,
                to_string(a) + " is a p-th power in Q_" + to_string(p));
  }
  const unsigned long deg = mpz_get_ui(p.get_mpz_t());
  const IntPoly f = IntPoly::binomial(static_cast<unsigned>(deg), a);
  if (!divides(p, valuation(a, p).exponent)) return {0, f};

  const Integer r0 = balanced_residue(-a, p);
  auto try_shift = [&](const Integer& r) {
    const Integer constant = pow(r, deg) + a;
    return constant != 0 && !divides(p, valuation(constant, p).exponent);
  };
  for (unsigned long t = 0; t <= bound; ++t) {
    for (int s : {1, -1}) {
      if (t == 0 && s == -1) continue;
      const Integer r = r0 + s * p * Integer(t);
      if (try_shift(r)) return {r, f.shift(r)};
    }
  }
  throw Error(ErrorKind::ModelSearchFailed,
              "no shift r = " + to_string(r0) + " + " + to_string(p) +
                  "*t with |t| <= " + std::to_string(bound) + " for a = " +
                  to_string(a));
}

LocalFactor w_p_local(const IntPoly& g, const Integer& p, const Integer& shift) {
  require_odd_prime(p);
  if (Integer(g.degree()) != p) {
    violated(Hypothesis::Degree,
             "degree " + std::to_string(g.degree()) + " != " + to_string(p));
  }
  if (!g.is_monic()) violated(Hypothesis::Monic, "leading coefficient != 1");
  const Integer constant = g.constant_term();
  if (constant == 0) violated(Hypothesis::ConstantValuation, "g(0) = 0");
  const std::int64_t v_constant = valuation(constant, p).exponent;
  if (divides(p, v_constant)) {
    violated(Hypothesis::ConstantValuation,
             "v_p(g(0)) = " + std::to_string(v_constant));
  }
  const Integer disc = discriminant(g);
  if (disc == 0) violated(Hypothesis::Squarefree, "discriminant is 0");
  const std::int64_t v_disc = valuation(disc, p).exponent;
  if (v_disc % 2 == 0) {
    violated(Hypothesis::DiscriminantParity,
             "v_p(disc) = " + std::to_string(v_disc));
  }
  Integer g_common;
  const Integer p_minus_1 = p - 1;
  const Integer v_disc_z(static_cast<long>(v_disc));
  mpz_gcd(g_common.get_mpz_t(), v_disc_z.get_mpz_t(), p_minus_1.get_mpz_t());
  if (g_common != 1) {
    violated(Hypothesis::DiscriminantCoprime,
             "gcd(v_p(disc), p-1) = " + to_string(g_common));
  }

  const Integer hilbert_arg = constant * p_minus_1 * static_cast<long>(v_constant);
  const int h = hilbert(hilbert_arg, disc, p);
  int sign = -legendre(-2, p) * h;
  if (((1 + v_disc) / 2) % 2 != 0) sign *= legendre(-1, p);

  LocalFactor out;
  out.place = Place::finite(p);
  out.sign = sign;
  out.tag = CaseTag::Wild_P;
  out.wild = WildDetails{shift, g, constant, disc, v_constant, v_disc, h};
  return out;
}

GlobalResult global_root_number(const Integer& p, const Integer& a,
                                const EngineOptions& options) {
  const CurveSpec spec = CurveSpec::make(p, a);
  if (!spec.supported()) {
    throw Error(ErrorKind::UnsupportedTameCase,
                to_string(a) + " is a p-th power in Q_" + to_string(p));
  }

  GlobalResult out{spec, {}, 1};
  LocalFactor inf;
  inf.place = Place::infinity();
  inf.sign = w_infinity(p);
  inf.tag = CaseTag::Archimedean;
  out.factors.push_back(std::move(inf));
  out.factors.push_back(w_two(p, a));

  const ModelChoice model = find_model(p, a, options.model_bound);
  LocalFactor wild = w_p_local(model.model, p, model.shift);

  const Factorization fac = factorize(a, options.factor);
  for (const auto& [ell, exponent] : fac.primes) {
    if (ell == 2 || ell == p) continue;
    out.factors.push_back(w_tame(p, a, ell));
  }
  out.factors.push_back(std::move(wild));
  std::sort(out.factors.begin() + 1, out.factors.end(),
            [](const LocalFactor& x, const LocalFactor& y) {
              return *x.place.prime < *y.place.prime;
            });

  for (const LocalFactor& f : out.factors) out.global_sign *= f.sign;
  return out;
}

}  // namespace rootnum
