#include "rootnum/cyclotomic.hpp"

#include "rootnum/error.hpp"

namespace rootnum {

namespace {

std::uint64_t reduce_exponent(std::int64_t k, std::uint64_t p) {
  const std::int64_t m = static_cast<std::int64_t>(p);
  std::int64_t r = k % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

}  // namespace

CycInt::CycInt(std::uint64_t p) : p_(p), coords_(p - 1, Integer(0)) {
  if (p < 3) throw Error(ErrorKind::InvalidArgument, "cyclotomic ring needs p >= 3");
}

CycInt CycInt::from_exponent_weights(std::uint64_t p,
                                     const std::vector<Integer>& weights) {
  if (weights.size() != p) {
    throw Error(ErrorKind::InvalidArgument, "expected p exponent weights");
  }
  CycInt out(p);
  const Integer& top = weights[p - 1];
  for (std::uint64_t i = 0; i + 1 < p; ++i) out.coords_[i] = weights[i] - top;
  return out;
}

CycInt CycInt::rational(std::uint64_t p, const Integer& n) {
  CycInt out(p);
  out.coords_[0] = n;
  return out;
}

CycInt CycInt::zeta_power(std::uint64_t p, std::int64_t k) {
  std::vector<Integer> w(p, Integer(0));
  w[reduce_exponent(k, p)] = 1;
  return from_exponent_weights(p, w);
}

void CycInt::check_same_ring(const CycInt& o) const {
  if (o.p_ != p_) {
    throw Error(ErrorKind::InvalidArgument, "mixing different cyclotomic rings");
  }
}

CycInt CycInt::operator+(const CycInt& o) const {
  CycInt out = *this;
  out += o;
  return out;
}

CycInt& CycInt::operator+=(const CycInt& o) {
  check_same_ring(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

CycInt CycInt::operator-() const {
  CycInt out = *this;
  for (Integer& c : out.coords_) c = -c;
  return out;
}

CycInt CycInt::operator-(const CycInt& o) const { return *this + (-o); }

CycInt CycInt::operator*(const CycInt& o) const {
  check_same_ring(o);
  // Multiply in Z[x]/(x^p - 1), then fold x^(p-1) back into the basis.
  std::vector<Integer> w(p_, Integer(0));
  for (std::uint64_t i = 0; i + 1 < p_; ++i) {
    if (coords_[i] == 0) continue;
    for (std::uint64_t j = 0; j + 1 < p_; ++j) {
      w[(i + j) % p_] += coords_[i] * o.coords_[j];
    }
  }
  return from_exponent_weights(p_, w);
}

CycInt CycInt::conj() const {
  std::vector<Integer> w(p_, Integer(0));
  for (std::uint64_t i = 0; i + 1 < p_; ++i) w[(p_ - i) % p_] = coords_[i];
  return from_exponent_weights(p_, w);
}

bool CycInt::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (coords_[i] != 0) return false;
  }
  return true;
}

std::optional<Integer> CycInt::rational_value() const {
  if (!is_rational()) return std::nullopt;
  return coords_[0];
}

std::string CycInt::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ", ";
    out += rootnum::to_string(coords_[i]);
  }
  return out + "]";
}

}  // namespace rootnum
