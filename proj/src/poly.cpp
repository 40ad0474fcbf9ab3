#include "rootnum/poly.hpp"

#include <utility>

#include "rootnum/error.hpp"

namespace rootnum {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::binomial(unsigned degree, const Integer& constant) {
  std::vector<Integer> c(degree + 1, Integer(0));
  c[degree] = 1;
  c[0] += constant;
  return IntPoly(std::move(c));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& IntPoly::leading() const {
  if (is_zero()) throw Error(ErrorKind::ZeroPolynomial, "leading coefficient of 0");
  return coeffs_.back();
}

Integer IntPoly::constant_term() const {
  return is_zero() ? Integer(0) : coeffs_.front();
}

Integer IntPoly::operator()(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * i;
  return IntPoly(std::move(d));
}

IntPoly IntPoly::shift(const Integer& r) const {
  // Repeated synthetic division by (x - r) yields the Taylor coefficients
  // of f about r, i.e. the coefficients of f(x + r).
  std::vector<Integer> c = coeffs_;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) c[j - 1] += r * c[j];
  }
  return IntPoly(std::move(c));
}

std::string IntPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool show_coeff = mag != 1 || i == 0;
    if (show_coeff) out += rootnum::to_string(mag);
    if (i > 0) {
      if (show_coeff) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Integer resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) {
    throw Error(ErrorKind::ZeroPolynomial, "resultant with the zero polynomial");
  }
  const std::size_t n = static_cast<std::size_t>(f.degree());
  const std::size_t m = static_cast<std::size_t>(g.degree());
  const std::size_t size = n + m;
  std::vector<std::vector<Integer>> sylvester(size, std::vector<Integer>(size, 0));
  // Rows hold coefficients from the leading term down.
  for (std::size_t row = 0; row < m; ++row) {
    for (std::size_t i = 0; i <= n; ++i) sylvester[row][row + i] = f[n - i];
  }
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t i = 0; i <= m; ++i) sylvester[m + row][row + i] = g[m - i];
  }
  return bareiss_determinant(std::move(sylvester));
}

Integer discriminant(const IntPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "discriminant of 0");
  const long n = f.degree();
  if (n < 1) {
    throw Error(ErrorKind::InvalidArgument, "discriminant needs degree >= 1");
  }
  Integer res = resultant(f, f.derivative());
  Integer out;
  mpz_divexact(out.get_mpz_t(), res.get_mpz_t(), f.leading().get_mpz_t());
  if ((n * (n - 1) / 2) % 2 != 0) out = -out;
  return out;
}

}  // namespace rootnum
