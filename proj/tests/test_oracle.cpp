#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "rootnum/error.hpp"
#include "rootnum/oracle.hpp"
#include "rootnum/padic.hpp"

using rootnum::CycInt;
using rootnum::ErrorKind;
using rootnum::FqContext;
using rootnum::Integer;
namespace oracle = rootnum::oracle;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const rootnum::Error& e) {
    return e.kind();
  }
  FAIL("expected rootnum::Error");
  return ErrorKind::InvalidArgument;
}

// #{(x, y) in F_q^2 : y^2 = x^p - x} + 1, enumerating y directly.
Integer count_pairs(const FqContext& ctx) {
  Integer total = 1;
  for (std::uint64_t i = 0; i < ctx.order(); ++i) {
    const auto x = ctx.element(i);
    const auto rhs = ctx.sub(ctx.pow(x, ctx.characteristic()), x);
    for (std::uint64_t j = 0; j < ctx.order(); ++j) {
      const auto y = ctx.element(j);
      if (ctx.mul(y, y) == rhs) total += 1;
    }
  }
  return total;
}

}  // namespace

TEST_CASE("finite field construction and arithmetic") {
  const auto f9 = FqContext::make(3, 2);
  CHECK(f9.order() == 9);
  CHECK(f9.modulus() == std::vector<std::uint64_t>{1, 0, 1});  // t^2 + 1
  // Every nonzero element satisfies x^(q-1) = 1 and the group is cyclic of order 8.
  bool has_generator = false;
  for (std::uint64_t i = 1; i < 9; ++i) {
    const auto x = f9.element(i);
    CHECK(f9.pow(x, 8) == f9.from_int(1));
    has_generator =
        has_generator || (f9.pow(x, 4) != f9.from_int(1) && f9.pow(x, 2) != f9.from_int(1));
  }
  CHECK(has_generator);
  // Trace is additive and lands in F_p.
  for (std::uint64_t i = 0; i < 9; ++i) {
    for (std::uint64_t j = 0; j < 9; ++j) {
      const auto x = f9.element(i), y = f9.element(j);
      CHECK(f9.trace(f9.add(x, y)) == (f9.trace(x) + f9.trace(y)) % 3);
    }
  }
  const auto f27 = FqContext::make(3, 3);
  CHECK(f27.order() == 27);
  const auto f343 = FqContext::make(7, 3);
  int squares = 0;
  for (std::uint64_t i = 1; i < f343.order(); ++i) {
    squares += f343.quadratic_character(f343.element(i)) == 1;
  }
  CHECK(squares == 171);

  CHECK(kind_of([] { FqContext::make(3, 4); }) == ErrorKind::ContextTooLarge);
  CHECK(kind_of([] { FqContext::make(1031, 2); }) == ErrorKind::ContextTooLarge);
  CHECK(kind_of([] { FqContext::make(9, 1); }) == ErrorKind::NotPrime);
  CHECK(kind_of([] { FqContext::make(2, 1); }) == ErrorKind::NotPrime);
}

TEST_CASE("cyclotomic integers") {
  for (std::uint64_t p : {3u, 5u, 7u, 11u}) {
    const CycInt zeta = CycInt::zeta_power(p, 1);
    CycInt power = CycInt::rational(p, 1), sum(p);
    for (std::uint64_t k = 0; k < p; ++k) {
      sum += power;
      power = power * zeta;
    }
    CHECK(power == CycInt::rational(p, 1));  // zeta^p = 1
    CHECK(sum == CycInt(p));                 // 1 + zeta + ... + zeta^(p-1) = 0
    CHECK(zeta.conj() == CycInt::zeta_power(p, -1));
    CHECK(zeta * zeta.conj() == CycInt::rational(p, 1));
  }
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> c(-5, 5);
  for (int i = 0; i < 50; ++i) {
    auto random = [&] {
      std::vector<Integer> w(7);
      for (auto& x : w) x = c(rng);
      return CycInt::from_exponent_weights(7, w);
    };
    const CycInt x = random(), y = random(), z = random();
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x * y).conj() == x.conj() * y.conj());
  }
  CHECK(CycInt::rational(5, 3).rational_value() == Integer(3));
  CHECK_FALSE(CycInt::zeta_power(5, 2).is_rational());
  CHECK(kind_of([] { CycInt(3) + CycInt(5); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("count_points examples") {
  CHECK(oracle::count_points(FqContext::make(3, 1)) == 4);
  CHECK(oracle::count_points(FqContext::make(5, 1)) == 6);
  for (auto [p, f] : {std::pair{3u, 2u}, {3u, 3u}, {5u, 2u}, {7u, 1u}}) {
    const auto ctx = FqContext::make(p, f);
    CHECK(oracle::count_points(ctx) == count_pairs(ctx));
  }
}

TEST_CASE("gauss_trace_prediction matches point counts") {
  CHECK(oracle::gauss_trace_prediction(FqContext::make(3, 1)) == 4);
  const auto eigen = oracle::frobenius_eigenvalues(FqContext::make(3, 1));
  REQUIRE(eigen.size() == 2);
  CHECK(eigen[0] + eigen[1] == CycInt(3));
  for (auto [p, f] : {std::pair{3u, 2u}, {3u, 3u}, {5u, 1u}, {5u, 2u}, {7u, 1u},
                      {7u, 2u}, {11u, 1u}, {11u, 2u}, {13u, 1u}}) {
    const auto ctx = FqContext::make(p, f);
    CHECK(oracle::gauss_trace_prediction(ctx) == count_pairs(ctx));
    const CycInt q = CycInt::rational(p, static_cast<unsigned long>(ctx.order()));
    for (const CycInt& lambda : oracle::frobenius_eigenvalues(ctx)) {
      CHECK(lambda * lambda.conj() == q);
    }
  }
}

TEST_CASE("gauss sum squares") {
  auto square = [](unsigned p, unsigned f) {
    const auto ctx = FqContext::make(p, f);
    const CycInt g = oracle::gauss_sum(ctx);
    return (g * g).rational_value();
  };
  CHECK(square(3, 1) == Integer(-3));
  CHECK(square(3, 2) == Integer(9));
  CHECK(square(5, 1) == Integer(5));
  CHECK(square(3, 3) == Integer(-27));
  for (auto [p, f] : {std::pair{3u, 1u}, {3u, 2u}, {3u, 3u}, {5u, 1u}, {5u, 2u},
                      {7u, 1u}, {7u, 2u}, {11u, 1u}}) {
    CHECK(oracle::gauss_sum_square_check(FqContext::make(p, f)));
  }
}

TEST_CASE("parity identity") {
  CHECK(oracle::parity_identity_check(3));
  CHECK(oracle::parity_identity_check(5));
  CHECK(oracle::parity_identity_check(11));
  CHECK(rootnum::legendre(-2, 5) == -1);
  CHECK(rootnum::legendre(-2, 11) == 1);
  CHECK(kind_of([] { oracle::parity_identity_check(15); }) == ErrorKind::NotPrime);
}

TEST_CASE("hilbert_bruteforce") {
  CHECK(oracle::hilbert_bruteforce(3, 3, 3) == -1);
  CHECK(oracle::hilbert_bruteforce(-1, 2, 2) == 1);
  CHECK(oracle::hilbert_bruteforce(6, -108, 3) == -1);
  CHECK(oracle::hilbert_bruteforce(-1, -1, 2) == -1);
  CHECK(oracle::hilbert_bruteforce(2, 5, 2) == -1);
  CHECK(oracle::hilbert_bruteforce(5, 7, 3) == 1);
}

TEST_CASE("scaling_scan") {
  auto report = oracle::scaling_scan(3, -30, 30, {2});
  CHECK(report.passed());
  CHECK(report.checked > 0);
  report = oracle::scaling_scan(5, -10, 10, {2, 3}, {}, 3);
  CHECK(report.passed());
  report = oracle::scaling_scan(3, 1, 1, {1});
  CHECK(report.passed());
  CHECK(report.checked == 0);
  REQUIRE(report.skipped.size() == 1);
  CHECK(report.skipped[0].reason == "UnsupportedTameCase");
}

TEST_CASE("fixture parsing") {
  std::istringstream good(
      "# header\n"
      "\n"
      "3 2 -1\n"
      "  3\t3\t-1  \n"
      "5 2 1\n");
  const auto rows = oracle::parse_fixture(good);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == oracle::FixtureRow{3, 2, -1});
  CHECK(rows[2] == oracle::FixtureRow{5, 2, 1});

  for (const char* bad : {"3 2\n", "3 2 -1 7\n", "3 2 0\n", "4 2 1\n", "3 0 1\n",
                          "3 two 1\n", "2 3 1\n"}) {
    std::istringstream in(bad);
    CHECK(kind_of([&] { oracle::parse_fixture(in); }) == ErrorKind::MalformedFixture);
  }
}

TEST_CASE("fixture_check") {
  auto report = oracle::fixture_check({{3, 2, -1}, {3, 3, -1}});
  CHECK(report.passed());
  CHECK(report.matches == 2);

  report = oracle::fixture_check({{3, 2, 1}, {5, 2, 1}});
  CHECK(report.matches == 1);
  REQUIRE(report.mismatches.size() == 1);
  CHECK(report.mismatches[0].got == "-1");

  CHECK(kind_of([] { oracle::fixture_check({{3, -1, 1}}); }) ==
        ErrorKind::MalformedFixture);
}

TEST_CASE("committed p = 3 fixture") {
  std::ifstream in(ROOTNUM_DATA_DIR "/mordell_p3.tsv");
  REQUIRE(in);
  const auto rows = oracle::parse_fixture(in);
  CHECK(rows.size() == 76);
  const auto report = oracle::fixture_check(rows, {}, 4);
  CHECK(report.passed());
  CHECK(report.matches == rows.size());
}
