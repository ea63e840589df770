#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "pellkit/gen_pell.hpp"
#include "pellkit/hypercomplex.hpp"

using namespace pellkit;

namespace {

const std::vector<ExactInt>& coords() {
  static const std::vector<ExactInt> c = {-3, -1, 0, 2, 7};
  return c;
}

DualOf<double> dual_square(const DualOf<double>& x) {
  return {x.re * x.re, 2 * x.re * x.du};
}

}  // namespace

TEST_CASE("imaginary and nilpotent units behave as defined") {
  CHECK(ComplexPellValue{0, 1} * ComplexPellValue{0, 1} ==
        ComplexPellValue{-1, 0});
  CHECK(DualPellValue{0, 1} * DualPellValue{0, 1} == DualPellValue{0, 0});
  CHECK(ComplexPellValue{1, 2} * ComplexPellValue{3, 4} ==
        ComplexPellValue{-5, 10});
  CHECK(DualPellValue{1, 2} * DualPellValue{3, 4} == DualPellValue{3, 10});
}

TEST_CASE("both extensions are commutative rings with multiplicative conj") {
  for (const ExactInt& a : coords()) {
    for (const ExactInt& b : coords()) {
      ComplexPellValue x{a, b};
      DualPellValue u{a, b};
      for (const ExactInt& c : coords()) {
        for (const ExactInt& d : coords()) {
          ComplexPellValue y{c, d};
          DualPellValue v{c, d};
          CHECK(x * y == y * x);
          CHECK(u * v == v * u);
          CHECK(conj(x * y) == conj(x) * conj(y));
          CHECK(conj(u * v) == conj(u) * conj(v));
          ComplexPellValue z{d, a};
          CHECK(x * (y + z) == x * y + x * z);
          CHECK((x * y) * z == x * (y * z));
          DualPellValue w{d, a};
          CHECK(u * (v + w) == u * v + u * w);
          CHECK((u * v) * w == u * (v * w));
        }
      }
    }
  }
}

TEST_CASE("paired members carry consecutive family terms") {
  CHECK(complex_pell({1, 0}, 1) == ComplexPellValue{1, 2});
  CHECK(complex_pell({2, 2}, 2) == ComplexPellValue{6, 14});
  CHECK(dual_pell({1, 0}, 2) == DualPellValue{2, 5});
  for (long long p = -3; p <= 3; ++p) {
    for (long long q = -3; q <= 3; ++q) {
      PellParams params{p, q};
      for (long long n = -8; n <= 12; ++n) {
        ExactInt g0 = gen_pell(params, n);
        ExactInt g1 = gen_pell(params, n + 1);
        CHECK(complex_pell(params, n) == ComplexPellValue{g0, g1});
        CHECK(dual_pell(params, n) == DualPellValue{g0, g1});
      }
    }
  }
}

TEST_CASE("dual closed form reproduces both components exactly") {
  CHECK(dual_pell_binet({1, 0}, 3) == DualPellValue{5, 12});
  CHECK(dual_pell_binet({2, 1}, 0) == DualPellValue{1, 2});
  for (long long p = -3; p <= 3; ++p) {
    for (long long q = -3; q <= 3; ++q) {
      PellParams params{p, q};
      for (long long n = -10; n <= 60; ++n) {
        CHECK(dual_pell_binet(params, n) == dual_pell(params, n));
      }
    }
  }
}

TEST_CASE("nilpotent square root: pinned values and round trips") {
  DualOf<double> r = dual_sqrt({4.0, 8.0});
  CHECK(r.re == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(r.du == doctest::Approx(2.0).epsilon(1e-14));
  DualOf<double> s = dual_sqrt({5.0, 24.0});
  CHECK(s.re == doctest::Approx(std::sqrt(5.0)).epsilon(1e-14));
  CHECK(s.du == doctest::Approx(12.0 / std::sqrt(5.0)).epsilon(1e-14));

  const double res[] = {0.25, 2.0, 5.0, 10.0, 1e6};
  const double dus[] = {-3.0, 0.0, 7.0};
  for (double a : res) {
    for (double b : dus) {
      DualOf<double> back = dual_square(dual_sqrt({a, b}));
      CHECK(std::abs(back.re - a) <= 1e-12 * std::max(1.0, std::abs(a)));
      CHECK(std::abs(back.du - b) <= 1e-12 * std::max(1.0, std::abs(b)));
    }
  }

  CHECK_THROWS_AS(dual_sqrt({0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(dual_sqrt({-4.0, 0.0}), std::invalid_argument);
}

TEST_CASE("dual ratio terms converge onto the silver ratio") {
  DualOf<double> t1 = dual_ratio_term({1, 0}, 1);
  CHECK(t1.re == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(t1.du == doctest::Approx(1.0).epsilon(1e-14));  // (P_3 P_1 - P_2^2)/P_1^2

  const double alpha = 1.0 + std::sqrt(2.0);
  for (long long p = -3; p <= 3; ++p) {
    for (long long q = -3; q <= 3; ++q) {
      if (p == 0 && q == 0) continue;
      DualOf<double> t = dual_ratio_term({p, q}, 40);
      CHECK(std::abs(t.re - alpha) < 1e-12);
      CHECK(std::abs(t.du) < 1e-12);
    }
  }
  CHECK_THROWS_AS(dual_ratio_term({0, 1}, 1), std::invalid_argument);
}
