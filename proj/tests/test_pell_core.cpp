#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "pellkit/pell.hpp"

using namespace pellkit;

TEST_CASE("first ten terms and the zero-index seeds") {
  const long long expect_p[10] = {1, 2, 5, 12, 29, 70, 169, 408, 985, 2378};
  const long long expect_q[10] = {2, 6, 14, 34, 82, 198, 478, 1154, 2786, 6726};
  CHECK(pell(0) == 0);
  CHECK(pell_lucas(0) == 2);
  for (int n = 1; n <= 10; ++n) {
    CHECK(pell(n) == expect_p[n - 1]);
    CHECK(pell_lucas(n) == expect_q[n - 1]);
  }
}

TEST_CASE("recurrence holds across a signed index range") {
  for (long long n = -50; n <= 198; ++n) {
    ExactInt want_p = 2 * pell(n + 1) + pell(n);
    ExactInt want_q = 2 * pell_lucas(n + 1) + pell_lucas(n);
    CHECK(pell(n + 2) == want_p);
    CHECK(pell_lucas(n + 2) == want_q);
  }
}

TEST_CASE("negative indices obey the reflection laws") {
  for (long long n = 0; n <= 60; ++n) {
    ExactInt want_p = (n % 2 == 0) ? ExactInt(-pell(n)) : pell(n);
    ExactInt want_q = (n % 2 == 0) ? pell_lucas(n) : ExactInt(-pell_lucas(n));
    CHECK(pell(-n) == want_p);
    CHECK(pell_lucas(-n) == want_q);
  }
}

TEST_CASE("terms alternate parity with the index") {
  for (long long n = 1; n <= 200; ++n) {
    CHECK(pell(n) % 2 == n % 2);
    CHECK(pell_lucas(n) % 2 == 0);  // every companion term is even
  }
}

TEST_CASE("doubling pairs match the recurrence up to 2000") {
  ExactInt lo = 0, hi = 1;  // (P_n, P_{n+1})
  for (long long n = 0; n <= 2000; ++n) {
    auto [a, b] = pell_pair_doubling(n);
    CHECK(a == lo);
    CHECK(b == hi);
    ExactInt next = 2 * hi + lo;
    lo = std::move(hi);
    hi = std::move(next);
  }
}

TEST_CASE("doubling pair at a pinned small index") {
  auto [a, b] = pell_pair_doubling(4);
  CHECK(a == 12);
  CHECK(b == 29);
}

TEST_CASE("matrix powers carry consecutive terms in their entries") {
  Mat2 m3 = pell_matrix_pow(3);
  CHECK(m3 == Mat2{12, 5, 5, 2});
  CHECK(pell_matrix_pow(0) == Mat2{1, 0, 0, 1});
  for (long long n = 1; n <= 500; ++n) {
    Mat2 m = pell_matrix_pow(n);
    CHECK(m.a == pell(n + 1));
    CHECK(m.b == pell(n));
    CHECK(m.c == pell(n));
    CHECK(m.d == pell(n - 1));
  }
}

TEST_CASE("modular evaluation agrees with reducing the exact value") {
  const long long mods[3] = {2, 10, 997};
  for (long long m : mods) {
    for (long long n = 0; n <= 300; ++n) {
      ExactInt want = pell(n) % m;
      if (want < 0) want += m;
      CHECK(pell_mod(n, m) == want);
    }
  }
  CHECK(pell_mod(8, 10) == 8);
}

TEST_CASE("out-of-domain arguments are rejected") {
  CHECK_THROWS_AS(pell_pair_doubling(-1), std::invalid_argument);
  CHECK_THROWS_AS(pell_matrix_pow(-2), std::invalid_argument);
  CHECK_THROWS_AS(pell_mod(-1, 5), std::invalid_argument);
  CHECK_THROWS_AS(pell_mod(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(pell_mod(3, 0), std::invalid_argument);
}
