#include "pellkit/pell.hpp"

#include <stdexcept>

namespace pellkit {

namespace {

// Walks the recurrence from the seed pair; lo/hi track (x_k, x_{k+1}).
ExactInt seq_value(SeqIndex n, ExactInt lo, ExactInt hi) {
  if (n >= 0) {
    for (SeqIndex k = 0; k < n; ++k) {
      ExactInt next = 2 * hi + lo;
      lo = std::move(hi);
      hi = std::move(next);
    }
  } else {
    for (SeqIndex k = 0; k > n; --k) {
      ExactInt prev = hi - 2 * lo;
      hi = std::move(lo);
      lo = std::move(prev);
    }
  }
  return lo;
}

}  // namespace

ExactInt pell(SeqIndex n) { return seq_value(n, 0, 1); }

ExactInt pell_lucas(SeqIndex n) { return seq_value(n, 2, 2); }

std::pair<ExactInt, ExactInt> pell_pair_doubling(SeqIndex n) {
  if (n < 0) {
    throw std::invalid_argument("pell_pair_doubling: index must be >= 0");
  }
  if (n == 0) return {0, 1};
  auto [a, b] = pell_pair_doubling(n / 2);  // (P_k, P_{k+1}), k = n/2
  ExactInt even = 2 * a * b - 2 * a * a;    // P_{2k}
  ExactInt odd = a * a + b * b;             // P_{2k+1}
  if (n % 2 == 0) return {std::move(even), std::move(odd)};
  ExactInt next = 2 * odd + even;           // P_{2k+2}
  return {std::move(odd), std::move(next)};
}

Mat2 mat2_mul(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 pell_matrix_pow(SeqIndex n) {
  if (n < 0) {
    throw std::invalid_argument("pell_matrix_pow: exponent must be >= 0");
  }
  Mat2 result{1, 0, 0, 1};
  Mat2 base{2, 1, 1, 0};
  while (n > 0) {
    if (n & 1) result = mat2_mul(result, base);
    n >>= 1;
    if (n > 0) base = mat2_mul(base, base);
  }
  return result;
}

namespace {

// (P_n, P_{n+1}) mod m, doubling with reduction at every step.
std::pair<ExactInt, ExactInt> pell_pair_mod(SeqIndex n, const ExactInt& m) {
  if (n == 0) return {0, 1 % m};
  auto [a, b] = pell_pair_mod(n / 2, m);
  ExactInt even = (2 * a * b - 2 * a * a) % m;
  if (even < 0) even += m;
  ExactInt odd = (a * a + b * b) % m;
  if (n % 2 == 0) return {std::move(even), std::move(odd)};
  ExactInt next = (2 * odd + even) % m;
  return {std::move(odd), std::move(next)};
}

}  // namespace

ExactInt pell_mod(SeqIndex n, const ExactInt& m) {
  if (n < 0) throw std::invalid_argument("pell_mod: index must be >= 0");
  if (m <= 1) throw std::invalid_argument("pell_mod: modulus must be > 1");
  return pell_pair_mod(n, m).first;
}

}  // namespace pellkit
