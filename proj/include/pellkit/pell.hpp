#pragma once

#include <utility>

#include "pellkit/exact_int.hpp"

namespace pellkit {

// P_n for any signed n: P_0 = 0, P_1 = 1, P_n = 2 P_{n-1} + P_{n-2},
// extended backward by x_{n-2} = x_n - 2 x_{n-1}. O(|n|) iterative.
ExactInt pell(SeqIndex n);

// Companion sequence Q_n: Q_0 = 2, Q_1 = 2, same recurrence and extension.
ExactInt pell_lucas(SeqIndex n);

// (P_n, P_{n+1}) in O(log n) big-integer multiplications via the doubling
// identities P_{2n+1} = P_n^2 + P_{n+1}^2 and P_{2n} = 2 P_{n+1} P_n - 2 P_n^2.
// Requires n >= 0.
std::pair<ExactInt, ExactInt> pell_pair_doubling(SeqIndex n);

// Row-major 2x2 matrix [[a, b], [c, d]] over ExactInt.
struct Mat2 {
  ExactInt a, b, c, d;
  friend bool operator==(const Mat2&, const Mat2&) = default;
};
Mat2 mat2_mul(const Mat2& x, const Mat2& y);

// [[2,1],[1,0]]^n by binary exponentiation; requires n >= 0. For n >= 1 the
// entries read [[P_{n+1}, P_n], [P_n, P_{n-1}]]; n = 0 gives the identity.
Mat2 pell_matrix_pow(SeqIndex n);

// P_n mod m via doubling with reduction at every step; result in [0, m).
// Requires n >= 0 and m > 1.
ExactInt pell_mod(SeqIndex n, const ExactInt& m);

}  // namespace pellkit
