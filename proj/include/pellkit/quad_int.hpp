#pragma once

#include "pellkit/exact_int.hpp"

namespace pellkit {

// Element a + b*sqrt(2) of the ring Z[sqrt(2)], in canonical (unique)
// representation: two elements are equal iff both coordinates are.
struct QuadInt {
  ExactInt a;  // rational part
  ExactInt b;  // coefficient of sqrt(2)

  friend bool operator==(const QuadInt&, const QuadInt&) = default;
  friend QuadInt operator+(const QuadInt& x, const QuadInt& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend QuadInt operator-(const QuadInt& x, const QuadInt& y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend QuadInt operator-(const QuadInt& x) { return {-x.a, -x.b}; }
  friend QuadInt operator*(const QuadInt& x, const QuadInt& y) {
    return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
};

// Exact product (a+b√2)(c+d√2) = (ac+2bd) + (ad+bc)√2.
QuadInt quad_mul(const QuadInt& x, const QuadInt& y);

// a - b√2; an involutive ring homomorphism swapping the two roots.
QuadInt quad_conj(const QuadInt& x);

// The silver ratio alpha = 1 + √2 and its conjugate beta = 1 - √2, the roots
// of t^2 - 2t - 1. alpha*beta = -1, so both are units.
QuadInt silver_alpha();
QuadInt silver_beta();

// alpha^n for any signed n (alpha^{-1} = -beta).
QuadInt alpha_pow(SeqIndex n);

// beta^n for any signed n (beta^{-1} = -alpha). Computed directly, not as a
// conjugate of alpha_pow, so the two power routes stay independent.
QuadInt beta_pow(SeqIndex n);

// P_n via alpha^n - beta^n, which must come out as 0 + (2c)√2; returns c.
// The shape is an error-checked postcondition, not an assumption.
ExactInt binet_pell(SeqIndex n);

// Q_n via alpha^n + beta^n, which must have zero √2-coefficient; returns the
// rational part.
ExactInt binet_pell_lucas(SeqIndex n);

// a + b*sqrt(2) in double precision. Inexact by design (limit experiments
// only); throws if the value does not fit a finite double.
double to_real(const QuadInt& x);

}  // namespace pellkit
