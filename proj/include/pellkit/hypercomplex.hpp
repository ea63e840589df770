#pragma once

#include "pellkit/exact_int.hpp"
#include "pellkit/gen_pell.hpp"

namespace pellkit {

// Ring extension of a commutative base ring R by i with i^2 = -1.
template <typename R>
struct ComplexOf {
  R re{};
  R im{};

  friend bool operator==(const ComplexOf&, const ComplexOf&) = default;
  friend ComplexOf operator+(const ComplexOf& x, const ComplexOf& y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend ComplexOf operator-(const ComplexOf& x, const ComplexOf& y) {
    return {x.re - y.re, x.im - y.im};
  }
  friend ComplexOf operator-(const ComplexOf& x) { return {-x.re, -x.im}; }
  friend ComplexOf operator*(const ComplexOf& x, const ComplexOf& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
};

template <typename R>
ComplexOf<R> conj(const ComplexOf<R>& x) {
  return {x.re, -x.im};
}

template <typename R, typename K>
ComplexOf<R> scale(const K& k, const ComplexOf<R>& x) {
  return {k * x.re, k * x.im};
}

// Ring extension of R by eps with eps^2 = 0 (forward-mode dual numbers);
// products discard the eps^2 term.
template <typename R>
struct DualOf {
  R re{};
  R du{};

  friend bool operator==(const DualOf&, const DualOf&) = default;
  friend DualOf operator+(const DualOf& x, const DualOf& y) {
    return {x.re + y.re, x.du + y.du};
  }
  friend DualOf operator-(const DualOf& x, const DualOf& y) {
    return {x.re - y.re, x.du - y.du};
  }
  friend DualOf operator-(const DualOf& x) { return {-x.re, -x.du}; }
  friend DualOf operator*(const DualOf& x, const DualOf& y) {
    return {x.re * y.re, x.re * y.du + x.du * y.re};
  }
};

template <typename R>
DualOf<R> conj(const DualOf<R>& x) {
  return {x.re, -x.du};
}

template <typename R, typename K>
DualOf<R> scale(const K& k, const DualOf<R>& x) {
  return {k * x.re, k * x.du};
}

using ComplexPellValue = ComplexOf<ExactInt>;
using DualPellValue = DualOf<ExactInt>;

// C_n = G_n + i G_{n+1} over the (p, q) family.
ComplexPellValue complex_pell(const PellParams& params, SeqIndex n);

// D_n = G_n + eps G_{n+1}.
DualPellValue dual_pell(const PellParams& params, SeqIndex n);

// D_n through ring arithmetic in DualOf(QuadInt): (abar alpha^n - bbar beta^n)
// divided exactly by 2*sqrt(2) in both components, where
// abar = (p - 2q + eps q) + alpha (q + eps p). Integrity-checked; contract:
// equals dual_pell(params, n).
DualPellValue dual_pell_binet(const PellParams& params, SeqIndex n);

// sqrt(a + eps b) = (sqrt(a), b / (2 sqrt(a))); requires a > 0 (the closed
// form is undefined otherwise). Squaring the result reproduces the input to
// float tolerance.
DualOf<double> dual_sqrt(const DualOf<double>& x);

// D_{n+1}/D_n in dual-float arithmetic:
// re = G_{n+1}/G_n, du = (G_{n+2} G_n - G_{n+1}^2) / G_n^2.
// Requires G_n != 0. Both components are exact integer ratios evaluated in
// double precision; du -> 0 as n grows.
DualOf<double> dual_ratio_term(const PellParams& params, SeqIndex n);

}  // namespace pellkit
