#include "pellkit/quad_int.hpp"

#include <cmath>
#include <stdexcept>

namespace pellkit {

QuadInt quad_mul(const QuadInt& x, const QuadInt& y) { return x * y; }

QuadInt quad_conj(const QuadInt& x) { return {x.a, -x.b}; }

QuadInt silver_alpha() { return {1, 1}; }

QuadInt silver_beta() { return {1, -1}; }

namespace {

// x^e for e >= 0 by binary exponentiation.
QuadInt quad_pow(QuadInt x, unsigned long long e) {
  QuadInt result{1, 0};
  while (e > 0) {
    if (e & 1ULL) result = result * x;
    e >>= 1ULL;
    if (e > 0) x = x * x;
  }
  return result;
}

}  // namespace

QuadInt alpha_pow(SeqIndex n) {
  // alpha * (-beta) = -alpha*beta = 1, so alpha^{-1} = -beta.
  if (n >= 0) return quad_pow(silver_alpha(), static_cast<unsigned long long>(n));
  return quad_pow(-silver_beta(), static_cast<unsigned long long>(-n));
}

QuadInt beta_pow(SeqIndex n) {
  if (n >= 0) return quad_pow(silver_beta(), static_cast<unsigned long long>(n));
  return quad_pow(-silver_alpha(), static_cast<unsigned long long>(-n));
}

ExactInt binet_pell(SeqIndex n) {
  QuadInt diff = alpha_pow(n) - beta_pow(n);
  if (diff.a != 0) {
    throw IntegrityError("binet_pell: alpha^n - beta^n has nonzero rational part");
  }
  if (diff.b % 2 != 0) {
    throw IntegrityError("binet_pell: sqrt(2)-coefficient of alpha^n - beta^n is odd");
  }
  return diff.b / 2;
}

ExactInt binet_pell_lucas(SeqIndex n) {
  QuadInt sum = alpha_pow(n) + beta_pow(n);
  if (sum.b != 0) {
    throw IntegrityError(
        "binet_pell_lucas: alpha^n + beta^n has nonzero sqrt(2)-coefficient");
  }
  return sum.a;
}

double to_real(const QuadInt& x) {
  double value = x.a.convert_to<double>() + x.b.convert_to<double>() * std::sqrt(2.0);
  if (!std::isfinite(value)) {
    throw std::overflow_error("to_real: value exceeds double range");
  }
  return value;
}

}  // namespace pellkit
