#include "pellkit/gen_pell.hpp"

#include <cmath>
#include <stdexcept>

#include "pellkit/pell.hpp"
#include "pellkit/quad_int.hpp"

namespace pellkit {

ExactInt gen_pell(const PellParams& params, SeqIndex n) {
  return params.p * pell(n) + params.q * pell(n - 1);
}

ExactInt e_p(const PellParams& params) {
  return params.p * params.p - 2 * params.p * params.q - params.q * params.q;
}

ExactInt gen_pell_addition(const PellParams& params, SeqIndex n, SeqIndex r) {
  return gen_pell(params, n) * pell(r + 1) + gen_pell(params, n - 1) * pell(r);
}

ExactInt odd_partial_sum(const PellParams& params, SeqIndex n) {
  if (n < 0) throw std::invalid_argument("odd_partial_sum: n must be >= 0");
  ExactInt sum = 0;
  for (SeqIndex i = 0; i < n; ++i) sum += gen_pell(params, 2 * i + 1);
  return 2 * sum;
}

ExactInt even_partial_sum(const PellParams& params, SeqIndex n) {
  if (n < 0) throw std::invalid_argument("even_partial_sum: n must be >= 0");
  ExactInt sum = 0;
  for (SeqIndex i = 1; i <= n; ++i) sum += gen_pell(params, 2 * i);
  return 2 * sum;
}

ExactInt gen_pell_binet(const PellParams& params, SeqIndex n) {
  // abar = p + q(alpha - 2) = (p - q) + q*sqrt(2); bbar is its conjugate.
  QuadInt abar{params.p - params.q, params.q};
  QuadInt bbar = quad_conj(abar);
  QuadInt diff = abar * alpha_pow(n) - bbar * beta_pow(n);
  // The difference of a conjugate pair is 2*c*sqrt(2); dividing by
  // alpha - beta = 2*sqrt(2) leaves the integer c.
  if (diff.a != 0) {
    throw IntegrityError("gen_pell_binet: numerator has nonzero rational part");
  }
  if (diff.b % 2 != 0) {
    throw IntegrityError("gen_pell_binet: numerator not divisible by 2*sqrt(2)");
  }
  return diff.b / 2;
}

bool silver_ratio_identity(const PellParams& params) {
  QuadInt alpha = silver_alpha();
  QuadInt lhs = QuadInt{params.p, 0} * alpha + QuadInt{params.q, 0};
  QuadInt denom = QuadInt{params.q, 0} * alpha + QuadInt{params.p - 2 * params.q, 0};
  return lhs == alpha * denom;
}

double ratio_convergence(const PellParams& params, SeqIndex n) {
  ExactInt gn = gen_pell(params, n);
  if (gn == 0) {
    throw std::invalid_argument("ratio_convergence: G_n is zero");
  }
  double ratio = gen_pell(params, n + 1).convert_to<double>() / gn.convert_to<double>();
  return std::fabs(ratio - (1.0 + std::sqrt(2.0)));
}

}  // namespace pellkit
