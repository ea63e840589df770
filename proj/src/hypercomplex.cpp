#include "pellkit/hypercomplex.hpp"

#include <cmath>
#include <stdexcept>

#include "pellkit/quad_int.hpp"

namespace pellkit {

ComplexPellValue complex_pell(const PellParams& params, SeqIndex n) {
  return {gen_pell(params, n), gen_pell(params, n + 1)};
}

DualPellValue dual_pell(const PellParams& params, SeqIndex n) {
  return {gen_pell(params, n), gen_pell(params, n + 1)};
}

DualPellValue dual_pell_binet(const PellParams& params, SeqIndex n) {
  const ExactInt& p = params.p;
  const ExactInt& q = params.q;
  QuadInt alpha = silver_alpha();
  QuadInt beta = silver_beta();
  // abar = (p - 2q + eps q) + alpha (q + eps p), so in DualOf(QuadInt):
  //   re = (p - 2q) + q*alpha, du = q + p*alpha; bbar swaps alpha for beta.
  DualOf<QuadInt> abar{QuadInt{p - 2 * q, 0} + QuadInt{q, 0} * alpha,
                       QuadInt{q, 0} + QuadInt{p, 0} * alpha};
  DualOf<QuadInt> bbar{QuadInt{p - 2 * q, 0} + QuadInt{q, 0} * beta,
                       QuadInt{q, 0} + QuadInt{p, 0} * beta};
  DualOf<QuadInt> an{alpha_pow(n), QuadInt{0, 0}};
  DualOf<QuadInt> bn{beta_pow(n), QuadInt{0, 0}};
  DualOf<QuadInt> diff = abar * an - bbar * bn;
  // Both components are differences of conjugate pairs, i.e. 2*c*sqrt(2);
  // division by alpha - beta = 2*sqrt(2) must leave plain integers.
  auto exact_quotient = [](const QuadInt& x, const char* where) -> ExactInt {
    if (x.a != 0) {
      throw IntegrityError(std::string("dual_pell_binet: ") + where +
                           " component has nonzero rational part");
    }
    if (x.b % 2 != 0) {
      throw IntegrityError(std::string("dual_pell_binet: ") + where +
                           " component not divisible by 2*sqrt(2)");
    }
    return x.b / 2;
  };
  return {exact_quotient(diff.re, "real"), exact_quotient(diff.du, "eps")};
}

DualOf<double> dual_sqrt(const DualOf<double>& x) {
  if (!(x.re > 0.0)) {
    throw std::invalid_argument("dual_sqrt: real part must be positive");
  }
  double root = std::sqrt(x.re);
  return {root, x.du / (2.0 * root)};
}

DualOf<double> dual_ratio_term(const PellParams& params, SeqIndex n) {
  ExactInt gn = gen_pell(params, n);
  if (gn == 0) {
    throw std::invalid_argument("dual_ratio_term: G_n is zero");
  }
  ExactInt gn1 = gen_pell(params, n + 1);
  ExactInt gn2 = gen_pell(params, n + 2);
  double dn = gn.convert_to<double>();
  return {gn1.convert_to<double>() / dn,
          (gn2 * gn - gn1 * gn1).convert_to<double>() / (dn * dn)};
}

}  // namespace pellkit
