#include "pellkit/pell_vec.hpp"

#include <cmath>
#include <stdexcept>

#include "pellkit/pell.hpp"

namespace pellkit {

namespace {

// Consecutive-term vectors obey the recurrence componentwise; a violation
// here would mean the builder and the sequence disagree.
template <typename S>
Vec3Of<S> checked_vec(Vec3Of<S> v) {
  S expected = v.y + v.y + v.x;
  if (!(v.z == expected)) {
    throw IntegrityError("make_vec: components are not consecutive terms");
  }
  return v;
}

}  // namespace

Vec3Of<ExactInt> make_vec_gen(const PellParams& params, SeqIndex n) {
  return checked_vec<ExactInt>({gen_pell(params, n), gen_pell(params, n + 1),
                                gen_pell(params, n + 2)});
}

Vec3Of<ComplexPellValue> make_vec_complex(const PellParams& params, SeqIndex n) {
  return checked_vec<ComplexPellValue>({complex_pell(params, n),
                                        complex_pell(params, n + 1),
                                        complex_pell(params, n + 2)});
}

Vec3Of<DualPellValue> make_vec_dual(const PellParams& params, SeqIndex n) {
  return checked_vec<DualPellValue>({dual_pell(params, n),
                                     dual_pell(params, n + 1),
                                     dual_pell(params, n + 2)});
}

ExactInt closed_form_dot_gen(const PellParams& params, SeqIndex n, SeqIndex m) {
  const ExactInt& p = params.p;
  const ExactInt& q = params.q;
  return p * p * (pell(n + m + 3) + pell(n) * pell(m)) +
         p * q * (pell(n + m + 2) + 2 * pell(n + m) + 2 * pell(n + 1) * pell(m + 1)) +
         q * q * (pell(n + m + 1) + pell(n - 1) * pell(m - 1));
}

ComplexPellValue closed_form_dot_complex(const PellParams& params, SeqIndex n,
                                         SeqIndex m) {
  const ExactInt& p = params.p;
  const ExactInt& q = params.q;
  ExactInt re = 7 * (p * p * pell(n + m + 3) + 2 * p * q * pell(n + m + 2) +
                     q * q * pell(n + m + 1));
  ExactInt im = parity_sign(n) * pell(m - n) * e_p(params);
  return {std::move(re), std::move(im)};
}

DualPellValue closed_form_dot_dual(const PellParams& params, SeqIndex n,
                                   SeqIndex m) {
  const ExactInt& p = params.p;
  const ExactInt& q = params.q;
  ExactInt re = p * p * (pell(n + m + 3) + pell(n) * pell(m)) +
                p * q * (pell(n + m + 2) + 2 * pell(n + 1) * pell(m + 1) +
                         2 * pell(n + m)) +
                q * q * (pell(n + m + 1) + pell(n - 1) * pell(m - 1));
  ExactInt du = p * p * (2 * pell(n + m + 4) + pell(n + m) + 2 * pell(n) * pell(m)) +
                p * q * (2 * pell(n + m + 3) + 4 * pell(n + m + 1) +
                         2 * pell(n + m + 2) + 4 * pell(n + 1) * pell(m + 1)) +
                q * q * (2 * pell(n + m + 2) + pell(n + m - 2) +
                         2 * pell(n - 1) * pell(m - 1));
  return {std::move(re), std::move(du)};
}

Vec3Of<ExactInt> closed_form_cross_gen(const PellParams& params, SeqIndex n,
                                       SeqIndex m) {
  ExactInt k = parity_sign(m + 1) * pell(n - m) * e_p(params);
  return {k, 2 * k, -k};
}

Vec3Of<ComplexPellValue> closed_form_cross_complex(const PellParams& params,
                                                   SeqIndex n, SeqIndex m) {
  ExactInt f = parity_sign(n) * pell(m - n) * e_p(params);
  ComplexPellValue k = scale(f, ComplexPellValue{2, 2});
  return {k, scale(ExactInt(2), k), -k};
}

Vec3Of<DualPellValue> closed_form_cross_dual(const PellParams& params,
                                             SeqIndex n, SeqIndex m) {
  ExactInt f = parity_sign(m + 1) * pell(n - m) * e_p(params);
  DualPellValue k = scale(f, DualPellValue{1, 2});
  return {k, scale(ExactInt(2), k), -k};
}

ExactInt norm_gen(const PellParams& params, SeqIndex n) {
  Vec3Of<ExactInt> v = make_vec_gen(params, n);
  return dot(v, v);
}

double norm_complex(const PellParams& params, SeqIndex n) {
  Vec3Of<ComplexPellValue> v = make_vec_complex(params, n);
  ComplexPellValue self = dot(v, v);
  if (self.im != 0) {
    throw IntegrityError("norm_complex: Hermitian self-dot has nonzero imaginary part");
  }
  return std::sqrt(self.re.convert_to<double>());
}

DualOf<double> norm_dual(const PellParams& params, SeqIndex n) {
  Vec3Of<DualPellValue> v = make_vec_dual(params, n);
  DualPellValue self = dot(v, v);
  if (self.re <= 0) {
    throw std::invalid_argument("norm_dual: self-dot real part must be positive");
  }
  return dual_sqrt({self.re.convert_to<double>(), self.du.convert_to<double>()});
}

ExactInt norm_closed_form_gen(const PellParams& params, SeqIndex n) {
  const ExactInt& p = params.p;
  const ExactInt& q = params.q;
  return p * p * (pell(2 * n + 3) + pell(n) * pell(n)) +
         2 * p * q * (pell(2 * n + 2) + pell(n) * pell(n - 1)) +
         q * q * (pell(2 * n + 1) + pell(n - 1) * pell(n - 1));
}

ExactInt norm_closed_form_complex(const PellParams& params, SeqIndex n) {
  const ExactInt& p = params.p;
  const ExactInt& q = params.q;
  return 7 * (p * p * pell(2 * n + 3) + 2 * p * q * pell(2 * n + 2) +
              q * q * pell(2 * n + 1));
}

DualPellValue norm_closed_form_dual(const PellParams& params, SeqIndex n) {
  const ExactInt& p = params.p;
  const ExactInt& q = params.q;
  ExactInt re = p * p * (pell(2 * n + 3) + pell(n) * pell(n)) +
                p * q * (pell(2 * n + 2) + 2 * pell(n + 1) * pell(n + 1) +
                         2 * pell(2 * n)) +
                q * q * (pell(2 * n + 1) + pell(n - 1) * pell(n - 1));
  ExactInt du = 2 * (p * p * (pell(2 * n + 4) + pell(n) * pell(n + 1)) +
                     p * q * (pell(2 * n + 3) + 2 * pell(n + 1) * pell(n + 2)) +
                     q * q * (pell(2 * n + 2) + pell(n - 1) * pell(n)));
  return {std::move(re), std::move(du)};
}

}  // namespace pellkit
