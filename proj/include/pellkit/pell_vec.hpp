#pragma once

#include "pellkit/exact_int.hpp"
#include "pellkit/gen_pell.hpp"
#include "pellkit/hypercomplex.hpp"

namespace pellkit {

// 3-vector over a scalar ring S. Constructed vectors always hold three
// consecutive terms (s_n, s_{n+1}, s_{n+2}) of one sequence; the make_vec_*
// builders enforce the recurrence tie between the components.
template <typename S>
struct Vec3Of {
  S x, y, z;
  friend bool operator==(const Vec3Of&, const Vec3Of&) = default;
};

// Componentwise-product dot with no conjugation, valid in any commutative
// ring. This is the form every mixed product uses.
template <typename S>
S plain_dot(const Vec3Of<S>& u, const Vec3Of<S>& v) {
  return u.x * v.x + u.y * v.y + u.z * v.z;
}

// dot() dispatches on the scalar ring: plain products in general, Hermitian
// (second argument conjugated) when the scalars are complex.
template <typename S>
S dot(const Vec3Of<S>& u, const Vec3Of<S>& v) {
  return plain_dot(u, v);
}

template <typename R>
ComplexOf<R> dot(const Vec3Of<ComplexOf<R>>& u, const Vec3Of<ComplexOf<R>>& v) {
  return u.x * conj(v.x) + u.y * conj(v.y) + u.z * conj(v.z);
}

// Standard determinant expansion; plain products in every ring.
template <typename S>
Vec3Of<S> cross(const Vec3Of<S>& u, const Vec3Of<S>& v) {
  return {u.y * v.z - u.z * v.y,
          u.z * v.x - u.x * v.z,
          u.x * v.y - u.y * v.x};
}

// <u x v, w> with the plain dot (determinant of the three rows), matching the
// direct expansion for every scalar ring.
template <typename S>
S mixed(const Vec3Of<S>& u, const Vec3Of<S>& v, const Vec3Of<S>& w) {
  return plain_dot(cross(u, v), w);
}

// --- Sequence-vector builders (three consecutive terms) ---------------------

Vec3Of<ExactInt> make_vec_gen(const PellParams& params, SeqIndex n);
Vec3Of<ComplexPellValue> make_vec_complex(const PellParams& params, SeqIndex n);
Vec3Of<DualPellValue> make_vec_dual(const PellParams& params, SeqIndex n);

// --- Closed-form predictions, kept separate from the direct computations so
// --- they remain testable claims rather than the implementation. ------------

// p^2 (P_{n+m+3} + P_n P_m) + pq (P_{n+m+2} + 2 P_{n+m} + 2 P_{n+1} P_{m+1})
// + q^2 (P_{n+m+1} + P_{n-1} P_{m-1}).
ExactInt closed_form_dot_gen(const PellParams& params, SeqIndex n, SeqIndex m);

// 7 [p^2 P_{n+m+3} + 2pq P_{n+m+2} + q^2 P_{n+m+1}] + (-1)^n i P_{m-n} e_p.
ComplexPellValue closed_form_dot_complex(const PellParams& params, SeqIndex n,
                                         SeqIndex m);

// Three (p, q)-quadratic brackets with real and eps parts; see the catalog
// entry for the full expression.
DualPellValue closed_form_dot_dual(const PellParams& params, SeqIndex n,
                                   SeqIndex m);

// Every cross product of two family vectors is an exact scalar multiple of
// (1, 2, -1); these return that multiple expanded per the printed formulas.
// The sign convention differs by kind: (-1)^{m+1} P_{n-m} for gen and dual,
// (-1)^n P_{m-n} for complex (the two agree identically; the harness records
// this equivalence).
Vec3Of<ExactInt> closed_form_cross_gen(const PellParams& params, SeqIndex n,
                                       SeqIndex m);
Vec3Of<ComplexPellValue> closed_form_cross_complex(const PellParams& params,
                                                   SeqIndex n, SeqIndex m);
Vec3Of<DualPellValue> closed_form_cross_dual(const PellParams& params,
                                             SeqIndex n, SeqIndex m);

// --- Norms -------------------------------------------------------------------

// Exact squared norm <v, v> of the gen vector (no square root).
ExactInt norm_gen(const PellParams& params, SeqIndex n);

// Float square root of the exact Hermitian self-dot (whose imaginary part is
// identically zero; integrity-checked).
double norm_complex(const PellParams& params, SeqIndex n);

// dual_sqrt of the exact self-dot converted to dual-float. Requires the real
// part of the self-dot to be positive.
DualOf<double> norm_dual(const PellParams& params, SeqIndex n);

// The printed closed forms for the squared norms (radicands), one per kind.
// Contract for gen and complex: equals the exact self-dot. The dual form's
// eps component disagrees with the exact self-dot whenever pq != 0; the
// harness records that as a finding.
ExactInt norm_closed_form_gen(const PellParams& params, SeqIndex n);
ExactInt norm_closed_form_complex(const PellParams& params, SeqIndex n);
DualPellValue norm_closed_form_dual(const PellParams& params, SeqIndex n);

}  // namespace pellkit
