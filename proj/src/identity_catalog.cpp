#include <algorithm>

#include "pellkit/identity_harness.hpp"

// The complete identity inventory. Every evaluator computes both sides
// exactly in the entry's ring; division-shaped entries are stored
// multiplicatively. Entries are listed (and asserted) in id order.

namespace pellkit {

namespace {

using CX = ComplexPellValue;
using DU = DualPellValue;

// --- complex family ----------------------------------------------------------

EvalPair cp01(const EvalCtx& c, const Vars& v) {
  auto n = v.n;
  CX lhs = c.C(n) * c.C(n) + c.C(n + 1) * c.C(n + 1);
  ExactInt f = c.e() * c.P(2 * n + 1);
  CX rhs = CX{2 * v.p - 2 * v.q, 2 * v.p + 2 * v.q} * c.C(2 * n + 1) -
           scale(f, CX{2, 2});
  return {lhs, rhs};
}

EvalPair cp02(const EvalCtx& c, const Vars& v) {
  auto n = v.n;
  CX lhs = c.C(n + 1) * c.C(n + 1) - c.C(n - 1) * c.C(n - 1);
  ExactInt f = 2 * c.e() * c.P(2 * n);
  CX rhs = scale(2, CX{2 * v.p - 2 * v.q, 2 * v.p + 2 * v.q}) * c.C(2 * n) -
           scale(f, CX{2, 2});
  return {lhs, rhs};
}

EvalPair cp03(const EvalCtx& c, const Vars& v) {
  auto n = v.n;
  ExactInt f = c.e() * c.P(n) * c.P(n);
  CX lhs = c.C(n + 1) * c.C(n + 1) + scale(f, CX{2, 2});
  CX rhs = CX{1, 2} * c.C(2 * n + 1);
  return {lhs, rhs};
}

EvalPair cp04(const EvalCtx& c, const Vars& v) {
  auto n = v.n;
  CX lhs = c.C(n - 1) * c.C(n + 1) - c.C(n) * c.C(n);
  ExactInt f = parity_sign(n) * c.e();
  return {lhs, scale(f, CX{2, 2})};
}

EvalPair cp05c(const EvalCtx& c, const Vars& v) {
  auto n = v.n, m = v.m;
  CX lhs = c.C(m) * c.C(n + 1) + c.C(m - 1) * c.C(n);
  ExactInt f = (2 * v.p + 2 * v.q) * c.G(m + n) + c.e() * c.P(m + n - 1);
  return {lhs, scale(f, CX{-2, 2})};
}

EvalPair cp06(const EvalCtx& c, const Vars& v) {
  auto n = v.n, r = v.r, s = v.s;
  CX lhs = c.C(n) * c.C(n + r + 1) - c.C(n - s) * c.C(n + r + s + 1);
  ExactInt f = parity_sign(n + s) * c.e() * c.P(s) * c.P(r + s + 1);
  return {lhs, scale(f, CX{2, 2})};
}

EvalPair cp07(const EvalCtx& c, const Vars& v) {
  auto n = v.n, m = v.m;
  CX lhs = c.C(m) * c.C(n + 1) - c.C(m + 1) * c.C(n);
  ExactInt f = parity_sign(n) * c.P(m - n) * c.e();
  return {lhs, scale(f, CX{2, 2})};
}

EvalPair cp08(const EvalCtx& c, const Vars& v) {
  auto n = v.n, r = v.r;
  CX lhs = c.C(n + 1 - r) * c.C(n + 1 + r) - c.C(n + 1) * c.C(n + 1);
  ExactInt f = parity_sign(n - r) * c.e() * c.P(r) * c.P(r);
  return {lhs, scale(f, CX{2, 2})};
}

EvalPair cp09(const EvalCtx& c, const Vars& v) {
  auto n = v.n, r = v.r;
  CX lhs = c.C(n + r) + scale(parity_sign(r), c.C(n - r));
  return {lhs, scale(c.Q(r), c.C(n))};
}

// --- dual family --------------------------------------------------------------

EvalPair dp01(const EvalCtx& c, const Vars& v) {
  auto n = v.n;
  DU lhs = c.D(n) * c.D(n) + c.D(n - 1) * c.D(n - 1);
  ExactInt f = c.e() * c.P(2 * n - 1);
  DU rhs = DU{2 * v.p - 2 * v.q, 2 * v.p + 2 * v.q} * c.D(2 * n - 1) -
           scale(f, DU{1, 2});
  return {lhs, rhs};
}

EvalPair dp02(const EvalCtx& c, const Vars& v) {
  auto n = v.n;
  DU lhs = c.D(n + 1) * c.D(n + 1) + c.D(n) * c.D(n);
  ExactInt f = c.e() * c.P(2 * n + 1);
  DU rhs = DU{2 * v.p - 2 * v.q, 2 * v.p + 2 * v.q} * c.D(2 * n + 1) -
           scale(f, DU{1, 2});
  return {lhs, rhs};
}

EvalPair dp03(const EvalCtx& c, const Vars& v) {
  auto n = v.n;
  DU lhs = c.D(n + 1) * c.D(n + 1) - c.D(n - 1) * c.D(n - 1);
  ExactInt f = 2 * c.e() * c.P(2 * n);
  DU rhs = DU{4 * v.p - 4 * v.q, 4 * v.p + 4 * v.q} * c.D(2 * n) -
           scale(f, DU{1, 2});
  return {lhs, rhs};
}

EvalPair dp04(const EvalCtx& c, const Vars& v) {
  auto n = v.n;
  DU lhs = c.D(n - 1) * c.D(n + 1) - c.D(n) * c.D(n);
  ExactInt f = parity_sign(n) * c.e();
  return {lhs, scale(f, DU{1, 2})};
}

EvalPair dp05(const EvalCtx& c, const Vars& v) {
  auto n = v.n, m = v.m;
  DU lhs = c.D(m) * c.D(n + 1) - c.D(m + 1) * c.D(n);
  ExactInt f = parity_sign(n) * c.e() * c.P(m - n);
  return {lhs, scale(f, DU{1, 2})};
}

EvalPair dp06(const EvalCtx& c, const Vars& v) {
  auto n = v.n;
  ExactInt f = c.e() * c.P(n) * c.P(n);
  DU lhs = c.D(n + 1) * c.D(n + 1) + scale(f, DU{1, 2});
  DU rhs = DU{1, 2} * c.D(2 * n + 1);
  return {lhs, rhs};
}

EvalPair dp07(const EvalCtx& c, const Vars& v) {
  auto n = v.n, r = v.r, s = v.s;
  DU lhs = c.D(n) * c.D(n + r + 1) - c.D(n - s) * c.D(n + r + s + 1);
  ExactInt f = parity_sign(n + s) * c.e() * c.P(s) * c.P(r + s + 1);
  return {lhs, scale(f, DU{1, 2})};
}

EvalPair dp08(const EvalCtx& c, const Vars& v) {
  auto n = v.n, r = v.r;
  DU lhs = c.D(n + 1 - r) * c.D(n + 1 + r) - c.D(n + 1) * c.D(n + 1);
  ExactInt f = parity_sign(n - r) * c.e() * c.P(r) * c.P(r);
  return {lhs, scale(f, DU{1, 2})};
}

EvalPair dp09(const EvalCtx& c, const Vars& v) {
  auto n = v.n, r = v.r;
  DU lhs = c.D(n + r) + scale(parity_sign(r), c.D(n - r));
  return {lhs, scale(c.Q(r), c.D(n))};
}

// --- generalized family --------------------------------------------------------

EvalPair gp01(const EvalCtx& c, const Vars& v) {
  auto n = v.n, r = v.r;
  ExactInt rhs = c.G(n) * c.P(r + 1) + c.G(n - 1) * c.P(r);
  return {c.G(n + r), rhs};
}

EvalPair gp02(const EvalCtx& c, const Vars& v) {
  auto n = v.n;
  ExactInt lhs = c.G(n + 1) - 5 * c.G(n - 1) - 2 * c.G(n - 2);
  return {lhs, ExactInt(0)};
}

EvalPair gp03(const EvalCtx& c, const Vars& v) {
  auto n = v.n;
  ExactInt lhs = 2 * c.G(n) - 4 * c.G(n - 1) - c.G(n - 2);
  return {lhs, ExactInt(0)};
}

EvalPair gp04(const EvalCtx& c, const Vars& v) {
  auto n = v.n;
  ExactInt sum = 0;
  for (long long i = 0; i < n; ++i) sum += c.G(2 * i + 1);
  ExactInt rhs = c.G(2 * n) - v.q;
  return {ExactInt(2 * sum), rhs};
}

EvalPair gp05(const EvalCtx& c, const Vars& v) {
  auto n = v.n;
  ExactInt sum = 0;
  for (long long i = 1; i <= n; ++i) sum += c.G(2 * i);
  ExactInt rhs = c.G(2 * n + 1) - v.p;
  return {ExactInt(2 * sum), rhs};
}

EvalPair gp06(const EvalCtx& c, const Vars& v) {
  auto n = v.n;
  ExactInt lhs = c.G(n) * c.G(n) + c.G(n + 1) * c.G(n + 1);
  ExactInt rhs = (2 * v.p - 2 * v.q) * c.G(2 * n + 1) - c.e() * c.P(2 * n + 1);
  return {lhs, rhs};
}

EvalPair gp07(const EvalCtx& c, const Vars& v) {
  auto n = v.n;
  ExactInt lhs = c.G(n + 1) * c.G(n + 1) - c.G(n - 1) * c.G(n - 1);
  ExactInt rhs = 2 * ((2 * v.p - 2 * v.q) * c.G(2 * n) - c.e() * c.P(2 * n));
  return {lhs, rhs};
}

EvalPair gp08(const EvalCtx& c, const Vars& v) {
  auto n = v.n;
  ExactInt lhs = c.G(n - 1) * c.G(n + 1) - c.G(n) * c.G(n);
  return {lhs, ExactInt(parity_sign(n) * c.e())};
}

EvalPair gp09(const EvalCtx& c, const Vars& v) {
  auto n = v.n;
  ExactInt lhs = c.G(n + 1) * c.G(n + 1) + c.e() * c.P(n) * c.P(n);
  return {lhs, ExactInt(v.p * c.G(2 * n + 1))};
}

EvalPair gp10(const EvalCtx& c, const Vars& v) {
  auto n = v.n, m = v.m;
  ExactInt lhs = c.G(m) * c.G(n + 1) - c.G(m + 1) * c.G(n);
  return {lhs, ExactInt(parity_sign(n) * c.e() * c.P(m - n))};
}

EvalPair gp11(const EvalCtx& c, const Vars& v) {
  auto n = v.n, m = v.m;
  ExactInt lhs = c.G(m) * c.G(n + 1) + c.G(m - 1) * c.G(n);
  ExactInt rhs = (2 * v.p - 2 * v.q) * c.G(m + n) - c.e() * c.P(m + n);
  return {lhs, rhs};
}

EvalPair gp12(const EvalCtx& c, const Vars& v) {
  auto n = v.n, r = v.r;
  ExactInt lhs = c.G(n + 1 - r) * c.G(n + 1 + r) - c.G(n + 1) * c.G(n + 1);
  return {lhs, ExactInt(parity_sign(n - r) * c.e() * c.P(r) * c.P(r))};
}

EvalPair gp13(const EvalCtx& c, const Vars& v) {
  auto n = v.n, r = v.r, s = v.s;
  ExactInt lhs = c.G(n) * c.G(n + r + 1) - c.G(n - s) * c.G(n + r + s + 1);
  return {lhs, ExactInt(parity_sign(n + s) * c.e() * c.P(s) * c.P(r + s + 1))};
}

EvalPair gp14(const EvalCtx& c, const Vars& v) {
  auto n = v.n, r = v.r;
  ExactInt lhs = c.G(n + r) + parity_sign(r) * c.G(n - r);
  return {lhs, ExactInt(c.Q(r) * c.G(n))};
}

// --- auxiliary Pell relations ---------------------------------------------------

EvalPair gr01(const EvalCtx& c, const Vars& v) {
  auto n = v.n, r = v.r;
  ExactInt lhs = c.P(n + r) + parity_sign(r) * c.P(n - r);
  return {lhs, ExactInt(c.Q(r) * c.P(n))};
}

EvalPair gr02(const EvalCtx& c, const Vars& v) {
  auto n = v.n, r = v.r;
  ExactInt lhs = c.P(n + r) * c.P(n - r) - c.P(n) * c.P(n);
  return {lhs, ExactInt(parity_sign(n - r + 1) * c.P(r) * c.P(r))};
}

EvalPair gr03(const EvalCtx& c, const Vars& v) {
  auto n = v.n, r = v.r, s = v.s;
  ExactInt lhs = c.P(n) * c.P(n + r + 1) - c.P(n - s) * c.P(n + r + s + 1);
  return {lhs, ExactInt(parity_sign(n + s) * c.P(s) * c.P(r + s + 1))};
}

EvalPair gr04(const EvalCtx& c, const Vars& v) {
  auto n = v.n, r = v.r, s = v.s;
  ExactInt lhs = c.P(n - 1) * c.P(n + r) - c.P(n - s - 1) * c.P(n + r + s);
  return {lhs, ExactInt(parity_sign(n + s + 1) * c.P(s) * c.P(r + s + 1))};
}

EvalPair gr05(const EvalCtx& c, const Vars& v) {
  auto n = v.n, r = v.r, s = v.s;
  ExactInt lhs = c.P(n) * c.P(n + r) + c.P(n - 1) * c.P(n + r + 1) -
                 c.P(n - s) * c.P(n + r + s) - c.P(n - s - 1) * c.P(n + r + s + 1);
  return {lhs, ExactInt(2 * parity_sign(n + s + 1) * c.P(s) * c.P(r + s + 1))};
}

// --- plain Pell block ------------------------------------------------------------

EvalPair pl01(const EvalCtx& c, const Vars& v) {
  auto n = v.n, m = v.m;
  ExactInt lhs = c.P(m) * c.P(n + 1) + c.P(m - 1) * c.P(n);
  return {lhs, c.P(m + n)};
}

EvalPair pl02(const EvalCtx& c, const Vars& v) {
  auto n = v.n, m = v.m;
  ExactInt lhs = c.P(m) * c.P(n + 1) - c.P(m + 1) * c.P(n);
  return {lhs, ExactInt(parity_sign(n) * c.P(m - n))};
}

EvalPair pl03(const EvalCtx& c, const Vars& v) {
  auto n = v.n;
  ExactInt lhs = c.P(n - 1) * c.P(n + 1) - c.P(n) * c.P(n);
  return {lhs, ExactInt(parity_sign(n))};
}

EvalPair pl04(const EvalCtx& c, const Vars& v) {
  auto n = v.n;
  ExactInt lhs = c.P(n) * c.P(n) + c.P(n + 1) * c.P(n + 1);
  return {lhs, c.P(2 * n + 1)};
}

EvalPair pl05(const EvalCtx& c, const Vars& v) {
  auto n = v.n;
  ExactInt lhs = c.P(n + 1) * c.P(n + 1) - c.P(n - 1) * c.P(n - 1);
  return {lhs, ExactInt(2 * c.P(2 * n))};
}

EvalPair pl06(const EvalCtx& c, const Vars& v) {
  auto n = v.n;
  ExactInt lhs = 2 * c.P(n + 1) * c.P(n) - 2 * c.P(n) * c.P(n);
  return {lhs, c.P(2 * n)};
}

EvalPair pl07(const EvalCtx& c, const Vars& v) {
  auto n = v.n;
  ExactInt lhs = c.P(n) * c.P(n) + c.P(n + 3) * c.P(n + 3);
  return {lhs, ExactInt(5 * c.P(2 * n + 3))};
}

EvalPair pl08(const EvalCtx& c, const Vars& v) {
  auto n = v.n;
  ExactInt lhs = c.P(2 * n + 1) + c.P(2 * n);
  ExactInt rhs =
      2 * c.P(n + 1) * c.P(n + 1) - 2 * c.P(n) * c.P(n) - parity_sign(n);
  return {lhs, rhs};
}

EvalPair pl09(const EvalCtx& c, const Vars& v) {
  auto n = v.n;
  ExactInt lhs = 4 * (c.P(n) * c.P(n) + c.P(n - 1) * c.P(n + 1));
  return {lhs, c.Q(n)};
}

EvalPair pl09c(const EvalCtx& c, const Vars& v) {
  auto n = v.n;
  ExactInt lhs = 4 * (c.P(n) * c.P(n) + c.P(n - 1) * c.P(n + 1));
  return {lhs, ExactInt(c.Q(n) * c.Q(n))};
}

EvalPair pl10(const EvalCtx& c, const Vars& v) {
  auto n = v.n;
  return {ExactInt(c.P(n + 1) + c.P(n - 1)), c.Q(n)};
}

EvalPair pl11(const EvalCtx& c, const Vars& v) {
  auto n = v.n;
  return {ExactInt(c.P(n) * c.Q(n)), c.P(2 * n)};
}

// --- summation formulas ------------------------------------------------------------

EvalPair ps01(const EvalCtx& c, const Vars& v) {
  auto n = v.n;
  ExactInt sum = 0;
  for (long long k = 1; k <= n; ++k) sum += c.P(k) * c.P(k);
  return {ExactInt(2 * sum), ExactInt(c.P(n) * c.P(n + 1))};
}

EvalPair ps02(const EvalCtx& c, const Vars& v) {
  auto n = v.n;
  ExactInt sum = 0;
  for (long long k = 0; k <= n; ++k) {
    sum += c.binom(n, k) * (ExactInt(1) << k) * c.P(2 * k);
  }
  return {sum, c.P(2 * n)};
}

EvalPair ps02c(const EvalCtx& c, const Vars& v) {
  auto n = v.n;
  ExactInt sum = 0;
  for (long long k = 0; k <= n; ++k) {
    sum += c.binom(n, k) * (ExactInt(1) << k) * c.P(k);
  }
  return {sum, c.P(2 * n)};
}

EvalPair ps03(const EvalCtx& c, const Vars& v) {
  auto n = v.n;
  ExactInt sum = 0;
  for (long long k = 0; k <= n; ++k) sum += c.binom(n, k) * c.P(k) * c.P(n - k);
  return {sum, ExactInt((ExactInt(1) << n) * c.P(n))};
}

EvalPair ps03c(const EvalCtx& c, const Vars& v) {
  auto n = v.n;
  ExactInt sum = 0;
  for (long long k = 0; k <= n; ++k) sum += c.binom(n, k) * c.P(k) * c.Q(n - k);
  return {sum, ExactInt((ExactInt(1) << n) * c.P(n))};
}

// --- vector product identities -----------------------------------------------------

EvalPair vt_c1(const EvalCtx& c, const Vars& v) {
  return {dot(c.cvec(v.n), c.cvec(v.m)),
          closed_form_dot_complex(c.params(), v.n, v.m)};
}

EvalPair vt_c2(const EvalCtx& c, const Vars& v) {
  return {dot(c.cvec(v.n), c.cvec(v.n)),
          CX{norm_closed_form_complex(c.params(), v.n), 0}};
}

EvalPair vt_c3(const EvalCtx& c, const Vars& v) {
  return {cross(c.cvec(v.n), c.cvec(v.m)),
          closed_form_cross_complex(c.params(), v.n, v.m)};
}

EvalPair vt_c4(const EvalCtx& c, const Vars& v) {
  return {mixed(c.cvec(v.n), c.cvec(v.m), c.cvec(v.l)), CX{0, 0}};
}

EvalPair vt_d1(const EvalCtx& c, const Vars& v) {
  return {dot(c.dvec(v.n), c.dvec(v.m)),
          closed_form_dot_dual(c.params(), v.n, v.m)};
}

EvalPair vt_d2(const EvalCtx& c, const Vars& v) {
  return {dot(c.dvec(v.n), c.dvec(v.n)), norm_closed_form_dual(c.params(), v.n)};
}

EvalPair vt_d3(const EvalCtx& c, const Vars& v) {
  return {cross(c.dvec(v.n), c.dvec(v.m)),
          closed_form_cross_dual(c.params(), v.n, v.m)};
}

EvalPair vt_d4(const EvalCtx& c, const Vars& v) {
  return {mixed(c.dvec(v.n), c.dvec(v.m), c.dvec(v.l)), DU{0, 0}};
}

EvalPair vt_g1(const EvalCtx& c, const Vars& v) {
  return {dot(c.gvec(v.n), c.gvec(v.m)),
          closed_form_dot_gen(c.params(), v.n, v.m)};
}

EvalPair vt_g2(const EvalCtx& c, const Vars& v) {
  return {dot(c.gvec(v.n), c.gvec(v.n)), norm_closed_form_gen(c.params(), v.n)};
}

EvalPair vt_g3(const EvalCtx& c, const Vars& v) {
  return {cross(c.gvec(v.n), c.gvec(v.m)),
          closed_form_cross_gen(c.params(), v.n, v.m)};
}

EvalPair vt_g4(const EvalCtx& c, const Vars& v) {
  return {mixed(c.gvec(v.n), c.gvec(v.m), c.gvec(v.l)), ExactInt(0)};
}

// --- helper block of cross-index properties ------------------------------------------

EvalPair xp01(const EvalCtx& c, const Vars& v) {
  auto n = v.n;
  ExactInt lhs = c.P(n) * c.P(n) - c.P(n + 1) * c.P(n - 1);
  return {lhs, ExactInt(parity_sign(n + 1))};
}

EvalPair xp02(const EvalCtx& c, const Vars& v) {
  auto n = v.n, m = v.m;
  ExactInt lhs = c.P(n - 1) * c.P(m + 1) - c.P(n + 2) * c.P(m - 1);
  return {lhs, ExactInt(5 * parity_sign(m - 1) * c.P(n - m))};
}

EvalPair xp03(const EvalCtx& c, const Vars& v) {
  auto n = v.n, m = v.m;
  ExactInt lhs = c.P(n - 1) * c.P(m + 1) - c.P(n + 1) * c.P(m - 1);
  return {lhs, ExactInt(2 * parity_sign(m - 1) * c.P(n - m))};
}

EvalPair xp04(const EvalCtx& c, const Vars& v) {
  auto n = v.n, m = v.m;
  ExactInt lhs = c.P(n) * c.P(m + 2) - c.P(n + 2) * c.P(m);
  return {lhs, ExactInt(2 * parity_sign(m) * c.P(n - m))};
}

std::vector<IdentitySpec> build_catalog() {
  const ExpectedStatus pass = ExpectedStatus::pass;
  const ExpectedStatus fail = ExpectedStatus::fail;
  std::vector<IdentitySpec> cat{
      {.id = "CP-01",
       .ref = "C_n^2 + C_{n+1}^2 = [(2p-2q) + i(2p+2q)] C_{2n+1} - (2+2i) e_p "
              "P_{2n+1}",
       .ring = "complex",
       .vars = "pqn",
       .eval = cp01,
       .expected = pass},
      {.id = "CP-02",
       .ref = "C_{n+1}^2 - C_{n-1}^2 = 2[(2p-2q) + i(2p+2q)] C_{2n} - 2(2+2i) "
              "e_p P_{2n}",
       .ring = "complex",
       .vars = "pqn",
       .eval = cp02,
       .expected = pass},
      {.id = "CP-03",
       .ref = "C_{n+1}^2 + (2+2i) e_p P_n^2 = (1+2i) C_{2n+1}",
       .ring = "complex",
       .vars = "pqn",
       .eval = cp03,
       .expected = fail,
       .note = "right side read as (1+2i) C_{2n+1}; the printed bracket is "
               "unbalanced"},
      {.id = "CP-04",
       .ref = "C_{n-1} C_{n+1} - C_n^2 = (-1)^n (2+2i) e_p",
       .ring = "complex",
       .vars = "pqn",
       .eval = cp04,
       .expected = pass},
      {.id = "CP-05",
       .ref = "C_m C_{n+1} + C_{m-1} C_n = (2i-2)[(2p+2q) R_{m+n} + e_p "
              "P_{m+n-1}]",
       .ring = "complex",
       .vars = "pqnm",
       .eval = nullptr,
       .expected = ExpectedStatus::quarantine,
       .note = "contains R_{m+n}, a symbol never defined; excluded from "
               "evaluation"},
      {.id = "CP-05C",
       .ref = "C_m C_{n+1} + C_{m-1} C_n = (2i-2)[(2p+2q) G_{m+n} + e_p "
              "P_{m+n-1}]",
       .ring = "complex",
       .vars = "pqnm",
       .eval = cp05c,
       .expected = pass,
       .conjectured = true,
       .note = "reading of the quarantined entry with R taken to be the "
               "generalized sequence G"},
      {.id = "CP-06",
       .ref = "C_n C_{n+r+1} - C_{n-s} C_{n+r+s+1} = (-1)^{n+s} (2+2i) e_p "
              "P_s P_{r+s+1}",
       .ring = "complex",
       .vars = "pqnrs",
       .eval = cp06,
       .expected = pass},
      {.id = "CP-07",
       .ref = "C_m C_{n+1} - C_{m+1} C_n = (-1)^n (2+2i) e_p P_{m-n}",
       .ring = "complex",
       .vars = "pqnm",
       .eval = cp07,
       .expected = pass},
      {.id = "CP-08",
       .ref = "C_{n+1-r} C_{n+1+r} - C_{n+1}^2 = (-1)^{n-r} (2+2i) e_p P_r^2",
       .ring = "complex",
       .vars = "pqnr",
       .eval = cp08,
       .expected = pass},
      {.id = "CP-09",
       .ref = "(C_{n+r} + (-1)^r C_{n-r}) / C_n = Q_r",
       .ring = "complex",
       .vars = "pqnr",
       .eval = cp09,
       .expected = pass,
       .note = "checked multiplicatively: C_{n+r} + (-1)^r C_{n-r} against "
               "Q_r C_n"},
      {.id = "DP-01",
       .ref = "D_n^2 + D_{n-1}^2 = [(2p-2q) + eps(2p+2q)] D_{2n-1} - e_p "
              "(1+2eps) P_{2n-1}",
       .ring = "dual",
       .vars = "pqn",
       .eval = dp01,
       .expected = pass},
      {.id = "DP-02",
       .ref = "D_{n+1}^2 + D_n^2 = [(2p-2q) + eps(2p+2q)] D_{2n+1} - e_p "
              "(1+2eps) P_{2n+1}",
       .ring = "dual",
       .vars = "pqn",
       .eval = dp02,
       .expected = pass},
      {.id = "DP-03",
       .ref = "D_{n+1}^2 - D_{n-1}^2 = [(4p-4q) + eps(4p+4q)] D_{2n} - 2 e_p "
              "(1+2eps) P_{2n}",
       .ring = "dual",
       .vars = "pqn",
       .eval = dp03,
       .expected = pass},
      {.id = "DP-04",
       .ref = "D_{n-1} D_{n+1} - D_n^2 = (-1)^n e_p (1+2eps)",
       .ring = "dual",
       .vars = "pqn",
       .eval = dp04,
       .expected = pass},
      {.id = "DP-05",
       .ref = "D_m D_{n+1} - D_{m+1} D_n = (-1)^n e_p (1+2eps) P_{m-n}",
       .ring = "dual",
       .vars = "pqnm",
       .eval = dp05,
       .expected = pass},
      {.id = "DP-06",
       .ref = "D_{n+1}^2 + e_p (1+2eps) P_n^2 = (1+2eps) D_{2n+1}",
       .ring = "dual",
       .vars = "pqn",
       .eval = dp06,
       .expected = fail},
      {.id = "DP-07",
       .ref = "D_n D_{n+r+1} - D_{n-s} D_{n+r+s+1} = (-1)^{n+s} e_p (1+2eps) "
              "P_s P_{r+s+1}",
       .ring = "dual",
       .vars = "pqnrs",
       .eval = dp07,
       .expected = pass},
      {.id = "DP-08",
       .ref = "D_{n+1-r} D_{n+1+r} - D_{n+1}^2 = (-1)^{n-r} e_p (1+2eps) "
              "P_r^2",
       .ring = "dual",
       .vars = "pqnr",
       .eval = dp08,
       .expected = pass},
      {.id = "DP-09",
       .ref = "(D_{n+r} + (-1)^r D_{n-r}) / D_n = Q_r",
       .ring = "dual",
       .vars = "pqnr",
       .eval = dp09,
       .expected = pass,
       .note = "checked multiplicatively: D_{n+r} + (-1)^r D_{n-r} against "
               "Q_r D_n"},
      {.id = "GP-01",
       .ref = "G_{n+r} = G_n P_{r+1} + G_{n-1} P_r",
       .ring = "integer",
       .vars = "pqnr",
       .eval = gp01,
       .expected = pass},
      {.id = "GP-02",
       .ref = "G_{n+1} - 5 G_{n-1} - 2 G_{n-2} = 0",
       .ring = "integer",
       .vars = "pqn",
       .eval = gp02,
       .expected = pass},
      {.id = "GP-03",
       .ref = "2 G_n - 4 G_{n-1} - G_{n-2} = 0",
       .ring = "integer",
       .vars = "pqn",
       .eval = gp03,
       .expected = fail},
      {.id = "GP-04",
       .ref = "2 (G_1 + G_3 + ... + G_{2n-1}) = G_{2n} - q",
       .ring = "integer",
       .vars = "pqn",
       .eval = gp04,
       .expected = pass,
       .sum_clamped = true},
      {.id = "GP-05",
       .ref = "2 (G_2 + G_4 + ... + G_{2n}) = G_{2n+1} - p",
       .ring = "integer",
       .vars = "pqn",
       .eval = gp05,
       .expected = pass,
       .sum_clamped = true},
      {.id = "GP-06",
       .ref = "G_n^2 + G_{n+1}^2 = (2p-2q) G_{2n+1} - e_p P_{2n+1}",
       .ring = "integer",
       .vars = "pqn",
       .eval = gp06,
       .expected = pass},
      {.id = "GP-07",
       .ref = "G_{n+1}^2 - G_{n-1}^2 = 2[(2p-2q) G_{2n} - e_p P_{2n}]",
       .ring = "integer",
       .vars = "pqn",
       .eval = gp07,
       .expected = pass},
      {.id = "GP-08",
       .ref = "G_{n-1} G_{n+1} - G_n^2 = (-1)^n e_p",
       .ring = "integer",
       .vars = "pqn",
       .eval = gp08,
       .expected = pass},
      {.id = "GP-09",
       .ref = "G_{n+1}^2 + e_p P_n^2 = p G_{2n+1}",
       .ring = "integer",
       .vars = "pqn",
       .eval = gp09,
       .expected = pass},
      {.id = "GP-10",
       .ref = "G_m G_{n+1} - G_{m+1} G_n = (-1)^n e_p P_{m-n}",
       .ring = "integer",
       .vars = "pqnm",
       .eval = gp10,
       .expected = pass},
      {.id = "GP-11",
       .ref = "G_m G_{n+1} + G_{m-1} G_n = (2p-2q) G_{m+n} - e_p P_{m+n}",
       .ring = "integer",
       .vars = "pqnm",
       .eval = gp11,
       .expected = pass},
      {.id = "GP-12",
       .ref = "G_{n+1-r} G_{n+1+r} - G_{n+1}^2 = (-1)^{n-r} e_p P_r^2",
       .ring = "integer",
       .vars = "pqnr",
       .eval = gp12,
       .expected = pass},
      {.id = "GP-13",
       .ref = "G_n G_{n+r+1} - G_{n-s} G_{n+r+s+1} = (-1)^{n+s} e_p P_s "
              "P_{r+s+1}",
       .ring = "integer",
       .vars = "pqnrs",
       .eval = gp13,
       .expected = pass},
      {.id = "GP-14",
       .ref = "(G_{n+r} + (-1)^r G_{n-r}) / G_n = Q_r",
       .ring = "rational",
       .vars = "pqnr",
       .eval = gp14,
       .expected = pass,
       .note = "checked multiplicatively: G_{n+r} + (-1)^r G_{n-r} against "
               "Q_r G_n"},
      {.id = "GR-01",
       .ref = "P_{n+r} + (-1)^r P_{n-r} = Q_r P_n",
       .ring = "integer",
       .vars = "nr",
       .eval = gr01,
       .expected = pass},
      {.id = "GR-02",
       .ref = "P_{n+r} P_{n-r} - P_n^2 = (-1)^{n-r+1} P_r^2",
       .ring = "integer",
       .vars = "nr",
       .eval = gr02,
       .expected = pass},
      {.id = "GR-03",
       .ref = "P_n P_{n+r+1} - P_{n-s} P_{n+r+s+1} = (-1)^{n+s} P_s "
              "P_{r+s+1}",
       .ring = "integer",
       .vars = "nrs",
       .eval = gr03,
       .expected = pass},
      {.id = "GR-04",
       .ref = "P_{n-1} P_{n+r} - P_{n-s-1} P_{n+r+s} = (-1)^{n+s+1} P_s "
              "P_{r+s+1}",
       .ring = "integer",
       .vars = "nrs",
       .eval = gr04,
       .expected = pass},
      {.id = "GR-05",
       .ref = "P_n P_{n+r} + P_{n-1} P_{n+r+1} - P_{n-s} P_{n+r+s} - "
              "P_{n-s-1} P_{n+r+s+1} = 2 (-1)^{n+s+1} P_s P_{r+s+1}",
       .ring = "integer",
       .vars = "nrs",
       .eval = gr05,
       .expected = pass},
      {.id = "PL-01",
       .ref = "P_m P_{n+1} + P_{m-1} P_n = P_{m+n}",
       .ring = "integer",
       .vars = "nm",
       .eval = pl01,
       .expected = pass},
      {.id = "PL-02",
       .ref = "P_m P_{n+1} - P_{m+1} P_n = (-1)^n P_{m-n}",
       .ring = "integer",
       .vars = "nm",
       .eval = pl02,
       .expected = pass},
      {.id = "PL-03",
       .ref = "P_{n-1} P_{n+1} - P_n^2 = (-1)^n",
       .ring = "integer",
       .vars = "n",
       .eval = pl03,
       .expected = pass},
      {.id = "PL-04",
       .ref = "P_n^2 + P_{n+1}^2 = P_{2n+1}",
       .ring = "integer",
       .vars = "n",
       .eval = pl04,
       .expected = pass},
      {.id = "PL-05",
       .ref = "P_{n+1}^2 - P_{n-1}^2 = 2 P_{2n}",
       .ring = "integer",
       .vars = "n",
       .eval = pl05,
       .expected = pass},
      {.id = "PL-06",
       .ref = "2 P_{n+1} P_n - 2 P_n^2 = P_{2n}",
       .ring = "integer",
       .vars = "n",
       .eval = pl06,
       .expected = pass},
      {.id = "PL-07",
       .ref = "P_n^2 + P_{n+3}^2 = 5 P_{2n+3}",
       .ring = "integer",
       .vars = "n",
       .eval = pl07,
       .expected = pass},
      {.id = "PL-08",
       .ref = "P_{2n+1} + P_{2n} = 2 P_{n+1}^2 - 2 P_n^2 - (-1)^n",
       .ring = "integer",
       .vars = "n",
       .eval = pl08,
       .expected = pass},
      {.id = "PL-09",
       .ref = "P_n^2 + P_{n-1} P_{n+1} = Q_n / 4",
       .ring = "rational",
       .vars = "n",
       .eval = pl09,
       .expected = fail,
       .note = "checked multiplicatively: 4 (P_n^2 + P_{n-1} P_{n+1}) "
               "against Q_n"},
      {.id = "PL-09C",
       .ref = "4 (P_n^2 + P_{n-1} P_{n+1}) = Q_n^2",
       .ring = "integer",
       .vars = "n",
       .eval = pl09c,
       .expected = pass,
       .conjectured = true,
       .note = "conjectured correction: right side Q_n squared"},
      {.id = "PL-10",
       .ref = "P_{n+1} + P_{n-1} = Q_n",
       .ring = "integer",
       .vars = "n",
       .eval = pl10,
       .expected = pass},
      {.id = "PL-11",
       .ref = "P_n Q_n = P_{2n}",
       .ring = "integer",
       .vars = "n",
       .eval = pl11,
       .expected = pass},
      {.id = "PS-01",
       .ref = "2 (P_1^2 + P_2^2 + ... + P_n^2) = P_n P_{n+1}",
       .ring = "integer",
       .vars = "n",
       .eval = ps01,
       .expected = pass,
       .sum_clamped = true,
       .note = "left side read as the sum of P_k^2 for k = 1..n"},
      {.id = "PS-02",
       .ref = "sum_{k=0..n} binom(n,k) 2^k P_{2k} = P_{2n}",
       .ring = "integer",
       .vars = "n",
       .eval = ps02,
       .expected = fail,
       .sum_clamped = true},
      {.id = "PS-02C",
       .ref = "sum_{k=0..n} binom(n,k) 2^k P_k = P_{2n}",
       .ring = "integer",
       .vars = "n",
       .eval = ps02c,
       .expected = pass,
       .conjectured = true,
       .sum_clamped = true,
       .note = "conjectured correction: P_k in place of P_{2k}"},
      {.id = "PS-03",
       .ref = "sum_{k=0..n} binom(n,k) P_k P_{n-k} = 2^n P_n",
       .ring = "integer",
       .vars = "n",
       .eval = ps03,
       .expected = fail,
       .sum_clamped = true},
      {.id = "PS-03C",
       .ref = "sum_{k=0..n} binom(n,k) P_k Q_{n-k} = 2^n P_n",
       .ring = "integer",
       .vars = "n",
       .eval = ps03c,
       .expected = pass,
       .conjectured = true,
       .sum_clamped = true,
       .note = "conjectured correction: Q_{n-k} in place of P_{n-k}"},
      {.id = "VT-C1",
       .ref = "<Cvec_n, Cvec_m> = 7[p^2 P_{n+m+3} + 2pq P_{n+m+2} + q^2 "
              "P_{n+m+1}] + (-1)^n i P_{m-n} e_p",
       .ring = "complex",
       .vars = "pqnm",
       .eval = vt_c1,
       .expected = pass},
      {.id = "VT-C2",
       .ref = "<Cvec_n, Cvec_n> = 7[p^2 P_{2n+3} + 2pq P_{2n+2} + q^2 "
              "P_{2n+1}] + 0i",
       .ring = "complex",
       .vars = "pqn",
       .eval = vt_c2,
       .expected = pass},
      {.id = "VT-C3",
       .ref = "Cvec_n x Cvec_m = (-1)^n P_{m-n} (2+2i) e_p (i + 2j - k)",
       .ring = "complex",
       .vars = "pqnm",
       .eval = vt_c3,
       .expected = pass,
       .note = "the (-1)^n P_{m-n} prefactor is identically equal to the "
               "(-1)^{m+1} P_{n-m} convention used for the other kinds; both "
               "match direct computation"},
      {.id = "VT-C4",
       .ref = "<Cvec_n x Cvec_m, Cvec_l> = 0",
       .ring = "complex",
       .vars = "pqnml",
       .eval = vt_c4,
       .expected = pass},
      {.id = "VT-D1",
       .ref = "<Dvec_n, Dvec_m> = p^2[(P_{n+m+3} + P_n P_m) + eps(2 "
              "P_{n+m+4} + P_{n+m} + 2 P_n P_m)] + pq[(P_{n+m+2} + 2 P_{n+1} "
              "P_{m+1} + 2 P_{n+m}) + eps(2 P_{n+m+3} + 4 P_{n+m+1} + 2 "
              "P_{n+m+2} + 4 P_{n+1} P_{m+1})] + q^2[(P_{n+m+1} + P_{n-1} "
              "P_{m-1}) + eps(2 P_{n+m+2} + P_{n+m-2} + 2 P_{n-1} P_{m-1})]",
       .ring = "dual",
       .vars = "pqnm",
       .eval = vt_d1,
       .expected = pass},
      {.id = "VT-D2",
       .ref = "<Dvec_n, Dvec_n> = p^2(P_{2n+3} + P_n^2) + pq(P_{2n+2} + 2 "
              "P_{n+1}^2 + 2 P_{2n}) + q^2(P_{2n+1} + P_{n-1}^2) + 2 eps "
              "{p^2(P_{2n+4} + P_n P_{n+1}) + pq(P_{2n+3} + 2 P_{n+1} "
              "P_{n+2}) + q^2(P_{2n+2} + P_{n-1} P_n)}",
       .ring = "dual",
       .vars = "pqn",
       .eval = vt_d2,
       .expected = fail,
       .note = "real component matches direct computation everywhere; the "
               "eps component disagrees whenever both p and q are nonzero"},
      {.id = "VT-D3",
       .ref = "Dvec_n x Dvec_m = (-1)^{m+1} P_{n-m} (1+2eps) e_p (i + 2j - "
              "k)",
       .ring = "dual",
       .vars = "pqnm",
       .eval = vt_d3,
       .expected = pass},
      {.id = "VT-D4",
       .ref = "<Dvec_n x Dvec_m, Dvec_l> = 0",
       .ring = "dual",
       .vars = "pqnml",
       .eval = vt_d4,
       .expected = pass},
      {.id = "VT-G1",
       .ref = "<Gvec_n, Gvec_m> = p^2(P_{n+m+3} + P_n P_m) + pq(P_{n+m+2} + "
              "2 P_{n+m} + 2 P_{n+1} P_{m+1}) + q^2(P_{n+m+1} + P_{n-1} "
              "P_{m-1})",
       .ring = "integer",
       .vars = "pqnm",
       .eval = vt_g1,
       .expected = pass},
      {.id = "VT-G2",
       .ref = "<Gvec_n, Gvec_n> = p^2(P_{2n+3} + P_n^2) + 2pq(P_{2n+2} + P_n "
              "P_{n-1}) + q^2(P_{2n+1} + P_{n-1}^2)",
       .ring = "integer",
       .vars = "pqn",
       .eval = vt_g2,
       .expected = pass},
      {.id = "VT-G3",
       .ref = "Gvec_n x Gvec_m = (-1)^{m+1} P_{n-m} e_p (i + 2j - k)",
       .ring = "integer",
       .vars = "pqnm",
       .eval = vt_g3,
       .expected = pass},
      {.id = "VT-G4",
       .ref = "<Gvec_n x Gvec_m, Gvec_l> = 0",
       .ring = "integer",
       .vars = "pqnml",
       .eval = vt_g4,
       .expected = pass},
      {.id = "XP-01",
       .ref = "P_n^2 - P_{n+1} P_{n-1} = (-1)^{n+1}",
       .ring = "integer",
       .vars = "n",
       .eval = xp01,
       .expected = pass},
      {.id = "XP-02",
       .ref = "P_{n-1} P_{m+1} - P_{n+2} P_{m-1} = 5 (-1)^{m-1} P_{n-m}",
       .ring = "integer",
       .vars = "nm",
       .eval = xp02,
       .expected = fail},
      {.id = "XP-03",
       .ref = "P_{n-1} P_{m+1} - P_{n+1} P_{m-1} = 2 (-1)^{m-1} P_{n-m}",
       .ring = "integer",
       .vars = "nm",
       .eval = xp03,
       .expected = pass},
      {.id = "XP-04",
       .ref = "P_n P_{m+2} - P_{n+2} P_m = 2 (-1)^m P_{n-m}",
       .ring = "integer",
       .vars = "nm",
       .eval = xp04,
       .expected = pass},
  };
  return cat;
}

void check_catalog(const std::vector<IdentitySpec>& cat) {
  int printed = 0;
  int conjectured = 0;
  for (const IdentitySpec& spec : cat) {
    (spec.conjectured ? conjectured : printed)++;
    if ((spec.eval == nullptr) !=
        (spec.expected == ExpectedStatus::quarantine)) {
      throw IntegrityError("catalog: " + spec.id +
                           " evaluator/quarantine flag mismatch");
    }
  }
  if (printed != kCatalogPrintedEntries ||
      conjectured != kCatalogConjecturedEntries) {
    throw IntegrityError("catalog: entry counts drifted from the inventory");
  }
  for (size_t i = 1; i < cat.size(); ++i) {
    if (!(cat[i - 1].id < cat[i].id)) {
      throw IntegrityError("catalog: ids not strictly increasing");
    }
  }
}

}  // namespace

const std::vector<IdentitySpec>& catalog() {
  static const std::vector<IdentitySpec> cat = [] {
    std::vector<IdentitySpec> c = build_catalog();
    check_catalog(c);
    return c;
  }();
  return cat;
}

const IdentitySpec& catalog_entry(const std::string& id) {
  const auto& cat = catalog();
  auto it = std::lower_bound(
      cat.begin(), cat.end(), id,
      [](const IdentitySpec& spec, const std::string& key) {
        return spec.id < key;
      });
  if (it == cat.end() || it->id != id) {
    throw std::invalid_argument("unknown identity id: " + id);
  }
  return *it;
}

}  // namespace pellkit
