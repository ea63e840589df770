#pragma once

#include "pellkit/exact_int.hpp"

namespace pellkit {

// The integer pair (p, q) seeding the generalized sequence G_0 = q, G_1 = p,
// G_n = 2 G_{n-1} + G_{n-2}. (1,0) reduces to the Pell numbers and (2,2) to
// the companion sequence.
struct PellParams {
  ExactInt p;
  ExactInt q;
  friend bool operator==(const PellParams&, const PellParams&) = default;
};

// G_n = p P_n + q P_{n-1} over the signed Pell extension; for n >= 0 this is
// exactly the recurrence from the seeds, and the same linear form defines all
// negative indices.
ExactInt gen_pell(const PellParams& params, SeqIndex n);

// The Cassini invariant e_p = p^2 - 2pq - q^2 of the (p, q) family; equals
// (-1)^n (G_{n-1} G_{n+1} - G_n^2) for every n.
ExactInt e_p(const PellParams& params);

// Right-hand side of the addition formula: G_n P_{r+1} + G_{n-1} P_r.
// Contract: equals gen_pell(params, n + r).
ExactInt gen_pell_addition(const PellParams& params, SeqIndex n, SeqIndex r);

// 2 * sum_{i=0}^{n-1} G_{2i+1} by direct summation; contract: G_{2n} - q.
// Requires n >= 0.
ExactInt odd_partial_sum(const PellParams& params, SeqIndex n);

// 2 * sum_{i=1}^{n} G_{2i} by direct summation; contract: G_{2n+1} - p.
// Requires n >= 0.
ExactInt even_partial_sum(const PellParams& params, SeqIndex n);

// G_n through ring arithmetic in Z[sqrt(2)]: (abar alpha^n - bbar beta^n)
// divided exactly by 2*sqrt(2), where abar = p + q(alpha - 2) and bbar is its
// conjugate. Integrity-checked; contract: equals gen_pell(params, n).
ExactInt gen_pell_binet(const PellParams& params, SeqIndex n);

// Verifies exactly in Z[sqrt(2)] that (p alpha + q) == alpha (q alpha + p - 2q),
// i.e. the displayed closed form of the ratio limit simplifies to alpha itself
// whenever the denominator is nonzero.
bool silver_ratio_identity(const PellParams& params);

// |G_{n+1}/G_n - (1 + sqrt(2))| in double precision. Requires G_n != 0.
double ratio_convergence(const PellParams& params, SeqIndex n);

}  // namespace pellkit
