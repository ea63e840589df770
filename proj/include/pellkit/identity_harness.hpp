#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pellkit/exact_int.hpp"
#include "pellkit/hypercomplex.hpp"
#include "pellkit/pell_vec.hpp"

namespace pellkit {

// Outcome of sweeping one identity over a grid.
enum class IdentityStatus { verified, fails_as_printed, quarantined };

// What the catalog expects the sweep to report (recorded alongside each
// entry so the CLI's exit code can flag regressions).
enum class ExpectedStatus { pass, fail, quarantine };

std::string to_string(IdentityStatus s);

// Thrown when evaluation of a quarantined entry is requested; such entries
// contain a symbol with no definition and cannot be computed.
class QuarantinedIdentityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Finite sweep domains. Index variables n, m, l range over [n_lo, n_hi]
// (clamped to [0, n_hi] for summation entries); shift variables r, s over
// [0, r_hi]; family parameters p, q over [pq_lo, pq_hi].
struct GridProfile {
  std::string name;
  long long n_lo, n_hi;
  long long r_hi;
  long long pq_lo, pq_hi;
};
GridProfile small_profile();  // n,m,l in [-6, 12], r,s in [0, 5], p,q in [-3, 3]
GridProfile full_profile();   // n,m,l in [-10, 20], r,s in [0, 8], p,q in [-4, 4]

// One concrete assignment of an identity's variables, kept in the canonical
// order p, q, n, m, r, s, l.
struct Binding {
  std::vector<std::pair<char, long long>> values;
  std::string render() const;  // "p=-3 q=-3 n=-6"
};

// Precomputed sequence tables for fast exact evaluation of catalog entries:
// Pell P, companion Q, the generalized family G for one (p, q), the invariant
// e_p, and binomial coefficients. Tables cover every index expression any
// entry can form over the profile domains; out-of-window access is an
// integrity failure.
class EvalCtx {
 public:
  EvalCtx(long long p, long long q);

  const ExactInt& P(SeqIndex k) const;
  const ExactInt& Q(SeqIndex k) const;
  const ExactInt& G(SeqIndex k) const;
  const ExactInt& e() const { return e_; }
  long long p() const { return p_; }
  long long q() const { return q_; }
  const ExactInt& binom(SeqIndex n, SeqIndex k) const;

  ComplexPellValue C(SeqIndex k) const { return {G(k), G(k + 1)}; }
  DualPellValue D(SeqIndex k) const { return {G(k), G(k + 1)}; }
  Vec3Of<ExactInt> gvec(SeqIndex k) const { return {G(k), G(k + 1), G(k + 2)}; }
  Vec3Of<ComplexPellValue> cvec(SeqIndex k) const {
    return {C(k), C(k + 1), C(k + 2)};
  }
  Vec3Of<DualPellValue> dvec(SeqIndex k) const {
    return {D(k), D(k + 1), D(k + 2)};
  }

  PellParams params() const { return {p_, q_}; }

 private:
  long long p_, q_;
  ExactInt e_;
  std::vector<ExactInt> g_;  // G over the shared signed window
};

// All seven variables an entry might use; entries read only the slots named
// in their vars string.
struct Vars {
  long long p = 1, q = 0, n = 0, m = 0, r = 0, s = 0, l = 0;
};

// Both sides of an identity, evaluated exactly in its ring.
using RingValue =
    std::variant<ExactInt, ComplexPellValue, DualPellValue, Vec3Of<ExactInt>,
                 Vec3Of<ComplexPellValue>, Vec3Of<DualPellValue>>;
std::string render_value(const RingValue& v);

struct EvalPair {
  RingValue lhs, rhs;
};

using Evaluator = EvalPair (*)(const EvalCtx&, const Vars&);

// A machine-checkable identity: both sides as exact evaluators plus the
// metadata the report carries. Division-shaped identities are stored in
// multiplicative form (numerator vs quotient times denominator) so every
// evaluation stays in the exact ring.
struct IdentitySpec {
  std::string id;
  std::string ref;    // the printed formula, ASCII transliteration
  std::string ring;   // integer | rational | complex | dual
  std::string vars;   // subset of "pqnmrsl" in canonical order
  Evaluator eval = nullptr;  // null iff quarantined
  ExpectedStatus expected = ExpectedStatus::pass;
  bool conjectured = false;  // correction entry, excluded from fidelity counts
  bool sum_clamped = false;  // summation entry: n restricted to [0, n_hi]
  std::string note;          // interpretation notes carried into the report
};

// The complete identity inventory: stable order, duplicate-free, fixed count
// (67 printed entries + 4 conjectured corrections).
const std::vector<IdentitySpec>& catalog();
inline constexpr int kCatalogPrintedEntries = 67;
inline constexpr int kCatalogConjecturedEntries = 4;
const IdentitySpec& catalog_entry(const std::string& id);  // throws if unknown

// Exact evaluation of one entry at one binding; quarantined entries refuse
// with QuarantinedIdentityError.
EvalPair evaluate(const IdentitySpec& spec, const EvalCtx& ctx, const Vars& v);

struct Counterexample {
  Binding binding;
  std::string lhs, rhs;  // exact renderings of both sides
};

struct IdentityResult {
  std::string id;
  IdentityStatus status = IdentityStatus::verified;
  long long trials = 0;
  std::optional<Counterexample> counterexample;
};

// Sweeps the profile grid in row-major order over (p, q, n, m, r, s, l), each
// coordinate ascending; verified iff all bindings agree exactly. On failure
// the scan continues (trials counts every binding) and the first failing
// binding in iteration order is reported as the minimal counterexample.
IdentityResult verify(const IdentitySpec& spec, const GridProfile& profile);

struct VerificationReport {
  std::string profile;
  std::vector<IdentityResult> results;  // sorted by id
};

VerificationReport verify_all(const GridProfile& profile);
// ids empty = whole catalog; unknown ids throw std::invalid_argument.
VerificationReport verify_selected(const std::vector<std::string>& ids,
                                   const GridProfile& profile);

// Canonical report bytes: stable key order, LF endings, no timestamps;
// byte-identical across runs for the same profile.
std::string serialize_report(const VerificationReport& report);

// True iff every non-quarantined result matches its entry's expected status.
bool matches_expectations(const VerificationReport& report);

}  // namespace pellkit
