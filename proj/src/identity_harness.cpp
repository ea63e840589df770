#include "pellkit/identity_harness.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>

#include "pellkit/render.hpp"
#include "pellkit/version.hpp"

namespace pellkit {

namespace {

// Shared signed window for the sequence tables. Every index expression any
// catalog entry can form over the profile domains lands well inside it
// (extremes: 2n+4 = 44 and n+m = -30 under the full profile).
constexpr SeqIndex kWinLo = -48;
constexpr SeqIndex kWinHi = 48;
constexpr SeqIndex kPellLo = kWinLo - 2;  // G(k) and D(k) reach P(k-1), P(k+1)
constexpr SeqIndex kPellHi = kWinHi + 2;
constexpr SeqIndex kBinomMax = 32;

std::vector<ExactInt> build_table(ExactInt x0, ExactInt x1) {
  std::vector<ExactInt> t(kPellHi - kPellLo + 1);
  auto at = [&t](SeqIndex k) -> ExactInt& { return t[k - kPellLo]; };
  at(0) = std::move(x0);
  at(1) = std::move(x1);
  for (SeqIndex k = 2; k <= kPellHi; ++k) at(k) = 2 * at(k - 1) + at(k - 2);
  for (SeqIndex k = -1; k >= kPellLo; --k) at(k) = at(k + 2) - 2 * at(k + 1);
  return t;
}

const std::vector<ExactInt>& pell_table() {
  static const std::vector<ExactInt> t = build_table(0, 1);
  return t;
}

const std::vector<ExactInt>& pell_lucas_table() {
  static const std::vector<ExactInt> t = build_table(2, 2);
  return t;
}

const std::vector<std::vector<ExactInt>>& binom_table() {
  static const std::vector<std::vector<ExactInt>> t = [] {
    std::vector<std::vector<ExactInt>> rows(kBinomMax + 1);
    for (SeqIndex n = 0; n <= kBinomMax; ++n) {
      rows[n].resize(n + 1);
      rows[n][0] = 1;
      rows[n][n] = 1;
      for (SeqIndex k = 1; k < n; ++k) {
        rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
      }
    }
    return rows;
  }();
  return t;
}

constexpr const char* kVarOrder = "pqnmrsl";

size_t var_rank(char v) {
  for (size_t i = 0; kVarOrder[i] != '\0'; ++i) {
    if (kVarOrder[i] == v) return i;
  }
  throw IntegrityError(std::string("unknown identity variable '") + v + "'");
}

}  // namespace

std::string to_string(IdentityStatus s) {
  switch (s) {
    case IdentityStatus::verified: return "verified";
    case IdentityStatus::fails_as_printed: return "fails_as_printed";
    case IdentityStatus::quarantined: return "quarantined";
  }
  throw std::logic_error("unreachable identity status");
}

GridProfile small_profile() { return {"small", -6, 12, 5, -3, 3}; }

GridProfile full_profile() { return {"full", -10, 20, 8, -4, 4}; }

std::string Binding::render() const {
  std::string out;
  for (const auto& [name, value] : values) {
    if (!out.empty()) out += ' ';
    out += name;
    out += '=';
    out += std::to_string(value);
  }
  return out;
}

EvalCtx::EvalCtx(long long p, long long q) : p_(p), q_(q) {
  e_ = ExactInt(p) * p - 2 * ExactInt(p) * q - ExactInt(q) * q;
  const auto& pt = pell_table();
  g_.resize(kWinHi - kWinLo + 1);
  for (SeqIndex k = kWinLo; k <= kWinHi; ++k) {
    g_[k - kWinLo] = p * pt[k - kPellLo] + q * pt[k - 1 - kPellLo];
  }
}

const ExactInt& EvalCtx::P(SeqIndex k) const {
  if (k < kPellLo || k > kPellHi) {
    throw IntegrityError("EvalCtx: P index outside the table window");
  }
  return pell_table()[k - kPellLo];
}

const ExactInt& EvalCtx::Q(SeqIndex k) const {
  if (k < kPellLo || k > kPellHi) {
    throw IntegrityError("EvalCtx: Q index outside the table window");
  }
  return pell_lucas_table()[k - kPellLo];
}

const ExactInt& EvalCtx::G(SeqIndex k) const {
  if (k < kWinLo || k > kWinHi) {
    throw IntegrityError("EvalCtx: G index outside the table window");
  }
  return g_[k - kWinLo];
}

const ExactInt& EvalCtx::binom(SeqIndex n, SeqIndex k) const {
  if (n < 0 || n > kBinomMax || k < 0 || k > n) {
    throw IntegrityError("EvalCtx: binomial index out of range");
  }
  return binom_table()[n][k];
}

std::string render_value(const RingValue& v) {
  return std::visit([](const auto& inner) { return render(inner); }, v);
}

EvalPair evaluate(const IdentitySpec& spec, const EvalCtx& ctx, const Vars& v) {
  if (!spec.eval) {
    throw QuarantinedIdentityError(
        spec.id + " is quarantined (contains an undefined symbol) and cannot "
                  "be evaluated");
  }
  return spec.eval(ctx, v);
}

IdentityResult verify(const IdentitySpec& spec, const GridProfile& profile) {
  IdentityResult result;
  result.id = spec.id;
  if (!spec.eval) {
    result.status = IdentityStatus::quarantined;
    return result;
  }

  struct Dom {
    char name;
    long long lo, hi;
  };
  std::vector<Dom> doms;
  size_t prev_rank = 0;
  bool first_var = true;
  for (char v : spec.vars) {
    size_t rank = var_rank(v);
    if (!first_var && rank <= prev_rank) {
      throw IntegrityError(spec.id + ": variables not in canonical order");
    }
    prev_rank = rank;
    first_var = false;
    switch (v) {
      case 'p':
      case 'q':
        doms.push_back({v, profile.pq_lo, profile.pq_hi});
        break;
      case 'r':
      case 's':
        doms.push_back({v, 0, profile.r_hi});
        break;
      default:
        doms.push_back({v, (v == 'n' && spec.sum_clamped) ? 0 : profile.n_lo,
                        profile.n_hi});
        break;
    }
  }

  // Entries without family parameters evaluate against (p, q) = (1, 0),
  // under which G coincides with the plain Pell table and e_p = 1.
  static const EvalCtx base_ctx(1, 0);
  std::unique_ptr<EvalCtx> local;
  const EvalCtx* active = &base_ctx;

  Vars vars;
  long long trials = 0;
  std::optional<Counterexample> first;

  auto set_var = [&vars](char name, long long x) {
    switch (name) {
      case 'p': vars.p = x; break;
      case 'q': vars.q = x; break;
      case 'n': vars.n = x; break;
      case 'm': vars.m = x; break;
      case 'r': vars.r = x; break;
      case 's': vars.s = x; break;
      case 'l': vars.l = x; break;
    }
  };

  auto capture_binding = [&]() {
    Binding b;
    for (const Dom& d : doms) {
      long long x = 0;
      switch (d.name) {
        case 'p': x = vars.p; break;
        case 'q': x = vars.q; break;
        case 'n': x = vars.n; break;
        case 'm': x = vars.m; break;
        case 'r': x = vars.r; break;
        case 's': x = vars.s; break;
        case 'l': x = vars.l; break;
      }
      b.values.emplace_back(d.name, x);
    }
    return b;
  };

  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == doms.size()) {
      ++trials;
      EvalPair pair = spec.eval(*active, vars);
      if (!first && !(pair.lhs == pair.rhs)) {
        first = Counterexample{capture_binding(), render_value(pair.lhs),
                               render_value(pair.rhs)};
      }
      return;
    }
    const Dom& d = doms[i];
    for (long long x = d.lo; x <= d.hi; ++x) {
      set_var(d.name, x);
      if (d.name == 'q') {
        // p is bound before q in canonical order, so rebuilding here tracks
        // every (p, q) advance exactly once.
        local = std::make_unique<EvalCtx>(vars.p, vars.q);
        active = local.get();
      }
      self(self, i + 1);
    }
  };
  rec(rec, 0);

  result.trials = trials;
  result.status =
      first ? IdentityStatus::fails_as_printed : IdentityStatus::verified;
  result.counterexample = std::move(first);
  return result;
}

VerificationReport verify_all(const GridProfile& profile) {
  return verify_selected({}, profile);
}

VerificationReport verify_selected(const std::vector<std::string>& ids,
                                   const GridProfile& profile) {
  VerificationReport report;
  report.profile = profile.name;
  if (ids.empty()) {
    for (const IdentitySpec& spec : catalog()) {
      report.results.push_back(verify(spec, profile));
    }
  } else {
    for (const std::string& id : ids) {
      report.results.push_back(verify(catalog_entry(id), profile));
    }
  }
  std::sort(report.results.begin(), report.results.end(),
            [](const IdentityResult& a, const IdentityResult& b) {
              return a.id < b.id;
            });
  return report;
}

std::string serialize_report(const VerificationReport& report) {
  int printed = 0;
  int conjectured = 0;
  for (const IdentityResult& r : report.results) {
    (catalog_entry(r.id).conjectured ? conjectured : printed)++;
  }
  std::string out;
  out += "report_version: 1\n";
  out += std::string("tool: ") + kToolName + " " + kToolVersion + "\n";
  out += "profile: " + report.profile + "\n";
  out += "entries: " + std::to_string(printed) + "\n";
  out += "conjectured: " + std::to_string(conjectured) + "\n";
  for (const IdentityResult& r : report.results) {
    const IdentitySpec& spec = catalog_entry(r.id);
    out += "---\n";
    out += "id: " + r.id + "\n";
    out += "ref: " + spec.ref + "\n";
    if (spec.conjectured) out += "conjectured: true\n";
    out += "status: " + to_string(r.status) + "\n";
    out += "trials: " + std::to_string(r.trials) + "\n";
    if (r.counterexample) {
      out += "counterexample: " + r.counterexample->binding.render() + "\n";
      out += "lhs: " + r.counterexample->lhs + "\n";
      out += "rhs: " + r.counterexample->rhs + "\n";
    }
    if (!spec.note.empty()) out += "note: " + spec.note + "\n";
  }
  return out;
}

bool matches_expectations(const VerificationReport& report) {
  for (const IdentityResult& r : report.results) {
    if (r.status == IdentityStatus::quarantined) continue;
    ExpectedStatus expected = catalog_entry(r.id).expected;
    bool ok = (r.status == IdentityStatus::verified &&
               expected == ExpectedStatus::pass) ||
              (r.status == IdentityStatus::fails_as_printed &&
               expected == ExpectedStatus::fail);
    if (!ok) return false;
  }
  return true;
}

}  // namespace pellkit
