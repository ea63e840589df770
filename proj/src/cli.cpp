#include "pellkit/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pellkit/gen_pell.hpp"
#include "pellkit/hypercomplex.hpp"
#include "pellkit/identity_harness.hpp"
#include "pellkit/pell.hpp"
#include "pellkit/pell_vec.hpp"
#include "pellkit/quad_int.hpp"
#include "pellkit/render.hpp"
#include "pellkit/version.hpp"

namespace pellkit {

namespace {

// --- shared helpers -----------------------------------------------------------

std::string fmt_double(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

std::string render_dual_double(const DualOf<double>& x) {
  std::string out = fmt_double(x.re);
  out += (x.du >= 0) ? '+' : '-';
  out += fmt_double(std::abs(x.du));
  out += 'e';
  return out;
}

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setfill('0') << std::setw(16) << h;
  return os.str();
}

PellParams params_for_kind(const std::string& kind, long long p, long long q,
                           bool p_set, bool q_set) {
  if (kind == "pell" || kind == "pell-lucas") {
    if (p_set || q_set) {
      throw std::invalid_argument("--p/--q are not accepted for kind '" +
                                  kind + "'");
    }
    return (kind == "pell") ? PellParams{1, 0} : PellParams{2, 2};
  }
  if (!p_set || !q_set) {
    throw std::invalid_argument("kind '" + kind + "' requires --p and --q");
  }
  return {p, q};
}

// --- seq ------------------------------------------------------------------------

struct SeqOpts {
  std::string kind;
  long long p = 0, q = 0;
  bool p_set = false, q_set = false;
  long long from = 0, to = 0;
  std::string format;
  bool header = false;
};

int do_seq(const SeqOpts& o, std::ostream& out) {
  PellParams params = params_for_kind(o.kind, o.p, o.q, o.p_set, o.q_set);
  const bool paired = (o.kind == "complex" || o.kind == "dual");
  const char suffix = (o.kind == "complex") ? 'i' : 'e';

  if (o.header && o.format != "csv") {
    throw std::invalid_argument("--header applies to --format csv only");
  }
  if (o.header) out << "n,value\n";

  if (o.from > o.to) return kExitOk;

  // Roll (G_n, G_{n+1}) forward across the window instead of recomputing
  // each term from scratch.
  ExactInt lo = gen_pell(params, o.from);
  ExactInt hi = gen_pell(params, o.from + 1);
  for (long long n = o.from;; ++n) {
    std::string value =
        paired ? render_pair(lo, hi, suffix) : to_decimal(lo);
    if (o.format == "csv") {
      out << n << ',' << value << '\n';
    } else {
      out << "{\"kind\":\"" << o.kind << "\",\"p\":" << params.p
          << ",\"q\":" << params.q << ",\"n\":" << n << ",\"value\":";
      if (paired) {
        out << '"' << value << '"';
      } else {
        out << value;
      }
      out << "}\n";
    }
    if (n == o.to) break;
    ExactInt next = 2 * hi + lo;
    lo = std::move(hi);
    hi = std::move(next);
  }
  return kExitOk;
}

// --- binet ------------------------------------------------------------------------

struct BinetOpts {
  std::string kind;
  long long p = 0, q = 0;
  bool p_set = false, q_set = false;
  long long n = 0;
};

int do_binet(const BinetOpts& o, std::ostream& out) {
  PellParams params = params_for_kind(o.kind, o.p, o.q, o.p_set, o.q_set);
  std::string recurrence, closed;
  if (o.kind == "pell") {
    recurrence = to_decimal(pell(o.n));
    closed = to_decimal(binet_pell(o.n));
  } else if (o.kind == "pell-lucas") {
    recurrence = to_decimal(pell_lucas(o.n));
    closed = to_decimal(binet_pell_lucas(o.n));
  } else if (o.kind == "gen") {
    recurrence = to_decimal(gen_pell(params, o.n));
    closed = to_decimal(gen_pell_binet(params, o.n));
  } else {
    recurrence = render(dual_pell(params, o.n));
    closed = render(dual_pell_binet(params, o.n));
  }

  out << "kind: " << o.kind << '\n';
  if (o.kind == "gen" || o.kind == "dual") {
    out << "p: " << params.p << '\n' << "q: " << params.q << '\n';
  }
  out << "n: " << o.n << '\n';
  out << "recurrence: " << recurrence << '\n';
  out << "closed_form: " << closed << '\n';
  if (recurrence != closed) {
    out << "MISMATCH\n";
    return kExitMismatch;
  }
  out << "MATCH\n";
  return kExitOk;
}

// --- verify ------------------------------------------------------------------------

struct VerifyOpts {
  std::vector<std::string> ids;
  std::string profile;
  std::string out_path;
};

int do_verify(const VerifyOpts& o, std::ostream& out, std::ostream& err) {
  GridProfile profile =
      (o.profile == "small") ? small_profile() : full_profile();
  VerificationReport report = verify_selected(o.ids, profile);
  std::string bytes = serialize_report(report);

  if (o.out_path.empty()) {
    out << bytes;
  } else {
    std::ofstream f(o.out_path, std::ios::binary);
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!f) {
      throw std::invalid_argument("cannot write report to " + o.out_path);
    }
    err << "report written to " << o.out_path << '\n';
  }

  long long verified = 0, failed = 0, quarantined = 0;
  out << "profile: " << report.profile << '\n';
  out << std::left << std::setw(8) << "id" << std::setw(18) << "status"
      << std::right << std::setw(9) << "trials"
      << "  counterexample" << '\n';
  for (const IdentityResult& r : report.results) {
    switch (r.status) {
      case IdentityStatus::verified: ++verified; break;
      case IdentityStatus::fails_as_printed: ++failed; break;
      case IdentityStatus::quarantined: ++quarantined; break;
    }
    out << std::left << std::setw(8) << r.id << std::setw(18)
        << to_string(r.status) << std::right << std::setw(9) << r.trials;
    if (r.counterexample) {
      out << "  " << r.counterexample->binding.render();
    }
    out << '\n';
  }
  out << "verified: " << verified << "  fails_as_printed: " << failed
      << "  quarantined: " << quarantined << '\n';

  std::vector<std::string> off;
  for (const IdentityResult& r : report.results) {
    if (r.status == IdentityStatus::quarantined) continue;
    const IdentitySpec& spec = catalog_entry(r.id);
    bool ok = (r.status == IdentityStatus::verified)
                  ? (spec.expected == ExpectedStatus::pass)
                  : (spec.expected == ExpectedStatus::fail);
    if (!ok) off.push_back(r.id);
  }
  if (off.empty()) {
    out << "expectations: match\n";
    return kExitOk;
  }
  out << "expectations: mismatch [";
  for (size_t i = 0; i < off.size(); ++i) {
    if (i) out << ' ';
    out << off[i];
  }
  out << "]\n";
  return kExitMismatch;
}

// --- limit ------------------------------------------------------------------------

struct LimitOpts {
  std::string kind;
  long long p = 0, q = 0;
  long long n = 0;
};

int do_limit(const LimitOpts& o, std::ostream& out) {
  PellParams params{o.p, o.q};
  const double alpha = 1.0 + std::sqrt(2.0);

  double ratio = 0.0, eps = 0.0;
  if (o.kind == "gen") {
    if (gen_pell(params, o.n) == 0) {
      throw std::invalid_argument("limit: G_n is zero at this index");
    }
    ratio = to_real({gen_pell(params, o.n + 1), 0}) /
            to_real({gen_pell(params, o.n), 0});
  } else {
    DualOf<double> term = dual_ratio_term(params, o.n);
    ratio = term.re;
    eps = term.du;
  }
  if (!std::isfinite(ratio)) {
    throw std::overflow_error("limit: ratio exceeds double range");
  }

  out << "kind: " << o.kind << '\n';
  out << "p: " << o.p << '\n';
  out << "q: " << o.q << '\n';
  out << "n: " << o.n << '\n';
  out << "ratio: " << fmt_double(ratio) << '\n';
  out << "error: " << fmt_double(std::abs(ratio - alpha)) << '\n';
  if (o.kind == "dual") {
    out << "epsilon: " << fmt_double(eps) << '\n';
  }
  return kExitOk;
}

// --- vec -------------------------------------------------------------------------

struct VecOpts {
  std::string op;
  std::string kind;
  long long p = 0, q = 0;
  long long n = 0, m = 0, l = 0;
  bool m_set = false, l_set = false;
};

// Renders direct and closed-form values and reports whether the exact
// underlying quantities agree. For norms the compared quantities are the
// exact radicands; the printed values are their float square roots.
struct VecOutcome {
  std::string direct;
  std::string closed;
  bool match = false;
};

template <typename V>
VecOutcome vec_pair(const V& direct, const V& closed) {
  return {render(direct), render(closed), direct == closed};
}

VecOutcome run_vec_op(const VecOpts& o) {
  PellParams params{o.p, o.q};
  if (o.op == "dot" || o.op == "cross" || o.op == "mixed") {
    if (!o.m_set) {
      throw std::invalid_argument("--m is required for op '" + o.op + "'");
    }
  }
  if (o.op == "mixed" && !o.l_set) {
    throw std::invalid_argument("--l is required for op 'mixed'");
  }

  if (o.kind == "gen") {
    auto u = make_vec_gen(params, o.n);
    if (o.op == "dot") {
      return vec_pair(dot(u, make_vec_gen(params, o.m)),
                      closed_form_dot_gen(params, o.n, o.m));
    }
    if (o.op == "cross") {
      return vec_pair(cross(u, make_vec_gen(params, o.m)),
                      closed_form_cross_gen(params, o.n, o.m));
    }
    if (o.op == "mixed") {
      return vec_pair(
          mixed(u, make_vec_gen(params, o.m), make_vec_gen(params, o.l)),
          ExactInt(0));
    }
    // norm: both sides exact integers (squared norm).
    return vec_pair(norm_gen(params, o.n), norm_closed_form_gen(params, o.n));
  }

  if (o.kind == "complex") {
    auto u = make_vec_complex(params, o.n);
    if (o.op == "dot") {
      return vec_pair(dot(u, make_vec_complex(params, o.m)),
                      closed_form_dot_complex(params, o.n, o.m));
    }
    if (o.op == "cross") {
      return vec_pair(cross(u, make_vec_complex(params, o.m)),
                      closed_form_cross_complex(params, o.n, o.m));
    }
    if (o.op == "mixed") {
      return vec_pair(mixed(u, make_vec_complex(params, o.m),
                            make_vec_complex(params, o.l)),
                      ComplexPellValue{0, 0});
    }
    // Match on the exact radicands; display float roots.
    ComplexPellValue self = dot(u, u);
    ExactInt closed = norm_closed_form_complex(params, o.n);
    return {fmt_double(norm_complex(params, o.n)),
            fmt_double(std::sqrt(to_real({closed, 0}))), self.re == closed};
  }

  auto u = make_vec_dual(params, o.n);
  if (o.op == "dot") {
    return vec_pair(dot(u, make_vec_dual(params, o.m)),
                    closed_form_dot_dual(params, o.n, o.m));
  }
  if (o.op == "cross") {
    return vec_pair(cross(u, make_vec_dual(params, o.m)),
                    closed_form_cross_dual(params, o.n, o.m));
  }
  if (o.op == "mixed") {
    return vec_pair(
        mixed(u, make_vec_dual(params, o.m), make_vec_dual(params, o.l)),
        DualPellValue{0, 0});
  }
  DualPellValue self = dot(u, u);
  DualPellValue closed = norm_closed_form_dual(params, o.n);
  if (closed.re <= 0) {
    throw std::invalid_argument(
        "vec norm: radicand real part must be positive");
  }
  DualOf<double> closed_root =
      dual_sqrt({to_real({closed.re, 0}), to_real({closed.du, 0})});
  return {render_dual_double(norm_dual(params, o.n)),
          render_dual_double(closed_root), self == closed};
}

int do_vec(const VecOpts& o, std::ostream& out) {
  VecOutcome r = run_vec_op(o);
  out << "op: " << o.op << '\n';
  out << "kind: " << o.kind << '\n';
  out << "p: " << o.p << '\n';
  out << "q: " << o.q << '\n';
  out << "n: " << o.n << '\n';
  if (o.m_set) out << "m: " << o.m << '\n';
  if (o.l_set) out << "l: " << o.l << '\n';
  out << "direct: " << r.direct << '\n';
  out << "closed_form: " << r.closed << '\n';
  out << (r.match ? "MATCH" : "MISMATCH") << '\n';
  return r.match ? kExitOk : kExitMismatch;
}

// --- bench -----------------------------------------------------------------------

struct BenchOpts {
  std::string algo;
  long long n = 0;
  long long mod = 0;
  bool mod_set = false;
  long long reps = 0;
};

ExactInt bench_value(const BenchOpts& o) {
  if (o.mod_set) {
    ExactInt m = o.mod;
    if (m <= 1) throw std::invalid_argument("bench: modulus must be > 1");
    if (o.algo == "doubling") return pell_mod(o.n, m);
    if (o.algo == "recurrence") {
      if (o.n < 0) {
        throw std::invalid_argument("bench: modular index must be >= 0");
      }
      ExactInt lo = 0, hi = 1 % m;
      for (long long k = 0; k < o.n; ++k) {
        ExactInt next = (2 * hi + lo) % m;
        lo = std::move(hi);
        hi = std::move(next);
      }
      return lo;
    }
    ExactInt v = (o.algo == "matrix") ? pell_matrix_pow(o.n).b
                                      : binet_pell(o.n);
    v %= m;
    if (v < 0) v += m;
    return v;
  }
  if (o.algo == "recurrence") return pell(o.n);
  if (o.algo == "doubling") return pell_pair_doubling(o.n).first;
  if (o.algo == "matrix") return pell_matrix_pow(o.n).b;
  return binet_pell(o.n);
}

int do_bench(const BenchOpts& o, std::ostream& out, std::ostream& err) {
  if (o.reps < 1) throw std::invalid_argument("bench: --reps must be >= 1");

  std::vector<long long> us;
  us.reserve(static_cast<size_t>(o.reps));
  ExactInt value;
  for (long long i = 0; i < o.reps; ++i) {
    auto start = std::chrono::steady_clock::now();
    ExactInt v = bench_value(o);
    auto stop = std::chrono::steady_clock::now();
    us.push_back(std::chrono::duration_cast<std::chrono::microseconds>(
                     stop - start)
                     .count());
    if (i == 0) {
      value = std::move(v);
    } else if (v != value) {
      throw IntegrityError("bench: result changed between repetitions");
    }
  }
  std::sort(us.begin(), us.end());
  long long mn = us.front();
  long long median = (us.size() % 2 == 1)
                         ? us[us.size() / 2]
                         : (us[us.size() / 2 - 1] + us[us.size() / 2]) / 2;

  std::string digits = to_decimal(value);
  out << "algo: " << o.algo << '\n';
  out << "n: " << o.n << '\n';
  if (o.mod_set) out << "mod: " << o.mod << '\n';
  out << "reps: " << o.reps << '\n';
  out << "digits: " << digits.size() << '\n';
  out << "digest: fnv1a64:" << fnv1a64_hex(digits) << '\n';
  err << "# timing algo=" << o.algo << " n=" << o.n << " reps=" << o.reps
      << " min_us=" << mn << " median_us=" << median << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact Pell / Pell-Lucas sequence toolkit", "pellkit"};
  app.set_version_flag("--version",
                       std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);

  SeqOpts seq;
  CLI::App* seq_cmd = app.add_subcommand(
      "seq", "Print a contiguous run of sequence values");
  seq_cmd->add_option("--kind", seq.kind, "Sequence family")
      ->required()
      ->check(CLI::IsMember({"pell", "pell-lucas", "gen", "complex", "dual"}));
  seq_cmd->add_option("--p", seq.p, "Family parameter p")
      ->each([&seq](const std::string&) { seq.p_set = true; });
  seq_cmd->add_option("--q", seq.q, "Family parameter q")
      ->each([&seq](const std::string&) { seq.q_set = true; });
  seq_cmd->add_option("--from", seq.from, "First index")->required();
  seq_cmd->add_option("--to", seq.to, "Last index")->required();
  seq_cmd->add_option("--format", seq.format, "Output format")
      ->required()
      ->check(CLI::IsMember({"csv", "jsonl"}));
  seq_cmd->add_flag("--header", seq.header, "Emit a CSV header row");

  BinetOpts binet;
  CLI::App* binet_cmd = app.add_subcommand(
      "binet", "Cross-check the recurrence against the closed form");
  binet_cmd->add_option("--kind", binet.kind, "Sequence family")
      ->required()
      ->check(CLI::IsMember({"pell", "pell-lucas", "gen", "dual"}));
  binet_cmd->add_option("--p", binet.p, "Family parameter p")
      ->each([&binet](const std::string&) { binet.p_set = true; });
  binet_cmd->add_option("--q", binet.q, "Family parameter q")
      ->each([&binet](const std::string&) { binet.q_set = true; });
  binet_cmd->add_option("--n", binet.n, "Index")->required();

  VerifyOpts verify;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Sweep the identity catalog over a finite grid");
  verify_cmd->add_option("--id", verify.ids,
                         "Identity id (repeatable; default: whole catalog)");
  verify_cmd->add_option("--profile", verify.profile, "Grid profile")
      ->required()
      ->check(CLI::IsMember({"small", "full"}));
  verify_cmd->add_option("--out", verify.out_path,
                         "Write the report to this file instead of stdout");

  LimitOpts limit;
  CLI::App* limit_cmd = app.add_subcommand(
      "limit", "Consecutive-term ratio against the silver ratio");
  limit_cmd->add_option("--kind", limit.kind, "Sequence family")
      ->required()
      ->check(CLI::IsMember({"gen", "dual"}));
  limit_cmd->add_option("--p", limit.p, "Family parameter p")->required();
  limit_cmd->add_option("--q", limit.q, "Family parameter q")->required();
  limit_cmd->add_option("--n", limit.n, "Index")->required();

  VecOpts vec;
  CLI::App* vec_cmd = app.add_subcommand(
      "vec", "Vector algebra, direct versus closed form");
  vec_cmd->add_option("--op", vec.op, "Operation")
      ->required()
      ->check(CLI::IsMember({"dot", "cross", "mixed", "norm"}));
  vec_cmd->add_option("--kind", vec.kind, "Scalar ring")
      ->required()
      ->check(CLI::IsMember({"gen", "complex", "dual"}));
  vec_cmd->add_option("--p", vec.p, "Family parameter p")->required();
  vec_cmd->add_option("--q", vec.q, "Family parameter q")->required();
  vec_cmd->add_option("--n", vec.n, "Index of the first vector")->required();
  vec_cmd->add_option("--m", vec.m, "Index of the second vector")
      ->each([&vec](const std::string&) { vec.m_set = true; });
  vec_cmd->add_option("--l", vec.l, "Index of the third vector")
      ->each([&vec](const std::string&) { vec.l_set = true; });

  BenchOpts bench;
  CLI::App* bench_cmd = app.add_subcommand(
      "bench", "Time one evaluation strategy and digest its result");
  bench_cmd->add_option("--algo", bench.algo, "Evaluation strategy")
      ->required()
      ->check(
          CLI::IsMember({"recurrence", "doubling", "matrix", "binet"}));
  bench_cmd->add_option("--n", bench.n, "Index")->required();
  bench_cmd->add_option("--mod", bench.mod, "Reduce modulo this value")
      ->each([&bench](const std::string&) { bench.mod_set = true; });
  bench_cmd->add_option("--reps", bench.reps, "Repetitions")->required();

  try {
    // CLI11's vector-parse entry point consumes arguments back to front.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    if (app.got_subcommand(seq_cmd)) return do_seq(seq, out);
    if (app.got_subcommand(binet_cmd)) return do_binet(binet, out);
    if (app.got_subcommand(verify_cmd)) return do_verify(verify, out, err);
    if (app.got_subcommand(limit_cmd)) return do_limit(limit, out);
    if (app.got_subcommand(vec_cmd)) return do_vec(vec, out);
    return do_bench(bench, out, err);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e, out, err);  // --help / --version
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IntegrityError& e) {
    err << "integrity error: " << e.what() << '\n';
    return kExitIntegrity;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace pellkit
