#include "cli.hpp"

#include "jets/cohomology.hpp"
#include "jets/equivariant.hpp"
#include "jets/serialization.hpp"
#include "jets/splitting.hpp"
#include "jets/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

namespace jets::cli {

namespace {

struct MatrixArgs {
  std::string side;
  int k = 0;
  int d = 0;
  bool json = false;
};

struct SplitArgs {
  std::string side;
  int k = 0;
  int d = 0;
  std::string method = "both";
  bool witness = false;
  bool json = false;
};

struct VerifyArgs {
  VerifyOptions opts;
  bool json = false;
};

struct FiberArgs {
  int N = 1;
  std::string side;
  int k = 0;
  int d = 0;
  bool json = false;
};

struct CohomologyArgs {
  int N = 1;
  std::string sheaf;
  bool json = false;
};

class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

Side side_or_usage(const std::string& s) {
  try {
    return parse_side(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int cmd_matrix(const MatrixArgs& a, std::ostream& out) {
  const Side side = side_or_usage(a.side);
  if (a.k < 0) throw UsageError("--k must be >= 0");
  const LaurentMatrix m = build_matrix(a.k, a.d, side);
  if (a.json) out << to_json(m).dump() << '\n';
  else out << m.to_string(chart_variable(side)) << '\n';
  return kOk;
}

int cmd_split(const SplitArgs& a, std::ostream& out) {
  const Side side = side_or_usage(a.side);
  if (a.k < 0) throw UsageError("--k must be >= 0");
  const bool use_h0 = a.method == "h0" || a.method == "both";
  const bool use_birkhoff = a.method == "birkhoff" || a.method == "both";
  if (!use_h0 && !use_birkhoff) throw UsageError("--method must be h0, birkhoff or both");

  const JetSpec spec(1, a.k, a.d, side);
  const LaurentMatrix m = build_matrix(a.k, a.d, side);
  const SplittingType predicted = predicted_splitting(spec);

  std::optional<SplittingType> by_h0;
  std::optional<BirkhoffWitness> witness;
  if (use_h0) by_h0 = splitting_from_h0(m);
  if (use_birkhoff) {
    witness = birkhoff_factorize(m);
    if (!witness_is_valid(*witness, m)) throw InternalInconsistency("Birkhoff witness failed validation");
  }
  if (by_h0 && witness && *by_h0 != witness->splitting())
    throw InternalInconsistency("h0 profile " + by_h0->to_string() + " disagrees with Birkhoff witness " +
                                witness->splitting().to_string());
  const SplittingType computed = by_h0 ? *by_h0 : witness->splitting();
  const bool match = computed == predicted;

  if (a.json) {
    Json j = {{"spec", to_json(spec)}, {"predicted", to_json(predicted)}, {"match", match}};
    if (by_h0) j["h0"] = to_json(*by_h0);
    if (witness) {
      j["birkhoff"] = to_json(witness->splitting());
      if (a.witness) j["witness"] = to_json(*witness);
    }
    out << j.dump() << '\n';
  } else {
    out << computed.to_string() << '\n';
    if (by_h0 && witness) out << "methods: h0 and birkhoff agree\n";
    out << "predicted: " << predicted.to_string() << (match ? " (match)" : " (MISMATCH)") << '\n';
    if (witness && a.witness) {
      const char* var = chart_variable(side);
      out << "U =\n" << witness->U.to_string(var) << "\nD =\n" << witness->D.to_string(var) << "\nV =\n"
          << witness->V.to_string(var) << '\n';
    }
  }
  return match ? kOk : kMismatch;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.opts.kmax < 1) throw UsageError("--kmax must be >= 1");
  if (a.opts.dmin > a.opts.dmax) throw UsageError("--dmin must be <= --dmax");
  if (a.opts.Nmax < 1) throw UsageError("--Nmax must be >= 1");
  const VerifyReport r = run_verify(a.opts);
  if (a.json) {
    out << to_json(r).dump() << '\n';
  } else {
    for (const auto& cell : r.cells) {
      if (cell.pass()) continue;
      for (const auto& ch : cell.checks)
        if (!ch.pass) out << "FAIL " << cell.spec.to_string() << ' ' << ch.name << ": " << ch.detail << '\n';
    }
    out << r.left_band_statement() << '\n';
    out << r.summary() << (r.all_pass() ? " - all checks pass" : " - FAILURES") << '\n';
  }
  return r.all_pass() ? kOk : kMismatch;
}

int cmd_fiber(const FiberArgs& a, std::ostream& out) {
  const Side side = side_or_usage(a.side);
  if (a.N < 1 || a.k < 0) throw UsageError("--N must be >= 1 and --k >= 0");
  FiberReport r;
  try {
    r = verify_fiber(JetSpec(a.N, a.k, a.d, side));
  } catch (const UnsupportedCase& e) {
    throw UsageError(e.what());
  }
  if (a.json) {
    out << to_json(r).dump() << '\n';
  } else {
    out << "predicted: " << r.predicted.to_string() << '\n'
        << "predicted weights: " << r.predicted_weights.to_string() << '\n'
        << "oracle weights:    " << r.oracle_weights.to_string() << '\n'
        << "dimension: " << r.predicted_weights.dimension() << " (expected " << r.expected_dimension << ")\n"
        << (r.match() ? "match" : "mismatch") << '\n';
  }
  return r.match() ? kOk : kMismatch;
}

int cmd_cohomology(const CohomologyArgs& a, std::ostream& out) {
  if (a.N < 1) throw UsageError("--N must be >= 1");
  CohomologyTable t;
  try {
    t = cohomology(a.N, SheafDescriptor::parse(a.sheaf));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (a.json) {
    out << to_json(t).dump() << '\n';
  } else {
    out << t.sheaf.to_string() << " on P^" << t.N << ':';
    for (int i = 0; i <= t.N; ++i) out << " h" << i << '=' << t.h(i);
    out << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jet bundles on the projective line: transition matrices, splitting types, fiber weights"};
  app.require_subcommand(1);

  MatrixArgs ma;
  auto* matrix = app.add_subcommand("matrix", "Print the transition matrix of P^k(O(d))");
  matrix->add_option("--side", ma.side, "left|right")->required();
  matrix->add_option("--k", ma.k, "jet order k >= 0")->required();
  matrix->add_option("--d", ma.d, "twist d")->required();
  matrix->add_flag("--json", ma.json, "emit JSON");

  SplitArgs sa;
  auto* split = app.add_subcommand("split", "Compute the splitting type and compare with the closed form");
  split->add_option("--side", sa.side, "left|right")->required();
  split->add_option("--k", sa.k, "jet order k >= 0")->required();
  split->add_option("--d", sa.d, "twist d")->required();
  split->add_option("--method", sa.method, "h0|birkhoff|both");
  split->add_flag("--witness", sa.witness, "print the Birkhoff factors U, D, V");
  split->add_flag("--json", sa.json, "emit JSON");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run every check over a (N, k, d, side) grid");
  verify->add_option("--kmax", va.opts.kmax, "largest jet order (>= 1)");
  verify->add_option("--dmin", va.opts.dmin, "smallest twist");
  verify->add_option("--dmax", va.opts.dmax, "largest twist");
  verify->add_option("--Nmax", va.opts.Nmax, "largest projective dimension (>= 1)");
  verify->add_option("--threads", va.opts.threads, "worker threads (default: JETS_THREADS or all cores)");
  verify->add_flag("--json", va.json, "emit JSON");

  FiberArgs fa;
  auto* fiber = app.add_subcommand("fiber", "Compare the predicted jet fiber with the torus-weight oracle");
  fiber->add_option("--N", fa.N, "projective dimension");
  fiber->add_option("--side", fa.side, "left|right")->required();
  fiber->add_option("--k", fa.k, "jet order")->required();
  fiber->add_option("--d", fa.d, "twist")->required();
  fiber->add_flag("--json", fa.json, "emit JSON");

  CohomologyArgs ca;
  auto* coh = app.add_subcommand("cohomology", "Cohomology dimensions of O(d) or I^{k+1}(d)");
  coh->add_option("--N", ca.N, "projective dimension");
  coh->add_option("--sheaf", ca.sheaf, "\"O(d)\" or \"I^{k+1}(d)\"")->required();
  coh->add_flag("--json", ca.json, "emit JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*matrix) return cmd_matrix(ma, out);
    if (*split) return cmd_split(sa, out);
    if (*verify) return cmd_verify(va, out);
    if (*fiber) return cmd_fiber(fa, out);
    if (*coh) return cmd_cohomology(ca, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedCase& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kMismatch;
  }
  return kUsage;
}

}  // namespace jets::cli
