#include "cubewall/cli.hpp"

#include <string>

#include <CLI11.hpp>

#include "cubewall/action.hpp"
#include "cubewall/closedform.hpp"
#include "cubewall/engine.hpp"
#include "cubewall/errors.hpp"
#include "cubewall/serialize.hpp"
#include "cubewall/verify.hpp"

namespace cubewall {

namespace {

void require_rank(int r) {
  if (r < 1) throw InputError("rank must be at least 1, got " + std::to_string(r));
}

int cmd_poincare(int r, const std::string& format, std::ostream& out) {
  require_rank(r);
  if (r > kMaxMatrixRank)
    throw CapabilityError("poincare is capped at rank " + std::to_string(kMaxMatrixRank));
  const auto rec = make_record(r);
  if (format == "json") {
    out << canonical_json(to_json(rec));
  } else if (format == "csv") {
    out << "r,dim,euler";
    for (std::size_t k = 0; k < rec.poincare.size(); ++k) out << ",b" << 2 * k;
    out << '\n' << rec.r << ',' << rec.dim << ',' << rec.euler;
    for (const auto& b : rec.poincare.coeffs()) out << ',' << b;
    out << '\n';
  } else {
    out << rec.poincare.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_trace(int r, const std::string& path_kind, std::uint64_t seed, std::ostream& out) {
  require_rank(r);
  if (r > kMaxTraceRank) throw CapabilityError("trace is capped at rank " + std::to_string(kMaxTraceRank));
  const auto a = SignMatrix::canonical(r);
  const auto path = path_kind == "random" ? PathSampler(seed).next(r) : canonical_path(r);
  const auto poincare = walk<Polynomial>(a, path, poincare_invariant());
  const auto euler = walk<BigInt>(a, path, euler_invariant());
  auto doc = trace_json(r, poincare, euler);
  doc["path"] = path_kind;
  if (path_kind == "random") doc["seed"] = std::to_string(seed);
  out << canonical_json(doc);
  return kExitOk;
}

int cmd_xray(int r, bool faces_only, std::ostream& out) {
  require_rank(r);
  if (faces_only && r > kMaxTraceRank)
    throw CapabilityError("xray --faces-only is capped at rank " + std::to_string(kMaxTraceRank));
  if (!faces_only && r > kMaxStrataRank)
    throw CapabilityError("xray is capped at rank " + std::to_string(kMaxStrataRank) +
                          "; use --faces-only for ranks up to " + std::to_string(kMaxTraceRank));
  out << canonical_json(xray_json(r, faces_only));
  return kExitOk;
}

int cmd_cbf(long long b, long long f, std::ostream& out) {
  if (b < 0 || f < 0) throw InputError("b and f must be nonnegative");
  const auto ub = static_cast<std::size_t>(b);
  const auto uf = static_cast<std::size_t>(f);
  out << poincare_crossing(ub, uf).to_string() << " ; euler: " << euler_crossing(ub, uf) << '\n';
  return kExitOk;
}

void print_report(const Report& report, std::ostream& out) {
  for (const auto& c : report.checks) {
    out << (c.passed ? "[PASS] " : "[FAIL] ") << c.id << ' ' << c.name << '\n';
    for (const auto& d : c.details) out << "       " << d << '\n';
  }
  out << "overall: " << (report.passed() ? "PASS" : "FAIL") << '\n';
}

int cmd_verify(const VerifyOptions& opts, const std::string& table_path, const std::string& format,
               std::ostream& out) {
  const auto table = load_paper_table(table_path);
  const auto report = check_all(opts, table);
  if (format == "json") {
    out << canonical_json(to_json(report));
  } else {
    print_report(report, out);
  }
  return report.passed() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wall-crossing invariants of torus quotients of projective space"};
  app.require_subcommand(1);

  int r = 0;
  std::string format = "text";
  auto* poincare = app.add_subcommand("poincare", "Poincare polynomial, Betti numbers, Euler characteristic");
  poincare->add_option("-r,--rank", r, "torus rank")->required();
  poincare->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));

  std::string path_kind = "canonical";
  std::uint64_t seed = 0;
  auto* trace = app.add_subcommand("trace", "JSON trace of the wall-by-wall recursion");
  trace->add_option("-r,--rank", r, "torus rank")->required();
  trace->add_option("--path", path_kind, "ascending face chain")->check(CLI::IsMember({"canonical", "random"}));
  trace->add_option("--seed", seed, "seed for --path random");

  bool faces_only = false;
  std::string emit = "json";
  auto* xray = app.add_subcommand("xray", "faces, strata, isotropy weights and GKM diagnostics as JSON");
  xray->add_option("-r,--rank", r, "torus rank")->required();
  xray->add_option("--emit", emit, "output format")->check(CLI::IsMember({"json"}));
  xray->add_flag("--faces-only", faces_only, "emit only the cube face lattice");

  long long b = 0, f = 0;
  auto* cbf = app.add_subcommand("cbf", "wall-crossing function C(b,f) and its Euler value");
  cbf->add_option("--b", b, "weights pointing backward")->required();
  cbf->add_option("--f", f, "weights pointing forward")->required();

  VerifyOptions vopts;
  std::string table_path = "data/paper_table.json";
  std::string vformat = "text";
  auto* verify = app.add_subcommand("verify", "run every consistency check; exit 0 iff all pass");
  verify->add_option("--max-r", vopts.r_max, "largest rank to check");
  verify->add_option("--trials", vopts.trials, "random paths per rank");
  verify->add_option("--seed", vopts.seed, "path sampler seed");
  verify->add_option("--table", table_path, "Betti table JSON");
  verify->add_option("--format", vformat, "report format")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*poincare) return cmd_poincare(r, format, out);
    if (*trace) return cmd_trace(r, path_kind, seed, out);
    if (*xray) return cmd_xray(r, faces_only, out);
    if (*cbf) return cmd_cbf(b, f, out);
    if (*verify) return cmd_verify(vopts, table_path, vformat, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapabilityError& e) {
    err << "capability: " << e.what() << '\n';
    return kExitCapability;
  }
  return kExitUsage;
}

}  // namespace cubewall
