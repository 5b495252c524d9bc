#include "tropfrac/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "tropfrac/io.hpp"
#include "tropfrac/solver.hpp"

namespace tropfrac {

namespace {

constexpr const char* kHeader = "# tropfrac 0.1.0";

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text)) throw InputError("cannot write " + path);
}

std::string joined(const Vector& x) {
  std::string s;
  for (std::size_t k = 0; k < x.size(); ++k) s += (k ? " " : "") + format(x[k]);
  return s;
}

std::string one_based(const std::vector<std::size_t>& s) {
  std::string t;
  for (std::size_t k = 0; k < s.size(); ++k) t += (k ? " " : "") + std::to_string(s[k] + 1);
  return t;
}

int cmd_solve(const std::string& path, const std::string& method, const std::string& lambda0,
              const std::string& cert_out, bool trace_phi, std::ostream& out) {
  InstanceDocument doc = parse_instance(slurp(path));
  HomogeneousInstance H = doc.homogeneous();
  SolveOptions opt;
  opt.trace_phi = trace_phi;
  if (!lambda0.empty()) {
    try {
      opt.lambda0 = parse_rational(lambda0);
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("--lambda0: ") + e.what());
    }
  }
  SolveOutcome r = solve(H, parse_method(method), opt);

  out << kHeader << "\n";
  out << "method " << method << "\n";
  for (std::size_t k = 0; k < r.trace.size(); ++k) {
    const TraceEntry& e = r.trace[k];
    out << "iter " << k << " lambda " << to_string(e.lambda);
    if (e.phi) out << " phi " << to_string(*e.phi);
    if (e.nonneg) out << " sign " << (*e.nonneg ? ">=0" : "<0");
    if (e.least) out << " least " << joined(*e.least);
    out << "\n";
  }

  CertificateDocument cert;
  int code = 0;
  switch (r.status) {
    case Status::optimal: {
      out << "optimal " << to_string(*r.lambda) << "\n";
      if (doc.maximize) out << "maximum " << to_string(Rational(-*r.lambda)) << "\n";
      Vector x = *r.witness;
      if (!doc.homogeneous_form) x.pop_back();  // y_{n+1} = 0
      out << "witness " << joined(x) << "\n";
      cert.opt = *r.optimality;
      break;
    }
    case Status::unbounded:
      out << (doc.maximize ? "unbounded (maximum +inf)" : "unbounded (minimum -inf)") << ": " << r.reason << "\n";
      cert.optimality = false;
      cert.unb = *r.unboundedness;
      code = 3;
      break;
    default:
      out << "infeasible: " << r.reason << "\n";
      code = 2;
  }
  if (!cert_out.empty()) {
    if (r.status == Status::infeasible)
      out << "no certificate written for an infeasible instance\n";
    else
      spit(cert_out, serialize_certificate(cert));
  }
  return code;
}

int cmd_spectral(const std::string& path, const std::string& out_path, const std::string& samples_path,
                 std::size_t grid_cap, std::size_t samples, std::ostream& out) {
  InstanceDocument doc = parse_instance(slurp(path));
  HomogeneousInstance H = doc.homogeneous();
  if (!H.v_has_finite()) throw InputError("objective denominator qx v s is -inf everywhere; phi is undefined");
  std::vector<SpectralPiece> pieces;
  try {
    pieces = reconstruct(H, grid_cap);
  } catch (const GridTooLarge& e) {
    throw InputError(std::string(e.what()) + " (use --grid-cap)");
  }
  const Rational s(H.scale);
  auto bound = [&](const ExtendedNumber& x) { return x.is_finite() ? format(ExtendedNumber(Rational(x.value() / s))) : format(x); };
  std::ostringstream table;
  table << "lo,hi,alpha,beta,k\n";
  for (const auto& p : pieces)
    table << bound(p.lo) << "," << bound(p.hi) << "," << to_string(Rational(p.alpha / s)) << "," << p.beta << ","
          << p.k << "\n";

  if (out_path.empty())
    out << table.str();
  else
    spit(out_path, table.str());

  if (!samples_path.empty()) {
    auto [lo, hi] = initial_bounds(H);
    lo = (lo - 1) / s;
    hi = (hi + 1) / s;
    std::ostringstream sm;
    sm << "lambda,phi\n";
    const std::size_t count = std::max<std::size_t>(samples, 2);
    for (std::size_t k = 0; k < count; ++k) {
      Rational step(static_cast<long>(k), static_cast<long>(count - 1));
      step.canonicalize();
      Rational x = lo + (hi - lo) * step;
      Rational xs = x * s;
      for (const auto& p : pieces) {
        if ((p.lo.is_finite() && xs < p.lo.value()) || (p.hi.is_finite() && xs > p.hi.value())) continue;
        sm << to_string(x) << "," << to_string(Rational(p.at(xs) / s)) << "\n";
        break;
      }
    }
    spit(samples_path, sm.str());
  }
  return 0;
}

int cmd_check(const std::string& path, const std::string& cert_path, std::ostream& out) {
  InstanceDocument doc = parse_instance(slurp(path));
  HomogeneousInstance H = doc.homogeneous();
  CertificateDocument cert = parse_certificate(slurp(cert_path));
  CheckResult r = cert.optimality ? check_optimality(H, cert.opt) : check_unboundedness(H, cert.unb);
  if (r.accepted) {
    out << "accept\n";
    return 0;
  }
  out << "reject (" << r.condition << "): " << r.reason << "\n";
  return 4;
}

int cmd_game_value(const std::string& path, const std::string& lambda, std::size_t node, std::ostream& out) {
  InstanceDocument doc = parse_instance(slurp(path));
  HomogeneousInstance H = doc.homogeneous();
  Rational lam;
  try {
    lam = parse_rational(lambda);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("--lambda: ") + e.what());
  }
  const std::size_t n1 = H.C.cols();
  if (node == 0) node = n1;
  if (node > n1) throw InputError("--node " + std::to_string(node) + " is outside 1.." + std::to_string(n1));
  const Rational s(H.scale);
  Rational chi = game_value(game_at(H, lam * s), node - 1) / s;
  out << to_string(chi) << "\n";
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tropical linear-fractional programming", "tropfrac"};
  app.require_subcommand(1);

  std::string instance, method = "newton", lambda0, cert_out, out_path, samples_path, cert_path, lambda;
  bool trace_phi = false;
  std::size_t grid_cap = 1000000, samples = 101, node = 0;

  auto* solve_cmd = app.add_subcommand("solve", "solve an instance and print lambda*, witness and trace");
  solve_cmd->add_option("instance", instance, "instance JSON")->required();
  solve_cmd->add_option("--method", method, "newton | bisection | negative-newton")
      ->check(CLI::IsMember({"newton", "bisection", "negative-newton"}));
  solve_cmd->add_option("--lambda0", lambda0, "feasible start for positive Newton");
  solve_cmd->add_option("--cert-out", cert_out, "write the certificate here");
  solve_cmd->add_flag("--trace-phi", trace_phi, "print exact phi at every iterate");

  auto* spectral_cmd = app.add_subcommand("spectral", "linear pieces of the spectral function");
  spectral_cmd->add_option("instance", instance, "instance JSON")->required();
  spectral_cmd->add_option("--out", out_path, "CSV of pieces lo,hi,alpha,beta,k (stdout if absent)");
  spectral_cmd->add_option("--samples-out", samples_path, "CSV of sampled lambda,phi");
  spectral_cmd->add_option("--samples", samples, "number of samples");
  spectral_cmd->add_option("--grid-cap", grid_cap, "largest evaluation grid");

  auto* check_cmd = app.add_subcommand("check", "validate a certificate");
  check_cmd->add_option("instance", instance, "instance JSON")->required();
  check_cmd->add_option("certificate", cert_path, "certificate JSON")->required();

  auto* gv_cmd = app.add_subcommand("game-value", "exact value chi_j of the game at lambda");
  gv_cmd->add_option("instance", instance, "instance JSON")->required();
  gv_cmd->add_option("--lambda", lambda, "parameter value")->required();
  gv_cmd->add_option("--node", node, "Min node, 1-based (default n+1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }

  try {
    if (*solve_cmd) return cmd_solve(instance, method, lambda0, cert_out, trace_phi, out);
    if (*spectral_cmd) return cmd_spectral(instance, out_path, samples_path, grid_cap, samples, out);
    if (*check_cmd) return cmd_check(instance, cert_path, out);
    return cmd_game_value(instance, lambda, node, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const AssumptionViolated& e) {
    err << "invalid instance: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  }
  return 1;
}

}  // namespace tropfrac
