// edf: edit distance functions of hereditary graph properties.
//
// Subcommands: curve, gk, pcore, hom, admissible, eigs, pathg, simulate,
// verify. Exit status 0 on success, 1 on verification failure, 2 on usage
// errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "edf/curves.hpp"
#include "edf/editor.hpp"
#include "edf/hom.hpp"
#include "edf/simplex_qp.hpp"
#include "edf/spectral.hpp"
#include "edf/verify.hpp"

namespace {

// numbers are serialized with 15 significant digits everywhere
std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

std::string fmt_array(const std::vector<double>& xs) {
  std::string out = "[";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += fmt(xs[i]);
  }
  return out + "]";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

edf::Crg resolve_crg(const std::string& spec) {
  try {
    return edf::parse_crg_token(spec);
  } catch (const std::invalid_argument&) {
  }
  return edf::parse_crg_spec(read_file(spec));
}

edf::SmallGraph resolve_graph(const std::string& spec) {
  try {
    return edf::parse_graph_token(spec);
  } catch (const std::invalid_argument&) {
  }
  return edf::read_graph_text(read_file(spec));
}

// stdout unless --out was given
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::invalid_argument("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct CurveArgs {
  std::string property;
  double pmin = 0.0, pmax = 1.0;
  int steps = 101;
  std::string out;
};

int run_curve(const CurveArgs& args) {
  if (!(args.pmin >= 0 && args.pmax <= 1 && args.pmin <= args.pmax))
    throw std::invalid_argument("curve: need 0 <= pmin <= pmax <= 1");
  if (args.steps < 1) throw std::invalid_argument("curve: steps must be >= 1");
  edf::Property prop = edf::parse_property(args.property);
  Output output(args.out);
  output.stream() << "p,ed,piece\n";
  for (int i = 0; i < args.steps; ++i) {
    double p = args.steps == 1
                   ? args.pmin
                   : args.pmin + (args.pmax - args.pmin) * i / (args.steps - 1);
    output.stream() << fmt(p) << "," << fmt(edf::ed_closed(prop, p)) << ","
                    << edf::ed_piece_name(prop, p) << "\n";
  }
  return 0;
}

struct GkArgs {
  std::string crg;
  double p = 0.5;
  bool json = false;
  std::string out;
};

int run_gk(const GkArgs& args) {
  edf::Crg K = resolve_crg(args.crg);
  edf::WeightSolution sol = edf::g_value(K, args.p);
  Output output(args.out);
  if (args.json) {
    std::string support = "[";
    for (size_t i = 0; i < sol.support.size(); ++i) {
      if (i) support += ",";
      support += std::to_string(sol.support[i]);
    }
    support += "]";
    output.stream() << "{\"g\":" << fmt(sol.g) << ",\"x\":" << fmt_array(sol.x)
                    << ",\"support\":" << support << ",\"kkt_residual\":" << fmt(sol.kkt_residual)
                    << "}\n";
  } else {
    output.stream() << "g = " << fmt(sol.g) << "\n";
    output.stream() << "x = " << fmt_array(sol.x) << "\n";
    std::string support;
    for (size_t i = 0; i < sol.support.size(); ++i)
      support += (i ? "," : "") + std::to_string(sol.support[i]);
    output.stream() << "support = [" << support << "]\n";
    output.stream() << "kkt_residual = " << fmt(sol.kkt_residual) << "\n";
  }
  return 0;
}

int run_pcore(const std::string& crg, double p) {
  std::cout << (edf::is_p_core(resolve_crg(crg), p) ? "true" : "false") << "\n";
  return 0;
}

int run_hom(const std::string& graph, const std::string& crg) {
  std::cout << (edf::exists_hom(resolve_graph(graph), resolve_crg(crg)) ? "true" : "false")
            << "\n";
  return 0;
}

int run_admissible(const std::string& crg, const std::string& family) {
  edf::Crg K = resolve_crg(crg);
  edf::ForbiddenFamily fam = [&] {
    if (family == "word") return edf::ForbiddenFamily::word();
    if (family == "comp") return edf::ForbiddenFamily::comp();
    if (family.rfind("kword:", 0) == 0) return edf::ForbiddenFamily::kword(std::stoi(family.substr(6)));
    throw std::invalid_argument("admissible: family must be word, kword:<k> or comp");
  }();
  edf::AdmissibilityReport report = edf::admissible(K, fam);
  std::string witnesses = "[";
  for (size_t i = 0; i < report.witness_names.size(); ++i) {
    if (i) witnesses += ",";
    witnesses += "\"" + report.witness_names[i] + "\"";
  }
  witnesses += "]";
  std::cout << "{\"overall\":" << (report.admissible ? "true" : "false")
            << ",\"witnesses\":" << witnesses << ",\"truncation_bound\":" << report.truncation_bound
            << "}\n";
  return 0;
}

struct EigsArgs {
  int k = 2;
  double p = 0.6;
  std::string out;
};

int run_eigs(const EigsArgs& args) {
  if (!(args.p >= 0 && args.p < 1)) throw std::invalid_argument("eigs: need p in [0,1)");
  double P = (2 * args.p - 1) / (1 - args.p);
  Output output(args.out);
  output.stream() << "a,lambda,wdot1\n";
  auto eigs = edf::toeplitz_eigs(args.k, P);
  for (size_t a = 0; a < eigs.size(); ++a)
    output.stream() << a + 1 << "," << fmt(eigs[a].lambda) << "," << fmt(eigs[a].wdot1) << "\n";
  return 0;
}

int run_pathg(int k, double p) {
  double g = edf::path_g(k, p);
  std::cout << "{\"k\":" << k << ",\"p\":" << fmt(p) << ",\"g\":" << fmt(g)
            << ",\"weights\":" << fmt_array(edf::path_weights(k, p)) << "}\n";
  return 0;
}

struct SimulateArgs {
  std::string property;
  int n = 400;
  std::vector<double> ps;
  int trials = 20;
  uint64_t seed = 7;
  std::string out;
};

int run_simulate(const SimulateArgs& args) {
  edf::Property prop = edf::parse_property(args.property);
  auto points = edf::estimate_curve(prop, args.n, args.ps, args.trials, args.seed);
  Output output(args.out);
  output.stream() << "p,mean_fraction,closed_form,trials,n\n";
  for (const auto& pt : points)
    output.stream() << fmt(pt.p) << "," << fmt(pt.mean_fraction) << "," << fmt(pt.closed_form)
                    << "," << args.trials << "," << args.n << "\n";
  return 0;
}

int run_verify(const std::string& suite) {
  edf::VerificationReport report = edf::verify::run_suite(suite);
  std::cout.precision(15);
  edf::print_report(report, std::cout);
  return report.overall() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edit distance functions of hereditary graph properties"};
  app.require_subcommand(1);

  CurveArgs curve;
  auto* curve_cmd = app.add_subcommand("curve", "closed-form curve as CSV (p,ed,piece)");
  curve_cmd->add_option("--property", curve.property, "word|kword|comp")->required();
  curve_cmd->add_option("--pmin", curve.pmin, "grid start (default 0)");
  curve_cmd->add_option("--pmax", curve.pmax, "grid end (default 1)");
  curve_cmd->add_option("--steps", curve.steps, "number of grid points")->required();
  curve_cmd->add_option("--out", curve.out, "output path (default stdout)");

  GkArgs gk;
  auto* gk_cmd = app.add_subcommand("gk", "g_K(p) with the optimal weights");
  gk_cmd->add_option("--crg", gk.crg, "CRG: Krs:r,s | Path:k | Cycle:k or a spec file")->required();
  gk_cmd->add_option("--p", gk.p, "edge density")->required();
  gk_cmd->add_flag("--json", gk.json, "emit JSON");
  gk_cmd->add_option("--out", gk.out, "output path (default stdout)");

  std::string pcore_crg;
  double pcore_p = 0.5;
  auto* pcore_cmd = app.add_subcommand("pcore", "p-core test for a CRG");
  pcore_cmd->add_option("--crg", pcore_crg, "CRG token or spec file")->required();
  pcore_cmd->add_option("--p", pcore_p, "edge density")->required();

  std::string hom_graph, hom_crg;
  auto* hom_cmd = app.add_subcommand("hom", "colored homomorphism test graph -> CRG");
  hom_cmd->add_option("--graph", hom_graph, "graph name or file")->required();
  hom_cmd->add_option("--crg", hom_crg, "CRG token or spec file")->required();

  std::string adm_crg, adm_family;
  auto* adm_cmd = app.add_subcommand("admissible", "forbidden-family admissibility as JSON");
  adm_cmd->add_option("--crg", adm_crg, "CRG token or spec file")->required();
  adm_cmd->add_option("--family", adm_family, "word | kword:<k> | comp")->required();

  EigsArgs eigs;
  auto* eigs_cmd = app.add_subcommand("eigs", "tridiagonal Toeplitz eigensystem as CSV");
  eigs_cmd->add_option("--k", eigs.k, "matrix size")->required();
  eigs_cmd->add_option("--p", eigs.p, "edge density; P = (2p-1)/(1-p)")->required();
  eigs_cmd->add_option("--out", eigs.out, "output path (default stdout)");

  int pathg_k = 2;
  double pathg_p = 0.6;
  auto* pathg_cmd = app.add_subcommand("pathg", "path-CRG closed form as JSON");
  pathg_cmd->add_option("--k", pathg_k, "path length")->required();
  pathg_cmd->add_option("--p", pathg_p, "edge density")->required();

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo editing runs as CSV");
  sim_cmd->add_option("--property", sim.property, "word|comp")->required();
  sim_cmd->add_option("--n", sim.n, "graph size (default 400)");
  sim_cmd->add_option("--p", sim.ps, "edge density (repeatable)")->required();
  sim_cmd->add_option("--trials", sim.trials, "trials per density (default 20)");
  sim_cmd->add_option("--seed", sim.seed, "stream seed (default 7)");
  sim_cmd->add_option("--out", sim.out, "output path (default stdout)");

  std::string verify_suite;
  auto* verify_cmd = app.add_subcommand("verify", "run a reproduction suite");
  verify_cmd
      ->add_option("--suite", verify_suite, "appendix-b|transitions|embeddings|envelope|simulate")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n\n" << app.help() << "\n";
    return 2;
  }

  try {
    if (*curve_cmd) return run_curve(curve);
    if (*gk_cmd) return run_gk(gk);
    if (*pcore_cmd) return run_pcore(pcore_crg, pcore_p);
    if (*hom_cmd) return run_hom(hom_graph, hom_crg);
    if (*adm_cmd) return run_admissible(adm_crg, adm_family);
    if (*eigs_cmd) return run_eigs(eigs);
    if (*pathg_cmd) return run_pathg(pathg_k, pathg_p);
    if (*sim_cmd) return run_simulate(sim);
    if (*verify_cmd) return run_verify(verify_suite);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
