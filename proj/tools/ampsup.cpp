#include <fstream>
#include <iostream>
#include <sstream>

#include <boost/version.hpp>
#include <omp.h>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace ampsup;
using namespace ampsup::cli;

namespace {

constexpr const char* kVersion = "0.1.0";

Point parse_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw InputError("expected a point as x,y but got '" + text + "'");
  Point p;
  try {
    p.x = std::stod(text.substr(0, comma));
    p.y = std::stod(text.substr(comma + 1));
  } catch (const std::exception&) {
    throw InputError("cannot parse point '" + text + "'");
  }
  if (!(p.y > 0)) throw InputError("point '" + text + "' is not in the upper half-plane");
  return p;
}

int exit_code(const std::exception& e) {
  if (dynamic_cast<const ConfigError*>(&e)) return 2;
  if (dynamic_cast<const VerificationError*>(&e)) return 3;
  if (dynamic_cast<const ResourceError*>(&e)) return 4;
  if (dynamic_cast<const PrecisionError*>(&e)) return 5;
  if (dynamic_cast<const NumericalError*>(&e)) return 5;
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sup-norm amplification toolkit for quaternion-algebra Fuchsian groups"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  Args a;
  std::string precision = "double";
  std::string z_text = "0,1", w_text;
  app.add_option("--config", g.config_path, "Algebra/order JSON (default: built-in (-1,3) order)");
  app.add_option("--threads", g.threads, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
  app.add_option("--precision", precision, "double or extended")->check(CLI::IsMember({"double", "extended"}));
  app.add_option("--budget-elements", g.budget_elements, "Enumeration budget");
  app.add_option("--seed", g.seed, "Seed for randomized sampling");
  app.add_option("--out", g.out, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Verify the configured order");
  auto* en = app.add_subcommand("enum", "Enumerate norm-n elements in a hyperbolic ball");
  en->add_option("--n", a.n)->required();
  en->add_option("--z", z_text, "x,y");
  en->add_option("--w", w_text, "x,y (default z)");
  en->add_option("--cap", a.cap, "cosh of the radius");
  auto* cos = app.add_subcommand("cosets", "Coset representatives Gamma \\ Gamma(n)");
  cos->add_option("--n", a.n)->required();
  auto* cnt = app.add_subcommand("count", "Counting function S(z; rho)");
  cnt->add_option("--n", a.n)->required();
  cnt->add_option("--z", z_text, "x,y");
  cnt->add_option("--rho", a.rho);
  auto* ker = app.add_subcommand("kernel", "Truncated Bergman kernel at (z, w)");
  ker->add_option("--z", z_text, "x,y");
  ker->add_option("--w", w_text, "x,y (default z)");
  ker->add_option("--k", a.k)->required();
  ker->add_option("--cap", a.cap);
  ker->add_option("--tol", a.tol, "Fail when the tail estimate exceeds this");
  ker->add_flag("--psl", a.psl, "Halve the matrix-count sum");
  auto* grid = app.add_subcommand("kernel-grid", "Diagonal kernel on a grid");
  grid->add_option("--box", a.box, "x0 x1 y0 y1")->expected(4)->delimiter(',');
  grid->add_option("--grid", a.grid, "nx ny")->expected(2)->delimiter(',');
  grid->add_option("--k", a.k)->required();
  grid->add_option("--cap", a.cap);
  grid->add_option("--tol", a.tol);
  grid->add_flag("--psl", a.psl);
  auto* hk = app.add_subcommand("hecke-kernel", "Hecke-translated kernel magnitude");
  hk->add_option("--n", a.n)->required();
  hk->add_option("--k", a.k)->required();
  hk->add_option("--z", z_text, "x,y");
  hk->add_option("--cap", a.cap);
  hk->add_option("--tol", a.tol);
  auto* iw = app.add_subcommand("iw-sar", "Small-ball / remainder split for n <= nmax");
  iw->add_option("--nmax", a.n_max);
  iw->add_option("--k", a.k)->required();
  iw->add_option("--z", z_text, "x,y");
  iw->add_option("--cap", a.cap);
  auto* bnd = app.add_subcommand("bound", "Two-term bound at (k, N)");
  bnd->add_option("--k", a.k)->required();
  bnd->add_option("--N", a.N, "Default: balanced choice and grid minimum");
  bnd->add_option("--eps", a.eps);
  bnd->add_flag("--alt-exponent", a.alt_exponent, "Use N^{13/2} in the second term");
  auto* cur = app.add_subcommand("curve", "Bound curve and fitted exponent");
  cur->add_option("--kmin", a.kmin);
  cur->add_option("--kmax", a.kmax);
  cur->add_option("--samples", a.samples);
  cur->add_option("--eps", a.eps);
  cur->add_flag("--no-term2", a.no_term2, "Term1-only ablation");
  cur->add_flag("--alt-exponent", a.alt_exponent);
  auto* ct = app.add_subcommand("check-tail", "Tail integral against its n^{13/4} majorant");
  ct->add_option("--nmax", a.n_max);
  ct->add_option("--k", a.ks, "comma-separated weights");
  ct->add_option("--eps", a.eps);
  auto* ca = app.add_subcommand("check-amplified", "Amplified inequality desk check");
  ca->add_option("--k", a.k)->required();
  ca->add_option("--N", a.N)->required();
  ca->add_option("--z", z_text, "x,y");
  ca->add_option("--cap", a.cap);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  const auto* sub = app.get_subcommands().front();
  nlohmann::json manifest;
  manifest["command"] = sub->get_name();
  manifest["version"] = kVersion;
  manifest["boost_version"] = BOOST_LIB_VERSION;
  manifest["compiler"] = __VERSION__;
  manifest["threads"] = g.threads;
  manifest["precision"] = precision;
  manifest["budget_elements"] = g.budget_elements;
  manifest["seed"] = g.seed;
  manifest["config_path"] = g.config_path;

  int status = 0;
  std::ostringstream body;
  try {
    g.precision = precision == "extended" ? Precision::extended : Precision::double_;
    if (g.threads > 0) omp_set_num_threads(g.threads);
    a.z = parse_point(z_text);
    if (!w_text.empty()) a.w = parse_point(w_text);
    const auto cfg = g.config_path.empty() ? quaternion::MaximalOrderConfig::default_instance()
                                           : quaternion::load_config(g.config_path);
    manifest["config_hash"] = config_hash(cfg);

    Summary summary;
    if (sub == verify) summary = cmd_verify(g, cfg, body, status);
    else if (sub == en) summary = cmd_enum(g, cfg, a, body);
    else if (sub == cos) summary = cmd_cosets(g, cfg, a, body);
    else if (sub == cnt) summary = cmd_count(g, cfg, a, body);
    else if (sub == ker) summary = cmd_kernel(g, cfg, a, body);
    else if (sub == grid) summary = cmd_kernel_grid(g, cfg, a, body);
    else if (sub == hk) summary = cmd_hecke_kernel(g, cfg, a, body);
    else if (sub == iw) summary = cmd_iw_sar(g, cfg, a, body);
    else if (sub == bnd) summary = cmd_bound(g, a, body);
    else if (sub == cur) summary = cmd_curve(g, a, body);
    else if (sub == ct) summary = cmd_check_tail(g, a, body);
    else if (sub == ca) summary = cmd_check_amplified(g, cfg, a, body);
    manifest["summary"] = summary;
    if (sub == cur) std::cerr << "fitted slope " << fmt(summary["slope"].get<double>()) << "\n";
  } catch (const std::exception& e) {
    status = exit_code(e);
    manifest["error"] = e.what();
    std::cerr << "error: " << e.what() << "\n";
  }
  manifest["exit_status"] = status;

  if (g.out.empty()) {
    std::cout << body.str();
    std::cerr << manifest.dump() << "\n";
  } else {
    std::ofstream(g.out) << body.str();
    std::ofstream(g.out + ".manifest.json") << manifest.dump(2) << "\n";
  }
  return status;
}
