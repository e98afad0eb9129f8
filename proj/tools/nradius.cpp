// nradius: numerical radius workbench.
//
//   nradius radius <file> [--tol t]
//   nradius bounds <B> <C> [--A file --D file] [--alpha a1,a2,...] [--prop33] [--tol t]
//   nradius verify --ensemble kind --dim n --trials t --seed s [--checks list|all]
//                  [--out path] [--format json|csv] [--scale s] [--tol t]
//   nradius lemmas [--trials t] [--seed s] [--dim n]
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 numerical failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nradius/blockops.hpp"
#include "nradius/bounds.hpp"
#include "nradius/error.hpp"
#include "nradius/lemmas.hpp"
#include "nradius/matrix_json.hpp"
#include "nradius/numradius.hpp"
#include "nradius/spectral.hpp"
#include "nradius/suite.hpp"

namespace {

using namespace nradius;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

std::string num(double x) { return format_number(x); }

void require_tol(double tol) {
  if (!(tol > 0.0)) throw UsageError("--tol must be positive");
}

int cmd_radius(const std::string& path, double tol) {
  require_tol(tol);
  const ComplexMatrix a = read_matrix_file(path);
  const RadiusCertificate c = numerical_radius(a, tol);
  std::cout << "estimate          " << num(c.estimate) << '\n'
            << "lower_witness     " << num(c.lower_witness) << '\n'
            << "upper_certificate " << num(c.upper_certificate) << '\n'
            << "width             " << num(c.width()) << '\n'
            << "theta_star        " << num(c.theta_star) << '\n'
            << "evaluations       " << c.evaluations << '\n'
            << "witness_vector   ";
  for (const cplx& z : c.witness_vector) std::cout << " [" << num(z.real()) << ',' << num(z.imag()) << ']';
  std::cout << '\n';
  return kExitOk;
}

struct BoundsRow {
  BoundReport report;
  double power; // w^exponent of the matching operator
};

// Prints one bound against the power of w it controls; returns false when
// the claimed direction is violated beyond the tolerance policy.
bool print_row(const BoundsRow& row, double tol) {
  const BoundReport& r = row.report;
  const bool ok = r.kind == BoundKind::Upper ? holds(row.power, r.value, tol) : holds(r.value, row.power, tol);
  const double gap = r.kind == BoundKind::Upper ? r.value - row.power : row.power - r.value;
  std::string name = r.name;
  if (r.alpha) name += "[alpha=" + num(*r.alpha) + "]";
  std::printf("%-26s %-5s %d  %-20s %-20s %-20s %s\n", name.c_str(), to_string(r.kind), r.exponent,
              num(r.value).c_str(), num(row.power).c_str(), num(gap).c_str(), ok ? "ok" : "VIOLATED");
  return ok;
}

int cmd_bounds(const std::string& b_path, const std::string& c_path, const std::string& a_path,
               const std::string& d_path, std::vector<double> alphas, bool prop33, double tol) {
  require_tol(tol);
  if (a_path.empty() != d_path.empty()) throw UsageError("--A and --D must be given together");
  if (alphas.empty()) alphas.assign(kDefaultAlphas.begin(), kDefaultAlphas.end());
  for (double alpha : alphas) require_alpha(alpha);

  const ComplexMatrix b = read_matrix_file(b_path);
  const ComplexMatrix c = read_matrix_file(c_path);
  require_same_dim(b, c, "bounds");
  RadiusEvaluator w(tol / 10.0);

  const RadiusCertificate& cert = w.certify(make_offdiag(b, c).assembled);
  const double ws = cert.estimate;
  std::cout << "w([[0,B],[C,0]]) = " << num(ws) << "  enclosure [" << num(cert.lower_witness) << ", "
            << num(cert.upper_certificate) << "]\n\n";
  std::printf("%-26s %-5s %s  %-20s %-20s %-20s %s\n", "bound", "kind", "p", "value", "w^p", "gap", "status");

  std::vector<BoundsRow> rows{
      {bound_th1_upper(b, c), ws},
      {bound_th1eqn_upper(b, c), ws},
      {bound_th5_lower(b, c), ws},
      {bound_th2_upper_sq(b, c, w), ws * ws},
      {bound_th6_lower_sq(b, c), ws * ws},
      {bound_th3_lower_sq(b, c), ws * ws},
      {bound_th4_lower_sq(b, c), ws * ws},
  };
  for (double alpha : alphas) rows.push_back({bound_th7_upper_4(b, c, alpha, w), std::pow(ws, 4)});

  bool ok = true;
  for (const auto& row : rows) ok = print_row(row, tol) && ok;

  const BoundChain th3 = bound_th3_chain(b, c);
  const BoundChain th4 = bound_th4_chain(b, c);
  for (const auto& [name, chain] : {std::pair{"th3_chain", th3}, std::pair{"th4_chain", th4}}) {
    const bool chain_ok = holds(chain.second, chain.first, tol);
    std::printf("%-26s first %-20s second %-20s %s\n", name, num(chain.first).c_str(), num(chain.second).c_str(),
                chain_ok ? "ok" : "VIOLATED");
    ok = ok && chain_ok;
  }

  if (!a_path.empty()) {
    const ComplexMatrix a = read_matrix_file(a_path);
    const ComplexMatrix d = read_matrix_file(d_path);
    require_same_dim(a, b, "bounds --A");
    require_same_dim(d, b, "bounds --D");
    const double wt = w(make_full(a, b, c, d).assembled);
    std::cout << "\nw([[A,B],[C,D]]) = " << num(wt) << '\n';
    for (double alpha : alphas) {
      const BoundReport th25 = bound_th25_upper_4(a, b, c, d, alpha, w);
      const BoundReport bk21 = bound_bk21_upper_4(a, b, c, d, alpha, w);
      ok = print_row({th25, std::pow(wt, 4)}, tol) && ok;
      ok = print_row({bk21, std::pow(wt, 4)}, tol) && ok;
      if (!holds(th25.value, bk21.value, tol)) {
        std::cout << "th25 exceeds bk21 at alpha=" << num(alpha) << "  VIOLATED\n";
        ok = false;
      }
    }
  }

  if (prop33) {
    const BoundReport p = bound_prop33(b, c, w);
    const double sum = p.components.at("norm_b_plus_c");
    const double diff = p.components.at("norm_b_minus_c");
    std::cout << "\nprop33 value          " << num(p.value) << '\n'
              << "sqrt(prop33)          " << num(std::sqrt(p.value)) << '\n'
              << "max ||B+-C||          " << num(std::max(sum, diff)) << '\n';
    ok = holds(std::max(sum * sum, diff * diff), p.value, tol) && ok;
    if (is_psd(b) && is_psd(c)) {
      std::cout << "kittaneh2002          " << num(kittaneh2002_bound(b, c)) << '\n';
    } else {
      std::cout << "kittaneh2002          n/a (operands not positive semidefinite)\n";
    }
  }

  if (!ok) std::cout << "\nviolated bound detected\n";
  return ok ? kExitOk : kExitFailed;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int cmd_verify(const std::string& ensemble, std::size_t dim, std::size_t trials, std::uint64_t seed,
               const std::string& checks, const std::string& out_path, const std::string& format, double scale,
               double tol) {
  require_tol(tol);
  if (format != "csv" && format != "json") throw UsageError("--format must be json or csv");
  EnsembleSpec spec{parse_ensemble_kind(ensemble), dim, trials, seed, scale};
  validate(spec);
  const SuiteResult result = run_suite({spec}, split_list(checks), SuiteOptions{tol, tol / 10.0});

  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + out_path + "'");
    if (format == "csv") {
      write_csv(out, result.records);
    } else {
      write_json(out, result);
    }
  }

  std::printf("%-24s %-8s %7s %8s %20s %20s\n", "check", "records", "failures", "argmin", "min_gap", "mean_gap");
  for (const auto& s : result.summaries) {
    std::printf("%-24s %-8zu %7zu %8zu %20s %20s\n", s.check.c_str(), s.records, s.failures, s.argmin_sample,
                num(s.min_gap).c_str(), num(s.mean_gap).c_str());
  }
  const std::size_t failures = result.failures();
  if (failures > 0) {
    std::cout << failures << " failing record(s); reproduce with --seed " << seed << " and the sample index\n";
    for (const auto& r : result.records) {
      if (!r.passed) {
        std::cout << "  " << r.check_name << " sample " << r.sample_index << " lhs " << num(r.lhs) << " rhs "
                  << num(r.rhs) << " gap " << num(r.gap) << '\n';
      }
    }
    return kExitFailed;
  }
  return kExitOk;
}

int cmd_lemmas(std::size_t trials, std::uint64_t seed, std::size_t dim) {
  const auto results = run_lemmas(LemmaOptions{trials, seed, dim});
  bool ok = true;
  for (const auto& r : results) {
    std::printf("%-14s claims %-8zu failures %-6zu min_gap %-20s %s\n", r.name.c_str(), r.claims, r.failures,
                num(r.min_gap).c_str(), r.failures == 0 ? "pass" : "FAIL");
    ok = ok && r.failures == 0;
  }
  return ok ? kExitOk : kExitFailed;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical radius workbench for 2x2 operator matrices"};
  app.require_subcommand(1);

  double tol = 1e-9;

  std::string radius_path;
  auto* radius = app.add_subcommand("radius", "Certified numerical radius of a matrix file");
  radius->add_option("file", radius_path, "Matrix JSON file")->required();
  radius->add_option("--tol", tol, "Enclosure width");

  std::string b_path, c_path, a_path, d_path;
  std::vector<double> alphas;
  bool prop33 = false;
  auto* bounds = app.add_subcommand("bounds", "Evaluate every bound on [[0,B],[C,0]] (and [[A,B],[C,D]])");
  bounds->add_option("B", b_path, "Matrix JSON file for B")->required();
  bounds->add_option("C", c_path, "Matrix JSON file for C")->required();
  bounds->add_option("--A", a_path, "Matrix JSON file for A");
  bounds->add_option("--D", d_path, "Matrix JSON file for D");
  bounds->add_option("--alpha", alphas, "Comma-separated alpha values in [0,1]")->delimiter(',');
  bounds->add_flag("--prop33", prop33, "Also evaluate the self-adjoint sum bounds");
  bounds->add_option("--tol", tol, "Inequality tolerance");

  std::string ensemble, checks = "all", out_path, format = "csv";
  std::size_t dim = 0, trials = 0;
  std::uint64_t seed = 0;
  double scale = 1.0;
  auto* verify = app.add_subcommand("verify", "Run inequality checks over a random ensemble");
  verify->add_option("--ensemble", ensemble, "ginibre|hermitian|psd|nilpotent2|normal|diagonal|unitary")->required();
  verify->add_option("--dim", dim, "Operand dimension")->required();
  verify->add_option("--trials", trials, "Number of samples")->required();
  verify->add_option("--seed", seed, "Seed")->required();
  verify->add_option("--checks", checks, "Comma-separated check names or 'all'");
  verify->add_option("--out", out_path, "Report path");
  verify->add_option("--format", format, "json|csv");
  verify->add_option("--scale", scale, "Entry standard deviation");
  verify->add_option("--tol", tol, "Inequality tolerance");

  std::size_t lemma_trials = 10000, lemma_dim = 3;
  std::uint64_t lemma_seed = 1;
  auto* lemmas = app.add_subcommand("lemmas", "Random-instance checks of the supporting lemmas");
  lemmas->add_option("--trials", lemma_trials, "Instances per family");
  lemmas->add_option("--seed", lemma_seed, "Seed");
  lemmas->add_option("--dim", lemma_dim, "Dimension");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (radius->parsed()) return cmd_radius(radius_path, tol);
    if (bounds->parsed()) return cmd_bounds(b_path, c_path, a_path, d_path, alphas, prop33, tol);
    if (verify->parsed()) return cmd_verify(ensemble, dim, trials, seed, checks, out_path, format, scale, tol);
    if (lemmas->parsed()) return cmd_lemmas(lemma_trials, lemma_seed, lemma_dim);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}
