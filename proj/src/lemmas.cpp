#include "nradius/lemmas.hpp"

#include <algorithm>
#include <cmath>

#include "nradius/bounds.hpp"
#include "nradius/ensemble.hpp"
#include "nradius/error.hpp"

namespace nradius {

namespace {

constexpr double kIdentityTolerance = 1e-12;

class Tally {
public:
  Tally(std::string name, double tol) : tol_(tol) { result_.name = std::move(name); }

  void upper(double lhs, double rhs) { record(rhs - lhs, lhs, rhs, tol_); }
  void equal(double lhs, double rhs, double tol) { record(-std::abs(lhs - rhs), lhs, rhs, tol); }

  LemmaFamilyResult finish() {
    if (result_.claims == 0) result_.min_gap = 0.0;
    return result_;
  }

private:
  void record(double gap, double lhs, double rhs, double tol) {
    result_.min_gap = result_.claims == 0 ? gap : std::min(result_.min_gap, gap);
    ++result_.claims;
    if (gap < -inequality_slack(lhs, rhs, tol)) ++result_.failures;
  }

  double tol_;
  LemmaFamilyResult result_;
};

CVector unit(CVector v) {
  const double len = norm(v);
  for (auto& z : v) z /= len;
  return v;
}

// <P^r x, x> for Hermitian P via its eigendecomposition.
double power_form(const HermitianEig& eig, const CVector& x, int r) {
  const std::size_t n = x.size();
  double total = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    cplx proj = 0.0;
    for (std::size_t i = 0; i < n; ++i) proj += std::conj(eig.vectors(i, k)) * x[i];
    total += std::pow(std::max(eig.values[k], 0.0), r) * std::norm(proj);
  }
  return total;
}

// Unit e in span{x, y} attaining equality in Buzano's inequality.
CVector buzano_extremal(const CVector& x, const CVector& y) {
  const cplx xy = inner(x, y);
  const cplx phase = std::abs(xy) > 0.0 ? xy / std::abs(xy) : cplx(1.0);
  const double nx = norm(x);
  const double ny = norm(y);
  CVector e(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) e[i] = x[i] / nx + phase * y[i] / ny;
  if (norm(e) == 0.0) return unit(x);
  return unit(e);
}

} // namespace

std::vector<LemmaFamilyResult> run_lemmas(const LemmaOptions& options) {
  if (options.trials < 1 || options.dim < 1) throw UsageError("lemmas: trials and dim must be >= 1");
  const EnsembleSpec ginibre{EnsembleKind::Ginibre, options.dim, options.trials, options.seed, 1.0};
  const EnsembleSpec psd{EnsembleKind::PSD, options.dim, options.trials, options.seed, 1.0};

  Tally schwarz("mixed_schwarz", options.tol);
  Tally buzano("buzano", options.tol);
  Tally lem5("lem5", options.tol);
  Tally power("power", options.tol);
  Tally kittaneh("kittaneh_sum", options.tol);
  Tally lem4("lem4", options.tol);

  for (std::size_t i = 0; i < options.trials; ++i) {
    const CVector x = gaussian_vector(ginibre, i, 0);
    const CVector y = gaussian_vector(ginibre, i, 1);
    // Half the instances use the extremal direction so near-equality is hit.
    const CVector e = i % 2 == 0 ? unit(gaussian_vector(ginibre, i, 2)) : buzano_extremal(x, y);

    {
      const ComplexMatrix a = sample(ginibre, i, 0);
      const double lhs = std::abs(quadratic_form(a, x));
      const double p = quadratic_form(matrix_abs(a), x).real();
      const double q = quadratic_form(matrix_abs(adjoint(a)), x).real();
      schwarz.upper(lhs, std::sqrt(std::max(p, 0.0) * std::max(q, 0.0)));
    }

    const double nx = norm(x);
    const double ny = norm(y);
    const double xy = std::abs(inner(x, y));
    const double lhs_b = std::abs(inner(x, e) * inner(e, y));
    buzano.upper(lhs_b, 0.5 * (nx * ny + xy));

    const double squared_buzano = 0.25 * (nx * ny + xy) * (nx * ny + xy);
    for (double alpha : kDefaultAlphas) {
      const double rhs = (1.0 + alpha) / 4.0 * nx * nx * ny * ny + (1.0 - alpha) / 4.0 * xy * xy +
                         0.5 * nx * ny * xy;
      lem5.upper(lhs_b * lhs_b, rhs);
      if (alpha == 0.0) lem5.equal(rhs, squared_buzano, kIdentityTolerance);
    }

    {
      const ComplexMatrix p = sample(psd, i, 0);
      const HermitianEig eig = hermitian_eig(p);
      const CVector u = unit(x);
      const double form = quadratic_form(p, u).real();
      power.equal(form, power_form(eig, u, 1), kIdentityTolerance);
      power.upper(form * form, power_form(eig, u, 2));
      power.upper(std::pow(form, 4), power_form(eig, u, 4));
    }

    {
      const ComplexMatrix p = sample(psd, i, 0);
      const ComplexMatrix q = sample(psd, i, 1);
      const double rhs = std::max(op_norm(p), op_norm(q)) + op_norm(psd_sqrt(p) * psd_sqrt(q));
      kittaneh.upper(op_norm(p + q), rhs);
    }

    {
      const ComplexMatrix a = sample(ginibre, i, 0);
      const ComplexMatrix b = sample(ginibre, i, 1);
      const double s = op_norm(a + b);
      const double rhs = 2.0 * std::max(lambda_max(gram(a) + gram(b)), lambda_max(cogram(a) + cogram(b)));
      lem4.upper(s * s, rhs);
    }
  }

  return {schwarz.finish(), buzano.finish(), lem5.finish(), power.finish(), kittaneh.finish(), lem4.finish()};
}

} // namespace nradius
