#include "nradius/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "nradius/error.hpp"

namespace nradius {

namespace {

constexpr double kHermitianTolerance = 1e-8;
constexpr double kJacobiThreshold = 1e-13;
constexpr double kPsdErrorThreshold = 1e-8;

ComplexMatrix checked_symmetrize(const ComplexMatrix& m) {
  const double defect = hermitian_defect(m);
  if (defect > kHermitianTolerance * (1.0 + frobenius_norm(m))) {
    throw NotHermitian("matrix is not Hermitian (||M - M*||_F = " + std::to_string(defect) + ")");
  }
  ComplexMatrix h = symmetrize(m);
  for (std::size_t i = 0; i < h.dim(); ++i) h(i, i) = h(i, i).real();
  return h;
}

double off_diagonal_mass(const ComplexMatrix& m) {
  double s = 0.0;
  const std::size_t n = m.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * std::norm(m(i, j));
  return std::sqrt(s);
}

// Annihilates m(p, q) with the unitary G = diag(1, e^{-i phi}) R, where
// m(p, q) = |m(p, q)| e^{i phi} and R is the real rotation that
// diagonalises the resulting real symmetric 2x2 block.
void jacobi_rotate(ComplexMatrix& m, ComplexMatrix* v, std::size_t p, std::size_t q) {
  const cplx apq = m(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const cplx phase = apq / mag; // e^{i phi}
  const double app = m(p, p).real();
  const double aqq = m(q, q).real();

  const double theta = (aqq - app) / (2.0 * mag);
  const double t = std::abs(theta) > 1e150
                       ? 0.5 / theta
                       : (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const std::size_t n = m.dim();
  const cplx sp = s * std::conj(phase); // s e^{-i phi}
  const cplx cp = c * std::conj(phase); // c e^{-i phi}

  // Columns: M <- M G.
  for (std::size_t k = 0; k < n; ++k) {
    const cplx mkp = m(k, p);
    const cplx mkq = m(k, q);
    m(k, p) = c * mkp - sp * mkq;
    m(k, q) = s * mkp + cp * mkq;
  }
  // Rows: M <- G* M.
  for (std::size_t k = 0; k < n; ++k) {
    const cplx mpk = m(p, k);
    const cplx mqk = m(q, k);
    m(p, k) = c * mpk - std::conj(sp) * mqk;
    m(q, k) = s * mpk + std::conj(cp) * mqk;
  }
  m(p, q) = 0.0;
  m(q, p) = 0.0;
  m(p, p) = app - t * mag;
  m(q, q) = aqq + t * mag;

  if (v != nullptr) {
    for (std::size_t k = 0; k < n; ++k) {
      const cplx vkp = (*v)(k, p);
      const cplx vkq = (*v)(k, q);
      (*v)(k, p) = c * vkp - sp * vkq;
      (*v)(k, q) = s * vkp + cp * vkq;
    }
  }
}

// Diagonalises h in place; accumulates eigenvectors into v when given.
void jacobi_diagonalise(ComplexMatrix& h, ComplexMatrix* v) {
  const std::size_t n = h.dim();
  const double scale = frobenius_norm(h);
  if (n < 2 || scale == 0.0) return;
  const double target = kJacobiThreshold * scale;
  const std::size_t budget = 100 * n;
  for (std::size_t sweep = 0; sweep < budget; ++sweep) {
    if (off_diagonal_mass(h) <= target) return;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(h, v, p, q);
  }
  if (off_diagonal_mass(h) <= target) return;
  throw NoConvergence("Jacobi eigensolver exceeded " + std::to_string(budget) + " sweeps");
}

} // namespace

HermitianEig hermitian_eig(const ComplexMatrix& m) {
  ComplexMatrix h = checked_symmetrize(m);
  const std::size_t n = h.dim();
  ComplexMatrix v = ComplexMatrix::identity(n);
  jacobi_diagonalise(h, &v);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return h(a, a).real() < h(b, b).real(); });

  HermitianEig out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = h(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  ComplexMatrix h = checked_symmetrize(m);
  jacobi_diagonalise(h, nullptr);
  std::vector<double> values(h.dim());
  for (std::size_t k = 0; k < h.dim(); ++k) values[k] = h(k, k).real();
  std::sort(values.begin(), values.end());
  return values;
}

ExtremeEigenvalues hermitian_extremes_fast(const ComplexMatrix& h) {
  const auto n = static_cast<Eigen::Index>(h.dim());
  if (n == 1) {
    const double v = h(0, 0).real();
    return {v, v};
  }
  using RowMajor = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const Eigen::Map<const RowMajor> view(h.data(), n, n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(Eigen::MatrixXcd(view),
                                                         Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NoConvergence("tridiagonal QR failed to converge");
  }
  return {solver.eigenvalues()(0), solver.eigenvalues()(n - 1)};
}

bool fast_eigenvalue_self_test() {
  // Deterministic family: Hermitian matrices with entries from a fixed
  // trigonometric pattern, dims 1..12, plus a few degenerate spectra.
  std::vector<ComplexMatrix> family;
  for (std::size_t n = 1; n <= 12; ++n) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m(i, j) = cplx(std::sin(1.0 + 3.0 * i + 7.0 * j), std::cos(2.0 + 5.0 * i * j));
    family.push_back(symmetrize(m));
  }
  family.push_back(ComplexMatrix::identity(4));
  family.push_back(ComplexMatrix::from_rows({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}}));
  family.push_back(ComplexMatrix(5));

  for (const auto& m : family) {
    const auto exact = hermitian_eigenvalues(m);
    const auto fast = hermitian_extremes_fast(m);
    const double scale = 1.0 + std::max(std::abs(exact.front()), std::abs(exact.back()));
    if (std::abs(exact.front() - fast.min) > 1e-10 * scale) return false;
    if (std::abs(exact.back() - fast.max) > 1e-10 * scale) return false;
  }
  return true;
}

double lambda_max(const ComplexMatrix& h) {
  if (h.dim() == 0) return 0.0;
  return hermitian_eigenvalues(h).back();
}

namespace {

ComplexMatrix spectral_function(const HermitianEig& eig, const std::vector<double>& f_values) {
  const std::size_t n = eig.vectors.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      cplx s{};
      for (std::size_t k = 0; k < n; ++k) {
        s += eig.vectors(i, k) * f_values[k] * std::conj(eig.vectors(j, k));
      }
      out(i, j) = s;
      out(j, i) = std::conj(s);
    }
    out(i, i) = out(i, i).real();
  }
  return out;
}

double spectral_scale(const std::vector<double>& values) {
  if (values.empty()) return 0.0;
  return std::max(std::abs(values.front()), std::abs(values.back()));
}

} // namespace

ComplexMatrix psd_sqrt(const ComplexMatrix& p) {
  const HermitianEig eig = hermitian_eig(p);
  const double scale = spectral_scale(eig.values);
  std::vector<double> roots(eig.values.size());
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const double lam = eig.values[k];
    if (lam < -kPsdErrorThreshold * scale) {
      throw NotPSD("psd_sqrt: eigenvalue " + std::to_string(lam) + " is negative");
    }
    roots[k] = lam > 0.0 ? std::sqrt(lam) : 0.0;
  }
  return spectral_function(eig, roots);
}

void require_psd(const ComplexMatrix& p, const char* what) {
  const auto values = hermitian_eigenvalues(p);
  if (!values.empty() && values.front() < -kPsdErrorThreshold * spectral_scale(values)) {
    throw NotPSD(std::string(what) + ": operand is not positive semidefinite (min eigenvalue " +
                 std::to_string(values.front()) + ")");
  }
}

bool is_psd(const ComplexMatrix& p) {
  if (hermitian_defect(p) > kHermitianTolerance * (1.0 + frobenius_norm(p))) return false;
  const auto values = hermitian_eigenvalues(p);
  return values.empty() || values.front() >= -kPsdErrorThreshold * spectral_scale(values);
}

ComplexMatrix matrix_abs(const ComplexMatrix& a) { return psd_sqrt(gram(a)); }

double op_norm(const ComplexMatrix& a) {
  if (a.dim() == 0) return 0.0;
  const double top = hermitian_eigenvalues(gram(a)).back();
  return top > 0.0 ? std::sqrt(top) : 0.0;
}

double spectral_radius_psd_product(const ComplexMatrix& p, const ComplexMatrix& q) {
  require_same_dim(p, q, "spectral_radius_psd_product");
  require_psd(p, "spectral_radius_psd_product");
  const ComplexMatrix root_q = psd_sqrt(q);
  const double top = lambda_max(root_q * p * root_q);
  return std::max(top, 0.0);
}

double inequality_slack(double lhs, double rhs, double tol) {
  return tol * (1.0 + std::max(std::abs(lhs), std::abs(rhs)));
}

bool holds(double lhs, double rhs, double tol) { return lhs <= rhs + inequality_slack(lhs, rhs, tol); }

bool nearly_equal(double lhs, double rhs, double tol) {
  return std::abs(lhs - rhs) <= inequality_slack(lhs, rhs, tol);
}

} // namespace nradius
