#pragma once

#include <vector>

#include "nradius/matrix.hpp"

namespace nradius {

/// Eigen-decomposition of a Hermitian matrix: values ascending, eigenvectors
/// in the columns of `vectors` (a unitary matrix).
struct HermitianEig {
  std::vector<double> values;
  ComplexMatrix vectors;
};

/// Cyclic complex Jacobi.
///
/// The input is symmetrized as (M + M*)/2 first; inputs further than
/// 1e-8 * (1 + ||M||_F) from Hermitian raise NotHermitian. Sweeps stop once
/// the off-diagonal Frobenius mass drops below 1e-13 * ||M||_F; more than
/// 100 * dim sweeps raises NoConvergence. Output is a pure function of the
/// input bytes.
HermitianEig hermitian_eig(const ComplexMatrix& m);

/// Same contract as hermitian_eig, values only.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// Extreme eigenvalues of an exactly Hermitian matrix through Eigen's
/// tridiagonal QR. Used on the hot path of the numerical-radius scan; no
/// symmetrization or validation is performed.
struct ExtremeEigenvalues {
  double min;
  double max;
};
ExtremeEigenvalues hermitian_extremes_fast(const ComplexMatrix& h);

/// Runs both eigenvalue paths on a fixed family of matrices and reports
/// whether they agree to 1e-10 (relative to 1 + ||M||).
bool fast_eigenvalue_self_test();

/// |A| = (A*A)^{1/2}.
ComplexMatrix matrix_abs(const ComplexMatrix& a);

/// Hermitian PSD square root. Eigenvalues in [-1e-8 ||P||, 0) are clamped
/// to zero, anything lower raises NotPSD.
ComplexMatrix psd_sqrt(const ComplexMatrix& p);

/// Throws NotPSD unless p is numerically positive semidefinite.
void require_psd(const ComplexMatrix& p, const char* what);
bool is_psd(const ComplexMatrix& p);

/// Largest singular value, sqrt(lambda_max(A*A)).
double op_norm(const ComplexMatrix& a);

/// Largest eigenvalue of a Hermitian matrix.
double lambda_max(const ComplexMatrix& h);

/// r(PQ) for PSD P, Q, computed as lambda_max(Q^{1/2} P Q^{1/2}).
double spectral_radius_psd_product(const ComplexMatrix& p, const ComplexMatrix& q);

// Library-wide tolerance policy: lhs <= rhs "holds" iff
// lhs <= rhs + 1e-9 * (1 + max(|lhs|, |rhs|)).
inline constexpr double kInequalityTolerance = 1e-9;

double inequality_slack(double lhs, double rhs, double tol = kInequalityTolerance);
bool holds(double lhs, double rhs, double tol = kInequalityTolerance);
bool nearly_equal(double lhs, double rhs, double tol = kInequalityTolerance);

} // namespace nradius
