#include <doctest.h>

#include <cmath>

#include "nradius/error.hpp"
#include "nradius/spectral.hpp"
#include "oracles.hpp"

using namespace nradius;

namespace {

double residual(const ComplexMatrix& m, const HermitianEig& eig, std::size_t k) {
  const std::size_t n = m.dim();
  CVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = eig.vectors(i, k);
  const CVector mv = nradius::apply(m, v);
  double r = 0.0;
  for (std::size_t i = 0; i < n; ++i) r += std::norm(mv[i] - eig.values[k] * v[i]);
  return std::sqrt(r);
}

} // namespace

TEST_CASE("hermitian_eig on small examples") {
  auto e = hermitian_eig(ComplexMatrix::diagonal({3.0, 1.0}));
  CHECK(e.values[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(e.values[1] == doctest::Approx(3.0).epsilon(1e-15));
  e = hermitian_eig(ComplexMatrix::from_rows({{0, 1}, {1, 0}}));
  CHECK(e.values[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(e.values[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("hermitian_eig residuals, unitarity, and agreement with Eigen") {
  oracle::Rng rng(5);
  for (std::size_t n : {1u, 2u, 4u, 7u, 12u}) {
    for (int t = 0; t < 10; ++t) {
      const ComplexMatrix m = rng.hermitian(n);
      const HermitianEig eig = hermitian_eig(m);
      const double scale = 1.0 + oracle::op_norm(m);
      for (std::size_t k = 0; k < n; ++k) CHECK(residual(m, eig, k) <= 1e-10 * scale);
      for (std::size_t k = 1; k < n; ++k) CHECK(eig.values[k - 1] <= eig.values[k]);
      const Eigen::MatrixXcd v = oracle::to_eigen(eig.vectors);
      CHECK((v.adjoint() * v - Eigen::MatrixXcd::Identity(v.rows(), v.cols())).norm() <= 1e-10);

      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ref(oracle::to_eigen(m), Eigen::EigenvaluesOnly);
      for (std::size_t k = 0; k < n; ++k) {
        CHECK(std::abs(eig.values[k] - ref.eigenvalues()(static_cast<Eigen::Index>(k))) <= 1e-12 * scale);
      }
    }
  }
}

TEST_CASE("hermitian_eig handles degenerate spectra") {
  const HermitianEig e = hermitian_eig(ComplexMatrix::identity(4));
  for (double v : e.values) CHECK(v == 1.0);
  const ComplexMatrix zero(3);
  CHECK(hermitian_eig(zero).values == std::vector<double>{0.0, 0.0, 0.0});
}

TEST_CASE("hermitian_eig rejects non-Hermitian input and is deterministic") {
  CHECK_THROWS_AS(hermitian_eig(ComplexMatrix::from_rows({{0, 1}, {0, 0}})), NotHermitian);
  oracle::Rng rng(9);
  const ComplexMatrix m = rng.hermitian(6);
  const HermitianEig a = hermitian_eig(m);
  const HermitianEig b = hermitian_eig(m);
  CHECK(a.values == b.values);
  CHECK(a.vectors == b.vectors);
}

TEST_CASE("fast eigenvalue path agrees with Jacobi") {
  CHECK(fast_eigenvalue_self_test());
  oracle::Rng rng(21);
  for (int t = 0; t < 50; ++t) {
    const ComplexMatrix m = rng.hermitian(1 + t % 9);
    const auto fast = hermitian_extremes_fast(m);
    const auto slow = hermitian_eigenvalues(m);
    const double scale = 1.0 + oracle::op_norm(m);
    CHECK(std::abs(fast.min - slow.front()) <= 1e-10 * scale);
    CHECK(std::abs(fast.max - slow.back()) <= 1e-10 * scale);
  }
}

TEST_CASE("matrix_abs examples and square-back") {
  CHECK(max_abs_entry(matrix_abs(ComplexMatrix::from_rows({{0, 1}, {0, 0}})) - ComplexMatrix::diagonal({0.0, 1.0})) <=
        1e-15);
  oracle::Rng rng(2);
  const ComplexMatrix p = rng.psd(4);
  CHECK(max_abs_entry(matrix_abs(p) - p) <= 1e-12 * (1.0 + max_abs_entry(p)));
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix a = rng.ginibre(4);
    const ComplexMatrix m = matrix_abs(a);
    CHECK(max_abs_entry(m * m - gram(a)) <= 1e-9 * (1.0 + max_abs_entry(gram(a))));
    CHECK(std::abs(op_norm(m) - op_norm(a)) <= 1e-9 * op_norm(a));
  }
}

TEST_CASE("psd_sqrt examples, square-back, clamping and NotPSD") {
  CHECK(max_abs_entry(psd_sqrt(ComplexMatrix::diagonal({4.0, 9.0})) - ComplexMatrix::diagonal({2.0, 3.0})) <= 1e-15);
  CHECK(max_abs_entry(psd_sqrt(ComplexMatrix(3))) == 0.0);
  oracle::Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix p = rng.psd(5);
    const ComplexMatrix r = psd_sqrt(p);
    CHECK(max_abs_entry(r * r - p) <= 1e-9 * (1.0 + max_abs_entry(p)));
    CHECK(hermitian_defect(r) <= 1e-12);
  }
  // Rank-deficient products land slightly below zero numerically.
  const ComplexMatrix low = rng.psd_rank(5, 2);
  CHECK(is_psd(low));
  CHECK_NOTHROW(psd_sqrt(low));
  CHECK_THROWS_AS(psd_sqrt(ComplexMatrix::diagonal({1.0, -0.5})), NotPSD);
  CHECK_FALSE(is_psd(ComplexMatrix::diagonal({1.0, -0.5})));
}

TEST_CASE("op_norm examples and oracles") {
  CHECK(op_norm(ComplexMatrix::diagonal({4.0, 0.0}) + ComplexMatrix::diagonal({1.0, 2.0})) ==
        doctest::Approx(5.0).epsilon(1e-15));
  const ComplexMatrix u = ComplexMatrix::from_rows({{0, cplx(0, 1)}, {1, 0}});
  CHECK(op_norm(u) == doctest::Approx(1.0).epsilon(1e-15));

  oracle::Rng rng(8);
  for (int t = 0; t < 5; ++t) {
    const ComplexMatrix a = rng.ginibre(3);
    const double norm = op_norm(a);
    double sampled = 0.0;
    for (int k = 0; k < 10000; ++k) sampled = std::max(sampled, nradius::norm(nradius::apply(a, rng.unit_vector(3))));
    CHECK(sampled <= norm + 1e-12);
    // Attained at the top right singular vector.
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(oracle::to_eigen(a), Eigen::ComputeFullV);
    CVector top(3);
    for (std::size_t i = 0; i < 3; ++i) top[i] = svd.matrixV()(static_cast<Eigen::Index>(i), 0);
    CHECK(std::abs(nradius::norm(nradius::apply(a, top)) - norm) <= 1e-12 * norm);
    CHECK(std::abs(norm - oracle::op_norm(a)) <= 1e-12 * norm);
  }
}

TEST_CASE("spectral_radius_psd_product examples and the root identity") {
  CHECK(spectral_radius_psd_product(ComplexMatrix::diagonal({1.0, 4.0}), ComplexMatrix::diagonal({9.0, 1.0})) ==
        doctest::Approx(9.0).epsilon(1e-14));
  CHECK(spectral_radius_psd_product(ComplexMatrix(2), ComplexMatrix::diagonal({9.0, 1.0})) == 0.0);
  oracle::Rng rng(13);
  for (int t = 0; t < 30; ++t) {
    const ComplexMatrix p = rng.psd(4);
    const ComplexMatrix q = rng.psd(4);
    const double r = spectral_radius_psd_product(p, q);
    const Eigen::MatrixXcd root = oracle::psd_sqrt(oracle::to_eigen(p)) * oracle::psd_sqrt(oracle::to_eigen(q));
    const double identity = std::pow(Eigen::JacobiSVD<Eigen::MatrixXcd>(root).singularValues()(0), 2);
    CHECK(std::abs(r - identity) <= 1e-9 * identity);
    CHECK(std::abs(r - spectral_radius_psd_product(q, p)) <= 1e-9 * r);
    CHECK(std::abs(r - oracle::spectral_radius(p * q)) <= 1e-9 * r);
  }
  CHECK_THROWS_AS(spectral_radius_psd_product(ComplexMatrix::diagonal({-1.0, 1.0}), ComplexMatrix::identity(2)),
                  NotPSD);
}

TEST_CASE("real and imaginary parts are norm-dominated") {
  oracle::Rng rng(17);
  for (int t = 0; t < 50; ++t) {
    const ComplexMatrix a = rng.ginibre(1 + t % 5);
    CHECK(op_norm(real_part(a)) <= op_norm(a) + 1e-10);
    CHECK(op_norm(imag_part(a)) <= op_norm(a) + 1e-10);
  }
}

TEST_CASE("tolerance policy") {
  CHECK(holds(1.0, 1.0));
  CHECK(holds(1.0 + 1e-9, 1.0));
  CHECK_FALSE(holds(1.0 + 3e-9, 1.0));
  CHECK(holds(1e6 + 1e-4, 1e6));
  CHECK(nearly_equal(2.0, 2.0 + 2e-9));
  CHECK_FALSE(nearly_equal(2.0, 2.0 + 1e-8));
}
