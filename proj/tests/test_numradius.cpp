#include <doctest.h>

#include <cmath>
#include <numbers>

#include "nradius/error.hpp"
#include "nradius/numradius.hpp"
#include "nradius/spectral.hpp"
#include "oracles.hpp"

using namespace nradius;

namespace {

void check_certificate(const ComplexMatrix& a, const RadiusCertificate& c, double tol) {
  CHECK(c.lower_witness <= c.estimate);
  CHECK(c.estimate <= c.upper_certificate);
  CHECK(c.width() <= tol);
  CHECK(c.theta_star >= 0.0);
  CHECK(c.theta_star < 2.0 * std::numbers::pi);
  CHECK(std::abs(norm(c.witness_vector) - 1.0) <= 1e-12);
  CHECK(std::abs(std::abs(quadratic_form(a, c.witness_vector)) - c.lower_witness) <= 1e-12);
}

} // namespace

TEST_CASE("numerical radius examples") {
  const ComplexMatrix nil = ComplexMatrix::from_rows({{0, 1}, {0, 0}});
  auto c = numerical_radius(nil, 1e-10);
  CHECK(std::abs(c.estimate - 0.5) <= 1e-10);
  check_certificate(nil, c, 1e-10);

  const ComplexMatrix herm = ComplexMatrix::diagonal({-3.0, 2.0});
  c = numerical_radius(herm, 1e-10);
  CHECK(std::abs(c.estimate - 3.0) <= 1e-10);
  check_certificate(herm, c, 1e-10);

  const ComplexMatrix skew = ComplexMatrix::from_rows({{0, 2}, {1, 0}});
  c = numerical_radius(skew, 1e-10);
  CHECK(std::abs(c.estimate - 1.5) <= 1e-10);
  CHECK(std::abs(oracle::brute_numerical_radius(skew, 1000000) - 1.5) <= 1e-10);
  check_certificate(skew, c, 1e-10);

  c = numerical_radius(ComplexMatrix(3), 1e-10);
  CHECK(c.estimate == 0.0);
  CHECK(c.upper_certificate <= 1e-10);
}

TEST_CASE("numerical radius matches a brute-force rotation scan") {
  oracle::Rng rng(31);
  for (std::size_t n : {1u, 2u, 3u, 5u}) {
    for (int t = 0; t < 5; ++t) {
      const ComplexMatrix a = rng.ginibre(n);
      const RadiusCertificate c = numerical_radius(a, 1e-10);
      check_certificate(a, c, 1e-10);
      const double brute = oracle::brute_numerical_radius(a, 20000);
      CHECK(std::abs(c.estimate - brute) <= 1e-9);
      // The brute scan is a valid lower bound, so it can never exceed the certificate.
      CHECK(brute <= c.upper_certificate + 1e-12);
    }
  }
}

TEST_CASE("numerical radius on structured inputs") {
  oracle::Rng rng(37);
  // Normal: w = ||A||.
  const ComplexMatrix d = ComplexMatrix::diagonal({cplx(1, 2), cplx(-3, 0.5), cplx(0, -1)});
  CHECK(std::abs(numerical_radius(d, 1e-10).estimate - oracle::op_norm(d)) <= 1e-10);
  // Square-zero: w = ||A|| / 2.
  ComplexMatrix nil(4);
  nil(0, 2) = cplx(1, 1);
  nil(0, 3) = 2.0;
  nil(1, 3) = cplx(0, -1);
  CHECK(std::abs(numerical_radius(nil, 1e-10).estimate - 0.5 * oracle::op_norm(nil)) <= 1e-10);
  // Large scale.
  const ComplexMatrix big = cplx(1e6) * rng.ginibre(3);
  const RadiusCertificate c = numerical_radius(big, 1e-3);
  check_certificate(big, c, 1e-3);
}

TEST_CASE("sandwich, spectral radius, adjoint and phase invariance") {
  oracle::Rng rng(41);
  const double tol = 1e-10;
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix a = rng.ginibre(1 + t % 5);
    const double w = numerical_radius(a, tol).estimate;
    const double norm = op_norm(a);
    CHECK(holds(0.5 * norm, w));
    CHECK(holds(w, norm));
    CHECK(holds(spectral_radius_general(a), w));
    CHECK(std::abs(numerical_radius(adjoint(a), tol).estimate - w) <= 2 * tol);
    const ComplexMatrix rotated = std::polar(1.0, 0.3 + t) * a;
    CHECK(std::abs(numerical_radius(rotated, tol).estimate - w) <= 2 * tol);
  }
}

TEST_CASE("certificates are nested under refinement") {
  oracle::Rng rng(43);
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix a = rng.ginibre(4);
    const RadiusCertificate coarse = numerical_radius(a, 1e-4);
    const RadiusCertificate fine = numerical_radius(a, 1e-11);
    CHECK(coarse.width() <= 1e-4);
    CHECK(fine.estimate >= coarse.lower_witness - 1e-14);
    CHECK(fine.estimate <= coarse.upper_certificate + 1e-14);
  }
}

TEST_CASE("unreachable tolerances are reported") {
  const ComplexMatrix a = ComplexMatrix::from_rows({{1, 2}, {3, 4}});
  CHECK_THROWS_AS(numerical_radius(a, 0.0), ToleranceUnreachable);
  CHECK_THROWS_AS(numerical_radius(a, -1.0), ToleranceUnreachable);
  CHECK_THROWS_AS(numerical_radius(a, 1e-17), ToleranceUnreachable);
}

TEST_CASE("vector oracle") {
  const ComplexMatrix nil = ComplexMatrix::from_rows({{0, 1}, {0, 0}});
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    const double v = numerical_radius_vector_oracle(nil, 4, seed);
    CHECK(v >= 0.5 - 1e-6);
    CHECK(v <= 0.5 + 1e-15);
  }
  CHECK(numerical_radius_vector_oracle(ComplexMatrix(3), 2, 1) == 0.0);
  CHECK_THROWS_AS(numerical_radius_vector_oracle(nil, 0, 1), UsageError);

  oracle::Rng rng(47);
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix a = rng.ginibre(4);
    const double v = numerical_radius_vector_oracle(a, 32, 7);
    const RadiusCertificate c = numerical_radius(a, 1e-10);
    CHECK(v <= c.upper_certificate + 1e-12);
    CHECK(std::abs(v - c.estimate) <= 1e-6);
    CHECK(v == numerical_radius_vector_oracle(a, 32, 7));
  }
}

TEST_CASE("general spectral radius") {
  CHECK(spectral_radius_general(ComplexMatrix::diagonal({cplx(1, 1), 2.0})) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(spectral_radius_general(ComplexMatrix::from_rows({{0, 1}, {0, 0}})) <= 1e-12);
  // Companion matrix of z^2 - z - 1.
  const ComplexMatrix companion = ComplexMatrix::from_rows({{1, 1}, {1, 0}});
  CHECK(std::abs(spectral_radius_general(companion) - (1.0 + std::sqrt(5.0)) / 2.0) <= 1e-8);
  // Upper triangular with known spectrum, hidden by a unitary similarity.
  oracle::Rng rng(53);
  ComplexMatrix tri = rng.ginibre(4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < i; ++j) tri(i, j) = 0.0;
  }
  tri(0, 0) = cplx(0, 3);
  tri(1, 1) = 1.0;
  tri(2, 2) = cplx(-2, 2);
  tri(3, 3) = 0.5;
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(oracle::to_eigen(rng.ginibre(4)));
  const Eigen::MatrixXcd q = qr.householderQ();
  const ComplexMatrix hidden = oracle::from_eigen(q * oracle::to_eigen(tri) * q.adjoint());
  CHECK(std::abs(spectral_radius_general(hidden) - 3.0) <= 1e-8 * 3.0);
}

TEST_CASE("RadiusEvaluator memoizes by value") {
  RadiusEvaluator w(1e-10);
  const ComplexMatrix a = ComplexMatrix::from_rows({{0, 2}, {1, 0}});
  CHECK(std::abs(w(a) - 1.5) <= 1e-10);
  CHECK(w.cache_size() == 1);
  const ComplexMatrix copy = ComplexMatrix::from_rows({{0, 2}, {1, 0}});
  CHECK(&w.certify(copy) == &w.certify(a));
  CHECK(w.cache_size() == 1);
  w(ComplexMatrix::identity(2));
  CHECK(w.cache_size() == 2);
}
