#include <doctest.h>

#include <cmath>
#include <limits>

#include "nradius/error.hpp"
#include "nradius/matrix.hpp"
#include "nradius/matrix_json.hpp"
#include "oracles.hpp"

using namespace nradius;

TEST_CASE("adjoint conjugates and transposes") {
  CHECK(adjoint(ComplexMatrix::identity(3)) == ComplexMatrix::identity(3));
  CHECK(adjoint(ComplexMatrix::from_rows({{0, 1}, {0, 0}})) == ComplexMatrix::from_rows({{0, 0}, {1, 0}}));
  const ComplexMatrix a = ComplexMatrix::from_rows({{0, cplx(0, 1)}, {0, 0}});
  CHECK(adjoint(a)(1, 0) == cplx(0, -1));
}

TEST_CASE("real and imaginary parts recompose the matrix") {
  const ComplexMatrix h = ComplexMatrix::from_rows({{2, cplx(1, 1)}, {cplx(1, -1), -3}});
  CHECK(real_part(h) == h);
  CHECK(max_abs_entry(imag_part(h)) == 0.0);
  CHECK(real_part(ComplexMatrix::from_rows({{0, 1}, {0, 0}})) == ComplexMatrix::from_rows({{0, 0.5}, {0.5, 0}}));

  oracle::Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix a = rng.ginibre(4);
    const ComplexMatrix back = real_part(a) + cplx(0, 1) * imag_part(a);
    CHECK(max_abs_entry(back - a) <= 1e-14 * (1.0 + max_abs_entry(a)));
    CHECK(hermitian_defect(real_part(a)) == 0.0);
    CHECK(hermitian_defect(imag_part(a)) <= 1e-15);
  }
}

TEST_CASE("construction validates size and finiteness") {
  CHECK_THROWS_AS(ComplexMatrix(2, std::vector<cplx>(3)), InvalidMatrix);
  CHECK_THROWS_AS(ComplexMatrix(1, {cplx(std::numeric_limits<double>::quiet_NaN(), 0)}), InvalidMatrix);
  CHECK_THROWS_AS(ComplexMatrix::unit(2, 0, 1), InvalidMatrix);
  CHECK(ComplexMatrix::unit(2, 1, 2)(0, 1) == cplx(1));
  CHECK_THROWS_AS(ComplexMatrix(2) + ComplexMatrix(3), DimMismatch);
}

TEST_CASE("products and quadratic forms match Eigen") {
  oracle::Rng rng(3);
  const ComplexMatrix a = rng.ginibre(5);
  const ComplexMatrix b = rng.ginibre(5);
  const Eigen::MatrixXcd prod = oracle::to_eigen(a) * oracle::to_eigen(b);
  CHECK((oracle::to_eigen(a * b) - prod).norm() <= 1e-13 * prod.norm());
  CHECK((oracle::to_eigen(gram(a)) - oracle::to_eigen(a).adjoint() * oracle::to_eigen(a)).norm() <= 1e-13 * 50);

  const auto x = rng.unit_vector(5);
  Eigen::VectorXcd ex(5);
  for (int i = 0; i < 5; ++i) ex(i) = x[static_cast<std::size_t>(i)];
  const cplx expected = ex.dot(oracle::to_eigen(a) * ex); // conj(x)^T A x
  CHECK(std::abs(quadratic_form(a, x) - expected) <= 1e-13);
}

TEST_CASE("digest is stable and separates inputs") {
  const ComplexMatrix a = ComplexMatrix::from_rows({{1, 2}, {3, 4}});
  CHECK(digest(a) == digest(ComplexMatrix::from_rows({{1, 2}, {3, 4}})));
  CHECK(digest(a) != digest(ComplexMatrix::from_rows({{1, 2}, {3, 5}})));
  CHECK(digest(ComplexMatrix::from_rows({{-0.0}})) == digest(ComplexMatrix::from_rows({{0.0}})));
}

TEST_CASE("matrix JSON round trip and parse errors") {
  const ComplexMatrix a = ComplexMatrix::from_rows({{cplx(1.5, -2), 0}, {cplx(0, 1e-300), -7}});
  CHECK(matrix_from_json(matrix_to_json(a)) == a);
  CHECK(parse_matrix(R"({"dim": 1, "entries": [[2, 0]]})") == ComplexMatrix::diagonal({2.0}));
  CHECK_THROWS_AS(parse_matrix("{"), ParseError);
  CHECK_THROWS_AS(parse_matrix(R"({"dim": 2, "entries": [[1, 0]]})"), ParseError);
  CHECK_THROWS_AS(parse_matrix(R"({"dim": 0, "entries": []})"), ParseError);
  CHECK_THROWS_AS(parse_matrix(R"({"dim": 1, "entries": [[1]]})"), ParseError);
  CHECK_THROWS_AS(parse_matrix(R"({"dim": 1, "entries": [["a", 0]]})"), ParseError);
  CHECK_THROWS_AS(parse_matrix(R"([1, 2])"), ParseError);
}
