#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace nradius {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

/// Dense square complex matrix stored row-major.
///
/// Entries are always finite; constructors that take external data reject
/// NaN and Inf with InvalidMatrix. A default-constructed matrix has dim 0 and
/// is only useful as a placeholder.
class ComplexMatrix {
public:
  ComplexMatrix() = default;

  /// Zero matrix of the given dimension.
  explicit ComplexMatrix(std::size_t dim);

  /// Takes ownership of `entries` (row-major, dim*dim values).
  ComplexMatrix(std::size_t dim, std::vector<cplx> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const cplx> diag);
  static ComplexMatrix diagonal(std::initializer_list<cplx> diag);
  /// Row-by-row literal, e.g. from_rows({{0, 1}, {0, 0}}).
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);
  /// E_ij with 1-based indices, matching the usual matrix-unit notation.
  static ComplexMatrix unit(std::size_t dim, std::size_t i, std::size_t j);

  std::size_t dim() const noexcept { return dim_; }
  bool empty() const noexcept { return dim_ == 0; }

  cplx& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * dim_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const noexcept {
    return data_[i * dim_ + j];
  }

  std::span<const cplx> entries() const noexcept { return data_; }
  cplx* data() noexcept { return data_.data(); }
  const cplx* data() const noexcept { return data_.data(); }

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(cplx s) noexcept;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
  std::size_t dim_ = 0;
  std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(cplx s, ComplexMatrix m);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& a);

/// (A + A*)/2.
ComplexMatrix real_part(const ComplexMatrix& a);
/// (A - A*)/(2i).
ComplexMatrix imag_part(const ComplexMatrix& a);

/// (A + A*)/2 without the name suggesting a decomposition; used to absorb
/// rounding drift on matrices that are Hermitian in exact arithmetic.
inline ComplexMatrix symmetrize(const ComplexMatrix& a) { return real_part(a); }

ComplexMatrix gram(const ComplexMatrix& a);   // A*A = |A|^2
ComplexMatrix cogram(const ComplexMatrix& a); // AA* = |A*|^2

double frobenius_norm(const ComplexMatrix& a);
double max_abs_entry(const ComplexMatrix& a);
/// ||A - A*||_F.
double hermitian_defect(const ComplexMatrix& a);

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what);

// Vector helpers. inner(x, y) is linear in x and conjugate-linear in y.
CVector apply(const ComplexMatrix& a, std::span<const cplx> x);
cplx inner(std::span<const cplx> x, std::span<const cplx> y);
double norm(std::span<const cplx> x);
/// <Ax, x>.
cplx quadratic_form(const ComplexMatrix& a, std::span<const cplx> x);

/// FNV-1a over the dimension and the raw entry bytes.
std::uint64_t digest(const ComplexMatrix& a, std::uint64_t seed = 0xcbf29ce484222325ULL);

} // namespace nradius
