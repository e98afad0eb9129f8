#include "nradius/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <string>

#include "nradius/error.hpp"

namespace nradius {

namespace {

bool all_finite(std::span<const cplx> v) {
  return std::all_of(v.begin(), v.end(), [](const cplx& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim_ * dim_) {
    throw InvalidMatrix("matrix of dim " + std::to_string(dim_) + " needs " +
                        std::to_string(dim_ * dim_) + " entries, got " +
                        std::to_string(data_.size()));
  }
  if (!all_finite(data_)) {
    throw InvalidMatrix("matrix entries must be finite");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  if (!all_finite(diag)) throw InvalidMatrix("matrix entries must be finite");
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<cplx> diag) {
  return diagonal(std::span<const cplx>(diag.begin(), diag.size()));
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
  const std::size_t n = rows.size();
  std::vector<cplx> entries;
  entries.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw InvalidMatrix("from_rows: matrix must be square");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return ComplexMatrix(n, std::move(entries));
}

ComplexMatrix ComplexMatrix::unit(std::size_t dim, std::size_t i, std::size_t j) {
  if (i == 0 || j == 0 || i > dim || j > dim) {
    throw InvalidMatrix("unit: index out of range");
  }
  ComplexMatrix m(dim);
  m(i - 1, j - 1) = 1.0;
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs, "operator+");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs, "operator-");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) noexcept {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
ComplexMatrix operator-(ComplexMatrix m) { return m *= -1.0; }
ComplexMatrix operator*(cplx s, ComplexMatrix m) { return m *= s; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  require_same_dim(lhs, rhs, "operator*");
  const std::size_t n = lhs.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const cplx a = lhs(i, k);
      if (a == cplx{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = std::conj(a(j, i));
  return out;
}

ComplexMatrix real_part(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  return out;
}

ComplexMatrix imag_part(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  const cplx half_over_i{0.0, -0.5};
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = half_over_i * (a(i, j) - std::conj(a(j, i)));
  return out;
}

ComplexMatrix gram(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      cplx s{};
      for (std::size_t k = 0; k < n; ++k) s += std::conj(a(k, i)) * a(k, j);
      out(i, j) = s;
      out(j, i) = std::conj(s);
    }
    out(i, i) = out(i, i).real();
  }
  return out;
}

ComplexMatrix cogram(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      cplx s{};
      for (std::size_t k = 0; k < n; ++k) s += a(i, k) * std::conj(a(j, k));
      out(i, j) = s;
      out(j, i) = std::conj(s);
    }
    out(i, i) = out(i, i).real();
  }
  return out;
}

double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const auto& z : a.entries()) s += std::norm(z);
  return std::sqrt(s);
}

double max_abs_entry(const ComplexMatrix& a) {
  double m = 0.0;
  for (const auto& z : a.entries()) m = std::max(m, std::abs(z));
  return m;
}

double hermitian_defect(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s += std::norm(a(i, j) - std::conj(a(j, i)));
  return std::sqrt(s);
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimMismatch(std::string(what) + ": dimensions " + std::to_string(a.dim()) + " and " +
                      std::to_string(b.dim()) + " differ");
  }
}

CVector apply(const ComplexMatrix& a, std::span<const cplx> x) {
  const std::size_t n = a.dim();
  if (x.size() != n) throw DimMismatch("apply: vector length differs from matrix dim");
  CVector y(n);
  for (std::size_t i = 0; i < n; ++i) {
    cplx s{};
    for (std::size_t j = 0; j < n; ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

cplx inner(std::span<const cplx> x, std::span<const cplx> y) {
  if (x.size() != y.size()) throw DimMismatch("inner: vector lengths differ");
  cplx s{};
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * std::conj(y[i]);
  return s;
}

double norm(std::span<const cplx> x) {
  double s = 0.0;
  for (const auto& z : x) s += std::norm(z);
  return std::sqrt(s);
}

cplx quadratic_form(const ComplexMatrix& a, std::span<const cplx> x) {
  const CVector ax = apply(a, x);
  return inner(ax, x);
}

std::uint64_t digest(const ComplexMatrix& a, std::uint64_t seed) {
  constexpr std::uint64_t prime = 0x100000001b3ULL;
  std::uint64_t h = seed;
  auto mix = [&](const void* p, std::size_t len) {
    const auto* bytes = static_cast<const unsigned char*>(p);
    for (std::size_t i = 0; i < len; ++i) {
      h ^= bytes[i];
      h *= prime;
    }
  };
  const std::uint64_t dim = a.dim();
  mix(&dim, sizeof dim);
  for (const auto& z : a.entries()) {
    // Normalise -0.0 so that equal values hash equally.
    const double parts[2] = {z.real() == 0.0 ? 0.0 : z.real(), z.imag() == 0.0 ? 0.0 : z.imag()};
    mix(parts, sizeof parts);
  }
  return h;
}

} // namespace nradius
