#include "nradius/ensemble.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <random>

#include "nradius/error.hpp"

namespace nradius {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Gaussian source with a fully specified transform (std::normal_distribution
// differs between standard libraries).
class Gaussian {
public:
  explicit Gaussian(std::uint64_t key) : engine_(key) {}

  double operator()() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

  // Complex Gaussian with E|z|^2 = sigma^2.
  cplx complex(double sigma) {
    const double s = sigma / std::sqrt(2.0);
    const double re = (*this)();
    const double im = (*this)();
    return {s * re, s * im};
  }

private:
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

ComplexMatrix ginibre(Gaussian& g, std::size_t n, double sigma) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = g.complex(sigma);
  }
  return m;
}

// Modified Gram-Schmidt on the columns of a Ginibre matrix. R has a positive
// diagonal by construction, so Q is Haar distributed.
ComplexMatrix haar_unitary(Gaussian& g, std::size_t n) {
  ComplexMatrix q = ginibre(g, n, 1.0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      cplx proj = 0.0;
      for (std::size_t i = 0; i < n; ++i) proj += std::conj(q(i, j)) * q(i, k);
      for (std::size_t i = 0; i < n; ++i) q(i, k) -= proj * q(i, j);
    }
    double len = 0.0;
    for (std::size_t i = 0; i < n; ++i) len += std::norm(q(i, k));
    len = std::sqrt(len);
    for (std::size_t i = 0; i < n; ++i) q(i, k) /= len;
  }
  return q;
}

} // namespace

const char* to_string(EnsembleKind kind) noexcept {
  switch (kind) {
  case EnsembleKind::Ginibre: return "ginibre";
  case EnsembleKind::Hermitian: return "hermitian";
  case EnsembleKind::PSD: return "psd";
  case EnsembleKind::Nilpotent2: return "nilpotent2";
  case EnsembleKind::Normal: return "normal";
  case EnsembleKind::Diagonal: return "diagonal";
  case EnsembleKind::Unitary: return "unitary";
  }
  return "unknown";
}

EnsembleKind parse_ensemble_kind(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  for (EnsembleKind kind : kAllEnsembles) {
    if (lower == to_string(kind)) return kind;
  }
  throw UsageError("unknown ensemble '" + std::string(name) + "'");
}

void validate(const EnsembleSpec& spec) {
  if (spec.dim < 1) throw UsageError("ensemble dim must be >= 1");
  if (spec.trials < 1) throw UsageError("ensemble trials must be >= 1");
  if (!(spec.scale > 0.0) || !std::isfinite(spec.scale)) throw UsageError("ensemble scale must be positive");
}

namespace {

std::uint64_t sample_key(const EnsembleSpec& spec, std::uint64_t tag, std::size_t index, std::size_t slot) {
  std::uint64_t key = splitmix64(spec.seed);
  key = splitmix64(key ^ tag);
  key = splitmix64(key ^ spec.dim);
  key = splitmix64(key ^ index);
  return splitmix64(key ^ slot);
}

} // namespace

ComplexMatrix sample(const EnsembleSpec& spec, std::size_t index, std::size_t slot) {
  Gaussian g(sample_key(spec, static_cast<std::uint64_t>(spec.kind), index, slot));

  const std::size_t n = spec.dim;
  const double s = spec.scale;
  switch (spec.kind) {
  case EnsembleKind::Ginibre: return ginibre(g, n, s);
  case EnsembleKind::Hermitian: return real_part(ginibre(g, n, s));
  case EnsembleKind::PSD: {
    // Scaled so entries stay O(scale) like the other kinds.
    const ComplexMatrix x = ginibre(g, n, 1.0);
    return (cplx(s / std::sqrt(static_cast<double>(n)))) * symmetrize(gram(x));
  }
  case EnsembleKind::Nilpotent2: {
    // [[0, X], [0, 0]] with a k x (n-k) block X, k = floor(n/2).
    ComplexMatrix m(n);
    const std::size_t k = n / 2;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = k; j < n; ++j) m(i, j) = g.complex(s);
    }
    return m;
  }
  case EnsembleKind::Normal: {
    const ComplexMatrix u = haar_unitary(g, n);
    std::vector<cplx> diag(n);
    for (auto& z : diag) z = g.complex(s);
    return u * ComplexMatrix::diagonal(diag) * adjoint(u);
  }
  case EnsembleKind::Diagonal: {
    std::vector<cplx> diag(n);
    for (auto& z : diag) z = g.complex(s);
    return ComplexMatrix::diagonal(diag);
  }
  case EnsembleKind::Unitary: return cplx(s) * haar_unitary(g, n);
  }
  throw UsageError("unknown ensemble kind");
}

CVector gaussian_vector(const EnsembleSpec& spec, std::size_t index, std::size_t slot) {
  // Tag outside the range of EnsembleKind keeps vectors independent of matrices.
  Gaussian g(sample_key(spec, 0x7665637400000000ULL, index, slot));
  CVector v(spec.dim);
  for (auto& z : v) z = g.complex(spec.scale);
  return v;
}

std::vector<ComplexMatrix> generate(const EnsembleSpec& spec) {
  validate(spec);
  std::vector<ComplexMatrix> out;
  out.reserve(spec.trials);
  for (std::size_t i = 0; i < spec.trials; ++i) out.push_back(sample(spec, i, 0));
  return out;
}

} // namespace nradius
