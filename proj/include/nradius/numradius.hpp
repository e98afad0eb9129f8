#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>

#include "nradius/matrix.hpp"

namespace nradius {

/// Certified enclosure of w(A) = sup_{|x|=1} |<Ax, x>|.
///
/// `lower_witness` is |<A x, x>| at the concrete unit vector
/// `witness_vector`; `upper_certificate` is a rigorous (up to eigenvalue
/// rounding) upper bound. The estimate is the witness value itself.
struct RadiusCertificate {
  double estimate = 0.0;
  double lower_witness = 0.0;
  double upper_certificate = 0.0;
  CVector witness_vector;
  double theta_star = 0.0; // in [0, 2 pi)
  std::size_t evaluations = 0;

  double width() const noexcept { return upper_certificate - lower_witness; }
};

/// Tolerance used for numerical radii nested inside bound formulas.
inline constexpr double kInnerRadiusTol = 1e-10;

/// Computes w(A) through f(theta) = lambda_max(Re(e^{i theta} A)), whose
/// maximum over theta is w(A).
///
/// Every sampled theta gives a support line of the numerical range W(A);
/// the polygon cut out by consecutive support lines contains W(A), so its
/// largest vertex modulus bounds w(A) from above. Intervals whose vertex
/// could still exceed the best sample by more than `tol` are bisected until
/// the enclosure closes. The closed-form bounds ||A|| and
/// (||A|| + ||A^2||^{1/2}) / 2 also cap the certificate; they are exact for
/// normal and square-zero matrices, where the polygon converges slowest.
/// The best local maxima are polished by golden-section search.
///
/// Throws ToleranceUnreachable when `tol` is below what rounding allows or
/// the evaluation budget runs out.
RadiusCertificate numerical_radius(const ComplexMatrix& a, double tol);

/// Independent lower estimate of w(A): projected gradient ascent of
/// |<Ax, x>|^2 on the unit sphere from `restarts` seeded random starts
/// (step-halving line search, at most 200 steps each). Deterministic for a
/// fixed seed. Not certified.
double numerical_radius_vector_oracle(const ComplexMatrix& a, int restarts, std::uint64_t seed);

/// max |lambda| over the spectrum (complex Schur form via Eigen).
double spectral_radius_general(const ComplexMatrix& a);

/// Memoizing wrapper around numerical_radius at a fixed tolerance. Bound
/// formulas ask for the same radii repeatedly (w(S), w(BC), ...); one
/// evaluator per sample keeps that to a single computation each.
/// Not thread-safe.
class RadiusEvaluator {
public:
  explicit RadiusEvaluator(double tol = kInnerRadiusTol) : tol_(tol) {}

  const RadiusCertificate& certify(const ComplexMatrix& a);
  double operator()(const ComplexMatrix& a) { return certify(a).estimate; }

  double tol() const noexcept { return tol_; }
  std::size_t cache_size() const noexcept { return cache_.size(); }
  void clear() { cache_.clear(); }

private:
  struct Entry {
    ComplexMatrix key;
    RadiusCertificate certificate;
  };
  double tol_;
  std::unordered_multimap<std::uint64_t, Entry> cache_;
};

} // namespace nradius
