#include "nradius/numradius.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "nradius/error.hpp"
#include "nradius/spectral.hpp"

namespace nradius {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Full-circle grid size of the first scan; samples on [0, pi) give both
// f(theta) and f(theta + pi).
constexpr std::size_t kInitialGrid = 128;
constexpr std::size_t kEvaluationBudget = std::size_t{1} << 20;
constexpr double kMinSpacing = 1e-9;
constexpr std::size_t kPolishedPeaks = 3;
constexpr double kMinInsertGap = 1e-7;

struct Peak {
  double theta; // full circle
  double value;
};

struct Sample {
  double theta; // in [0, pi)
  double top;   // f(theta)      =  lambda_max(H(theta))
  double back;  // f(theta + pi) = -lambda_min(H(theta))
};

// H(theta) = Re(e^{i theta} A) = cos(theta) Re(A) - sin(theta) Im(A).
class RotationScan {
public:
  explicit RotationScan(const ComplexMatrix& a)
      : re_(real_part(a)), im_(imag_part(a)), h_(a.dim()) {}

  const ComplexMatrix& rotated(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const std::size_t n = re_.dim();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        const cplx v = c * re_(i, j) - s * im_(i, j);
        h_(i, j) = v;
        h_(j, i) = std::conj(v);
      }
      h_(i, i) = h_(i, i).real();
    }
    return h_;
  }

  Sample sample(double theta) {
    ++evaluations;
    const auto ext = hermitian_extremes_fast(rotated(theta));
    return {theta, ext.max, -ext.min};
  }

  double f(double theta) {
    ++evaluations;
    return hermitian_extremes_fast(rotated(theta)).max;
  }

  std::size_t evaluations = 0;

private:
  ComplexMatrix re_;
  ComplexMatrix im_;
  ComplexMatrix h_;
};

// Modulus of the intersection of the support lines Re(e^{i t1} z) = h1 and
// Re(e^{i t2} z) = h2 with t2 - t1 = delta in (0, pi). Written in the frame
// of the bisecting direction to stay accurate for small delta.
double vertex_modulus(double h1, double h2, double delta) {
  const double along = (h1 + h2) / (2.0 * std::cos(0.5 * delta));
  const double across = (h1 - h2) / (2.0 * std::sin(0.5 * delta));
  return std::hypot(along, across);
}

struct CircleValue {
  double theta; // full circle angle in [0, 2 pi)
  double value;
};

// Unrolls the half-circle samples into the cyclic full-circle sequence.
std::vector<CircleValue> full_circle(const std::vector<Sample>& samples) {
  std::vector<CircleValue> out;
  out.reserve(2 * samples.size());
  for (const auto& s : samples) out.push_back({s.theta, s.top});
  for (const auto& s : samples) out.push_back({s.theta + kPi, s.back});
  return out;
}

// Largest vertex over interval k = (samples[k], samples[k+1]) and its
// antipodal mirror.
double interval_vertex(const std::vector<Sample>& samples, std::size_t k) {
  const std::size_t m = samples.size();
  const Sample& lo = samples[k];
  if (k + 1 < m) {
    const Sample& hi = samples[k + 1];
    const double delta = hi.theta - lo.theta;
    return std::max(vertex_modulus(lo.top, hi.top, delta), vertex_modulus(lo.back, hi.back, delta));
  }
  // Wrap-around: the successor of theta_{m-1} is samples[0] shifted by pi,
  // whose top and back values swap roles.
  const Sample& first = samples.front();
  const double delta = first.theta + kPi - lo.theta;
  return std::max(vertex_modulus(lo.top, first.back, delta),
                  vertex_modulus(lo.back, first.top, delta));
}

double interval_width(const std::vector<Sample>& samples, std::size_t k) {
  if (k + 1 < samples.size()) return samples[k + 1].theta - samples[k].theta;
  return samples.front().theta + kPi - samples[k].theta;
}

double best_value(const std::vector<Sample>& samples, double* theta) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& s : samples) {
    if (s.top > best) {
      best = s.top;
      *theta = s.theta;
    }
    if (s.back > best) {
      best = s.back;
      *theta = s.theta + kPi;
    }
  }
  return best;
}

double wrap_half(double theta) {
  double t = std::fmod(theta, kPi);
  if (t < 0.0) t += kPi;
  return t;
}

double wrap_full(double theta) {
  double t = std::fmod(theta, 2.0 * kPi);
  if (t < 0.0) t += 2.0 * kPi;
  return t;
}

// Adds s unless it sits within kMinInsertGap of a neighbour (cyclically);
// support lines that close together only add rounding noise to the polygon.
void insert_separated(std::vector<Sample>& samples, const Sample& s) {
  auto it = std::lower_bound(samples.begin(), samples.end(), s.theta,
                             [](const Sample& x, double t) { return x.theta < t; });
  const double next = it != samples.end() ? it->theta : samples.front().theta + kPi;
  const double prev = it != samples.begin() ? std::prev(it)->theta : samples.back().theta - kPi;
  if (next - s.theta < kMinInsertGap || s.theta - prev < kMinInsertGap) return;
  samples.insert(it, s);
}

double golden_section_max(RotationScan& scan, double a, double b, double* theta_out) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = scan.f(x1);
  double f2 = scan.f(x2);
  for (int iter = 0; iter < 80 && b - a > 1e-7; ++iter) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = scan.f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = scan.f(x1);
    }
  }
  if (f1 >= f2) {
    *theta_out = x1;
    return f1;
  }
  *theta_out = x2;
  return f2;
}

// Golden-section refinement around the best discrete local maxima of the
// full-circle sequence; the refined angles join the sample set. Returns the
// best refined value.
Peak polish_peaks(RotationScan& scan, std::vector<Sample>& samples) {
  Peak best{0.0, -std::numeric_limits<double>::infinity()};
  const auto circle = full_circle(samples);
  const std::size_t len = circle.size();
  std::vector<std::size_t> peaks;
  for (std::size_t j = 0; j < len; ++j) {
    const double prev = circle[(j + len - 1) % len].value;
    const double next = circle[(j + 1) % len].value;
    if (circle[j].value >= prev && circle[j].value >= next) peaks.push_back(j);
  }
  std::stable_sort(peaks.begin(), peaks.end(),
                   [&](std::size_t x, std::size_t y) { return circle[x].value > circle[y].value; });
  if (peaks.size() > kPolishedPeaks) peaks.resize(kPolishedPeaks);

  for (std::size_t j : peaks) {
    double lo = circle[(j + len - 1) % len].theta;
    double hi = circle[(j + 1) % len].theta;
    const double mid = circle[j].theta;
    if (lo > mid) lo -= 2.0 * kPi;
    if (hi < mid) hi += 2.0 * kPi;
    double theta = mid;
    const double value = golden_section_max(scan, lo, hi, &theta);
    if (value > best.value) best = {wrap_full(theta), value};
    insert_separated(samples, scan.sample(wrap_half(theta)));
  }
  return best;
}

} // namespace

RadiusCertificate numerical_radius(const ComplexMatrix& a, double tol) {
  if (a.dim() == 0) throw InvalidMatrix("numerical_radius: empty matrix");
  if (!(tol > 0.0)) throw ToleranceUnreachable("numerical_radius: tol must be positive");

  const std::size_t n = a.dim();
  const double scale = frobenius_norm(a);
  const double allowance = 32.0 * static_cast<double>(n) * kEps * scale;
  if (tol <= 4.0 * allowance) {
    throw ToleranceUnreachable("numerical_radius: tol " + std::to_string(tol) +
                               " is below attainable precision " + std::to_string(4.0 * allowance));
  }

  const double norm_a = op_norm(a);
  const double closed_form =
      std::min(norm_a, 0.5 * (norm_a + std::sqrt(op_norm(a * a)))) + allowance;

  RotationScan scan(a);
  std::vector<Sample> samples;
  samples.reserve(kInitialGrid / 2);
  for (std::size_t k = 0; k < kInitialGrid / 2; ++k) {
    samples.push_back(scan.sample(kPi * static_cast<double>(k) / static_cast<double>(kInitialGrid / 2)));
  }

  double best_theta = 0.0;
  double lower = best_value(samples, &best_theta);
  auto absorb = [&](double value, double theta) {
    if (value > lower) {
      lower = value;
      best_theta = theta;
    }
  };
  // The witness is recomputed from an eigenvector, so leave room for its
  // rounding inside the requested width.
  const double target = tol - allowance;

  bool polished = false;
  double polygon = 0.0;
  for (;;) {
    polygon = 0.0;
    std::vector<double> vertices(samples.size());
    for (std::size_t k = 0; k < samples.size(); ++k) {
      vertices[k] = interval_vertex(samples, k);
      polygon = std::max(polygon, vertices[k]);
    }
    if (std::min(polygon + allowance, closed_form) - lower <= target) break;

    if (!polished) {
      const Peak peak = polish_peaks(scan, samples);
      absorb(peak.value, peak.theta);
      polished = true;
      continue;
    }

    const double threshold = lower + target - allowance;
    std::vector<Sample> refined;
    refined.reserve(samples.size() * 2);
    for (std::size_t k = 0; k < samples.size(); ++k) {
      refined.push_back(samples[k]);
      if (vertices[k] <= threshold) continue;
      const double width = interval_width(samples, k);
      if (width < kMinSpacing) {
        throw ToleranceUnreachable("numerical_radius: angular resolution exhausted before reaching tol " +
                                   std::to_string(tol));
      }
      if (scan.evaluations >= kEvaluationBudget) {
        throw ToleranceUnreachable("numerical_radius: evaluation budget exhausted before reaching tol " +
                                   std::to_string(tol));
      }
      double mid = samples[k].theta + 0.5 * width;
      if (mid >= kPi) mid -= kPi; // wrap-around interval
      const Sample fresh = scan.sample(mid);
      absorb(fresh.top, fresh.theta);
      absorb(fresh.back, fresh.theta + kPi);
      refined.push_back(fresh);
    }
    std::sort(refined.begin(), refined.end(),
              [](const Sample& x, const Sample& y) { return x.theta < y.theta; });
    samples = std::move(refined);
    polished = false;
  }

  // One last polish so the witness sits on a local maximum rather than the
  // nearest grid point.
  if (!polished) {
    const Peak peak = polish_peaks(scan, samples);
    absorb(peak.value, peak.theta);
  }
  const double upper = std::min(polygon + allowance, closed_form);

  const HermitianEig eig = hermitian_eig(scan.rotated(best_theta));
  CVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = eig.vectors(i, n - 1);

  RadiusCertificate cert;
  cert.lower_witness = std::abs(quadratic_form(a, x));
  cert.estimate = cert.lower_witness;
  cert.upper_certificate = std::max(upper, cert.lower_witness);
  cert.witness_vector = std::move(x);
  cert.theta_star = wrap_full(best_theta);
  cert.evaluations = scan.evaluations;
  return cert;
}

double numerical_radius_vector_oracle(const ComplexMatrix& a, int restarts, std::uint64_t seed) {
  if (restarts < 1) throw UsageError("numerical_radius_vector_oracle: restarts must be >= 1");
  const std::size_t n = a.dim();
  const ComplexMatrix a_star = adjoint(a);
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);

  auto normalise = [](CVector& v) {
    const double len = norm(v);
    for (auto& z : v) z /= len;
  };
  auto objective = [&](const CVector& v) { return std::norm(quadratic_form(a, v)); };

  double best = 0.0;
  for (int r = 0; r < restarts; ++r) {
    CVector x(n);
    do {
      for (auto& z : x) z = cplx(uniform(gen), uniform(gen));
    } while (norm(x) == 0.0);
    normalise(x);

    double value = objective(x);
    double step = 1.0;
    for (int iter = 0; iter < 200; ++iter) {
      const cplx q = quadratic_form(a, x);
      const CVector ax = nradius::apply(a, x);
      const CVector asx = nradius::apply(a_star, x);
      CVector grad(n);
      for (std::size_t i = 0; i < n; ++i) grad[i] = std::conj(q) * ax[i] + q * asx[i];
      const double radial = inner(grad, x).real();
      for (std::size_t i = 0; i < n; ++i) grad[i] -= radial * x[i];
      if (norm(grad) <= 1e-15 * (1.0 + std::sqrt(value))) break;

      // Halve until the objective stops improving; keep the best step seen.
      CVector best_x;
      double best_value = value;
      double best_step = 0.0;
      for (int halving = 0; halving < 50; ++halving, step *= 0.5) {
        CVector trial(n);
        for (std::size_t i = 0; i < n; ++i) trial[i] = x[i] + step * grad[i];
        normalise(trial);
        const double trial_value = objective(trial);
        if (trial_value > best_value) {
          best_x = std::move(trial);
          best_value = trial_value;
          best_step = step;
        } else if (best_step > 0.0) {
          break;
        }
      }
      if (best_step == 0.0) break;
      x = std::move(best_x);
      value = best_value;
      step = 4.0 * best_step;
    }
    best = std::max(best, std::sqrt(value));
  }
  return best;
}

double spectral_radius_general(const ComplexMatrix& a) {
  const auto n = static_cast<Eigen::Index>(a.dim());
  if (n == 0) return 0.0;
  if (n == 1) return std::abs(a(0, 0));
  using RowMajor = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const Eigen::Map<const RowMajor> view(a.data(), n, n);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(Eigen::MatrixXcd(view), false);
  if (solver.info() != Eigen::Success) {
    throw NoConvergence("spectral_radius_general: QR iteration did not converge");
  }
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

const RadiusCertificate& RadiusEvaluator::certify(const ComplexMatrix& a) {
  const std::uint64_t key = digest(a);
  auto [first, last] = cache_.equal_range(key);
  for (auto it = first; it != last; ++it) {
    if (it->second.key == a) return it->second.certificate;
  }
  auto it = cache_.emplace(key, Entry{a, numerical_radius(a, tol_)});
  return it->second.certificate;
}

} // namespace nradius
