#include "nradius/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nradius/blockops.hpp"
#include "nradius/error.hpp"
#include "nradius/spectral.hpp"

namespace nradius {

namespace {

constexpr double kSelfAdjointTolerance = 1e-8;
constexpr double kVanishingProduct = 1e-10;

// Norm of a Hermitian PSD matrix: its top eigenvalue, clamped at zero.
double psd_norm(const ComplexMatrix& p) { return std::max(lambda_max(p), 0.0); }

// Quantities shared by the off-diagonal bounds.
struct OffDiagTerms {
  double norm_b;
  double norm_c;
  double sum;  // ||B + C*||
  double diff; // ||B - C*||
  double q2_left;  // || |B|^2 + |C*|^2 ||
  double q2_right; // || |B*|^2 + |C|^2 ||

  double q2() const { return std::max(q2_left, q2_right); }
};

OffDiagTerms offdiag_terms(const ComplexMatrix& b, const ComplexMatrix& c) {
  require_same_dim(b, c, "off-diagonal bound");
  const ComplexMatrix c_star = adjoint(c);
  return {op_norm(b),
          op_norm(c),
          op_norm(b + c_star),
          op_norm(b - c_star),
          psd_norm(gram(b) + cogram(c)),
          psd_norm(cogram(b) + gram(c))};
}

// max{|| |B|^4 + |C*|^4 ||, || |B*|^4 + |C|^4 ||} with |X|^4 = (X*X)^2.
double q4(const ComplexMatrix& b, const ComplexMatrix& c) {
  const ComplexMatrix bb = gram(b);
  const ComplexMatrix bs = cogram(b);
  const ComplexMatrix cc = gram(c);
  const ComplexMatrix cs = cogram(c);
  return std::max(psd_norm(symmetrize(bb * bb + cs * cs)), psd_norm(symmetrize(bs * bs + cc * cc)));
}

double product_radius(const ComplexMatrix& b, const ComplexMatrix& c, RadiusEvaluator& w) {
  return std::max(w(b * c), w(c * b));
}

void fill_offdiag_components(BoundReport& r, const OffDiagTerms& t) {
  r.components["norm_b"] = t.norm_b;
  r.components["norm_c"] = t.norm_c;
  r.components["norm_b_plus_cstar"] = t.sum;
  r.components["norm_b_minus_cstar"] = t.diff;
  r.components["q2_left"] = t.q2_left;
  r.components["q2_right"] = t.q2_right;
}

BoundReport make_report(std::string name, BoundKind kind, int exponent) {
  BoundReport r;
  r.name = std::move(name);
  r.kind = kind;
  r.exponent = exponent;
  return r;
}

// Fourth-power upper bound of [[A, B], [C, D]] with the (3 - alpha) term
// when `comparison` is set.
BoundReport full_block_bound(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                             const ComplexMatrix& d, double alpha, RadiusEvaluator& w, bool comparison) {
  require_alpha(alpha);
  require_same_dim(a, b, "full block bound");
  require_same_dim(a, c, "full block bound");
  require_same_dim(a, d, "full block bound");
  const OffDiagTerms t = offdiag_terms(b, c);
  const double w_a = w(a);
  const double w_d = w(d);
  const double diag = std::pow(std::max(w_a, w_d), 4);
  const double quartic = q4(b, c);
  const double m = product_radius(b, c, w);

  BoundReport r = make_report(comparison ? "bk21_upper_4" : "th25_upper_4", BoundKind::Upper, 4);
  r.alpha = alpha;
  fill_offdiag_components(r, t);
  r.components["w_a"] = w_a;
  r.components["w_d"] = w_d;
  r.components["q4"] = quartic;
  r.components["max_w_products"] = m;
  if (comparison) {
    r.value = 8.0 * diag + (1.0 + alpha) * quartic + (3.0 - alpha) * t.q2() * m;
  } else {
    r.value = 8.0 * diag + (1.0 + alpha) * quartic + 2.0 * (1.0 - alpha) * m * m + 2.0 * t.q2() * m;
  }
  return r;
}

} // namespace

const char* to_string(BoundKind kind) noexcept { return kind == BoundKind::Upper ? "upper" : "lower"; }

void require_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw AlphaOutOfRange("alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
}

double offdiag_radius(const ComplexMatrix& b, const ComplexMatrix& c, RadiusEvaluator& w) {
  return w(make_offdiag(b, c).assembled);
}

BoundReport bound_th1_upper(const ComplexMatrix& b, const ComplexMatrix& c) {
  const OffDiagTerms t = offdiag_terms(b, c);
  const ComplexMatrix abs_b = matrix_abs(b);
  const ComplexMatrix abs_c = matrix_abs(c);
  const ComplexMatrix abs_b_star = matrix_abs(adjoint(b));
  const ComplexMatrix abs_c_star = matrix_abs(adjoint(c));
  const double r1 = spectral_radius_psd_product(abs_b, abs_c_star);
  const double r2 = spectral_radius_psd_product(abs_b_star, abs_c);

  BoundReport r = make_report("th1_upper", BoundKind::Upper, 1);
  fill_offdiag_components(r, t);
  r.components["r_abs_b_abs_cstar"] = r1;
  r.components["r_abs_bstar_abs_c"] = r2;
  r.value = 0.5 * std::max(t.norm_b, t.norm_c) + 0.5 * std::sqrt(std::max(r1, r2));
  return r;
}

BoundReport bound_th1eqn_upper(const ComplexMatrix& b, const ComplexMatrix& c) {
  require_same_dim(b, c, "bound_th1eqn_upper");
  const ComplexMatrix abs_b = matrix_abs(b);
  const ComplexMatrix abs_c = matrix_abs(c);
  const ComplexMatrix abs_b_star = matrix_abs(adjoint(b));
  const ComplexMatrix abs_c_star = matrix_abs(adjoint(c));
  const double left = psd_norm(abs_c + abs_b_star);
  const double right = psd_norm(abs_b + abs_c_star);

  BoundReport r = make_report("th1eqn_upper", BoundKind::Upper, 1);
  r.components["norm_abs_c_plus_abs_bstar"] = left;
  r.components["norm_abs_b_plus_abs_cstar"] = right;
  r.value = 0.5 * std::max(left, right);
  return r;
}

BoundReport bound_th5_lower(const ComplexMatrix& b, const ComplexMatrix& c) {
  const OffDiagTerms t = offdiag_terms(b, c);
  BoundReport r = make_report("th5_lower", BoundKind::Lower, 1);
  fill_offdiag_components(r, t);
  r.value = 0.5 * std::max(t.norm_b, t.norm_c) + 0.25 * std::abs(t.sum - t.diff);
  return r;
}

BoundReport bound_th2_upper_sq(const ComplexMatrix& b, const ComplexMatrix& c, RadiusEvaluator& w) {
  const OffDiagTerms t = offdiag_terms(b, c);
  const ComplexMatrix abs_b = matrix_abs(b);
  const ComplexMatrix abs_c = matrix_abs(c);
  const double w1 = w(abs_b * matrix_abs(adjoint(c)));
  const double w2 = w(abs_c * matrix_abs(adjoint(b)));

  BoundReport r = make_report("th2_upper_sq", BoundKind::Upper, 2);
  fill_offdiag_components(r, t);
  r.components["w_abs_b_abs_cstar"] = w1;
  r.components["w_abs_c_abs_bstar"] = w2;
  r.value = 0.25 * t.q2() + 0.5 * std::max(w1, w2);
  return r;
}

BoundReport bound_th6_lower_sq(const ComplexMatrix& b, const ComplexMatrix& c) {
  const OffDiagTerms t = offdiag_terms(b, c);
  BoundReport r = make_report("th6_lower_sq", BoundKind::Lower, 2);
  fill_offdiag_components(r, t);
  r.value = 0.25 * t.q2() + 0.125 * std::abs(t.sum * t.sum - t.diff * t.diff);
  return r;
}

BoundChain bound_th3_chain(const ComplexMatrix& b, const ComplexMatrix& c) {
  const OffDiagTerms t = offdiag_terms(b, c);
  const double big = std::max(t.sum, t.diff);
  return {0.125 * (big * big + t.sum * t.diff), 0.25 * t.q2()};
}

BoundReport bound_th3_lower_sq(const ComplexMatrix& b, const ComplexMatrix& c) {
  const OffDiagTerms t = offdiag_terms(b, c);
  const BoundChain chain = bound_th3_chain(b, c);
  BoundReport r = make_report("th3_lower_sq", BoundKind::Lower, 2);
  fill_offdiag_components(r, t);
  r.components["second_line"] = chain.second;
  r.value = chain.first;
  return r;
}

BoundChain bound_th4_chain(const ComplexMatrix& b, const ComplexMatrix& c) {
  const OffDiagTerms t = offdiag_terms(b, c);
  const double s2 = t.sum * t.sum;
  const double d2 = t.diff * t.diff;
  return {std::sqrt(s2 * s2 + d2 * d2) / (4.0 * std::sqrt(2.0)), 0.25 * t.q2()};
}

BoundReport bound_th4_lower_sq(const ComplexMatrix& b, const ComplexMatrix& c) {
  const OffDiagTerms t = offdiag_terms(b, c);
  const BoundChain chain = bound_th4_chain(b, c);
  BoundReport r = make_report("th4_lower_sq", BoundKind::Lower, 2);
  fill_offdiag_components(r, t);
  r.components["second_line"] = chain.second;
  r.value = chain.first;
  return r;
}

BoundReport bound_th7_upper_4(const ComplexMatrix& b, const ComplexMatrix& c, double alpha, RadiusEvaluator& w) {
  require_alpha(alpha);
  const OffDiagTerms t = offdiag_terms(b, c);
  const double quartic = q4(b, c);
  const double m = product_radius(b, c, w);

  BoundReport r = make_report("th7_upper_4", BoundKind::Upper, 4);
  r.alpha = alpha;
  fill_offdiag_components(r, t);
  r.components["q4"] = quartic;
  r.components["max_w_products"] = m;
  r.value = (1.0 + alpha) / 8.0 * quartic + (1.0 - alpha) / 4.0 * m * m + 0.25 * t.q2() * m;
  return r;
}

Cor1Chain cor1_chain(const ComplexMatrix& b, double alpha, RadiusEvaluator& w) {
  require_alpha(alpha);
  const ComplexMatrix bb = gram(b);
  const ComplexMatrix bs = cogram(b);
  const double n2 = psd_norm(bb + bs);
  const double n4 = psd_norm(symmetrize(bb * bb + bs * bs));
  const ComplexMatrix square = b * b;
  const double w_sq = w(square);
  const double norm_sq = op_norm(square);
  const double half = 0.5 * n2;

  const double base = (1.0 + alpha) / 8.0 * n4;
  return {base + (1.0 - alpha) / 4.0 * w_sq * w_sq + 0.25 * n2 * w_sq,
          base + (1.0 - alpha) / 4.0 * norm_sq * norm_sq + 0.25 * n2 * norm_sq,
          base + (1.0 - alpha) / 4.0 * half * half + 0.25 * n2 * half,
          0.5 * n4};
}

BoundReport bound_cor1_upper_4(const ComplexMatrix& b, double alpha, RadiusEvaluator& w) {
  require_alpha(alpha);
  const ComplexMatrix bb = gram(b);
  const ComplexMatrix bs = cogram(b);
  const double n2 = psd_norm(bb + bs);
  const double n4 = psd_norm(symmetrize(bb * bb + bs * bs));
  const double w_sq = w(b * b);

  BoundReport r = make_report("cor1_upper_4", BoundKind::Upper, 4);
  r.alpha = alpha;
  r.components["n2"] = n2;
  r.components["n4"] = n4;
  r.components["w_b_squared"] = w_sq;
  r.value = (1.0 + alpha) / 8.0 * n4 + (1.0 - alpha) / 4.0 * w_sq * w_sq + 0.25 * n2 * w_sq;
  return r;
}

BoundReport bound_th25_upper_4(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                               const ComplexMatrix& d, double alpha, RadiusEvaluator& w) {
  return full_block_bound(a, b, c, d, alpha, w, false);
}

BoundReport bound_bk21_upper_4(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                               const ComplexMatrix& d, double alpha, RadiusEvaluator& w) {
  return full_block_bound(a, b, c, d, alpha, w, true);
}

BoundReport bound_prop33(const ComplexMatrix& b, const ComplexMatrix& c, RadiusEvaluator& w) {
  require_same_dim(b, c, "bound_prop33");
  if (hermitian_defect(b) > kSelfAdjointTolerance || hermitian_defect(c) > kSelfAdjointTolerance) {
    throw NotHermitian("bound_prop33: operands must be self-adjoint");
  }
  const ComplexMatrix hb = symmetrize(b);
  const ComplexMatrix hc = symmetrize(c);
  const double squares = psd_norm(symmetrize(hb * hb + hc * hc));
  const double w_abs = w(matrix_abs(hb) * matrix_abs(hc));

  BoundReport r = make_report("prop33", BoundKind::Upper, 2);
  r.components["norm_b2_plus_c2"] = squares;
  r.components["w_abs_b_abs_c"] = w_abs;
  r.components["norm_b_plus_c"] = op_norm(hb + hc);
  r.components["norm_b_minus_c"] = op_norm(hb - hc);
  r.value = squares + 2.0 * w_abs;
  return r;
}

double kittaneh2002_bound(const ComplexMatrix& b, const ComplexMatrix& c) {
  require_same_dim(b, c, "kittaneh2002_bound");
  require_psd(b, "kittaneh2002_bound: B");
  require_psd(c, "kittaneh2002_bound: C");
  const double nb = op_norm(b);
  const double nc = op_norm(c);
  const double cross = op_norm(psd_sqrt(b) * psd_sqrt(c));
  return 0.5 * (nb + nc + std::sqrt((nb - nc) * (nb - nc) + 4.0 * cross * cross));
}

EqualityConditions check_equality_conditions(const ComplexMatrix& b, const ComplexMatrix& c, RadiusEvaluator& w) {
  const OffDiagTerms t = offdiag_terms(b, c);
  const double ws = offdiag_radius(b, c, w);

  EqualityConditions e{};
  e.w_sq = ws * ws;
  e.quarter_q2 = 0.25 * t.q2();
  e.norm_sum = t.sum;
  e.norm_diff = t.diff;
  e.cross_b_cstar = op_norm(matrix_abs(b) * matrix_abs(adjoint(c)));
  e.cross_bstar_c = op_norm(matrix_abs(adjoint(b)) * matrix_abs(c));
  e.equality = nearly_equal(e.w_sq, e.quarter_q2);
  e.sufficient = e.cross_b_cstar < kVanishingProduct && e.cross_bstar_c < kVanishingProduct;
  // The lower bound Q2/4 + |a^2 - b^2|/8 <= w^2 forces a = b once w^2 meets
  // Q2/4; judged at the resolution of the equality test itself.
  e.necessary = std::abs(t.sum * t.sum - t.diff * t.diff) <= 16.0 * inequality_slack(e.w_sq, e.quarter_q2);
  return e;
}

Prop31 check_prop31(const ComplexMatrix& b, const ComplexMatrix& c) {
  require_same_dim(b, c, "check_prop31");
  require_psd(b, "check_prop31: B");
  require_psd(c, "check_prop31: C");
  Prop31 p{};
  p.norm_diff = op_norm(b - c);
  p.norm_sum = op_norm(b + c);
  p.max_norm = std::max(op_norm(b), op_norm(c));
  p.half_sum_plus_half_diff = 0.5 * p.norm_sum + 0.5 * p.norm_diff;
  p.first_holds = holds(p.norm_diff, p.norm_sum);
  p.second_holds = holds(p.max_norm, p.half_sum_plus_half_diff);
  return p;
}

} // namespace nradius
