#include "nradius/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "nradius/blockops.hpp"
#include "nradius/bounds.hpp"
#include "nradius/error.hpp"
#include "nradius/spectral.hpp"

namespace nradius {

namespace {

constexpr double kPremiseTolerance = 1e-12;

using Operands = std::span<const ComplexMatrix>;
using Out = std::vector<Outcome>;

std::string with_alpha(const std::string& label, double alpha) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "[alpha=%g]", alpha);
  return label + buf;
}

void upper(Out& out, std::string label, double lhs, double rhs) {
  out.push_back({std::move(label), Relation::Upper, lhs, rhs});
}
void lower(Out& out, std::string label, double lhs, double rhs) {
  out.push_back({std::move(label), Relation::Lower, lhs, rhs});
}
void equal(Out& out, std::string label, double lhs, double rhs) {
  out.push_back({std::move(label), Relation::Equal, lhs, rhs});
}

double offdiag_w(const ComplexMatrix& b, const ComplexMatrix& c, RadiusEvaluator& w) {
  return offdiag_radius(b, c, w);
}

// ---- single operand -------------------------------------------------------

void eqv_sandwich(Operands ops, RadiusEvaluator& w, Out& out) {
  const double wa = w(ops[0]);
  const double norm = op_norm(ops[0]);
  upper(out, "eqv_sandwich.upper", wa, norm);
  lower(out, "eqv_sandwich.lower", wa, 0.5 * norm);
}

void spectral_le_numerical(Operands ops, RadiusEvaluator& w, Out& out) {
  upper(out, "spectral_le_numerical", spectral_radius_general(ops[0]), w(ops[0]));
}

void nilpotent_half_norm(Operands ops, RadiusEvaluator& w, Out& out) {
  const ComplexMatrix& a = ops[0];
  const double norm = op_norm(a);
  if (op_norm(a * a) > kPremiseTolerance * (1.0 + norm * norm)) return;
  equal(out, "nilpotent_half_norm", w(a), 0.5 * norm);
}

void normal_norm(Operands ops, RadiusEvaluator& w, Out& out) {
  const ComplexMatrix& a = ops[0];
  const double norm = op_norm(a);
  if (frobenius_norm(gram(a) - cogram(a)) > 1e-10 * (1.0 + norm * norm)) return;
  equal(out, "normal_norm", w(a), norm);
}

// B = C: the off-diagonal bounds specialise to single-operator bounds on
// w(B) = w([[0, B], [B, 0]]).
void specialized_b_eq_c(Operands ops, RadiusEvaluator& w, Out& out) {
  const ComplexMatrix& b = ops[0];
  const double wb = w(b);
  upper(out, "specialized_b_eq_c.th1", wb, bound_th1_upper(b, b).value);
  upper(out, "specialized_b_eq_c.th1eqn", wb, bound_th1eqn_upper(b, b).value);
  lower(out, "specialized_b_eq_c.th5", wb, bound_th5_lower(b, b).value);
  upper(out, "specialized_b_eq_c.th2", wb * wb, bound_th2_upper_sq(b, b, w).value);
  lower(out, "specialized_b_eq_c.th6", wb * wb, bound_th6_lower_sq(b, b).value);
  lower(out, "specialized_b_eq_c.th3", wb * wb, bound_th3_lower_sq(b, b).value);
  lower(out, "specialized_b_eq_c.th4", wb * wb, bound_th4_lower_sq(b, b).value);
}

void cor1_upper(Operands ops, RadiusEvaluator& w, Out& out) {
  const double w4 = std::pow(w(ops[0]), 4);
  for (double alpha : kDefaultAlphas) {
    upper(out, with_alpha("cor1_upper", alpha), w4, bound_cor1_upper_4(ops[0], alpha, w).value);
  }
}

void cor1_cap(Operands ops, RadiusEvaluator& w, Out& out) {
  for (double alpha : kDefaultAlphas) {
    const Cor1Chain c = cor1_chain(ops[0], alpha, w);
    upper(out, with_alpha("cor1_cap.norm_square", alpha), c.cor1, c.with_norm_square);
    upper(out, with_alpha("cor1_cap.half_sum", alpha), c.with_norm_square, c.with_half_sum);
    upper(out, with_alpha("cor1_cap.cap", alpha), c.with_half_sum, c.cap);
  }
}

// ---- operator pairs ---------------------------------------------------------

void th1_upper(Operands ops, RadiusEvaluator& w, Out& out) {
  upper(out, "th1_upper", offdiag_w(ops[0], ops[1], w), bound_th1_upper(ops[0], ops[1]).value);
}

void th1eqn_upper(Operands ops, RadiusEvaluator& w, Out& out) {
  upper(out, "th1eqn_upper", offdiag_w(ops[0], ops[1], w), bound_th1eqn_upper(ops[0], ops[1]).value);
}

void th5_lower(Operands ops, RadiusEvaluator& w, Out& out) {
  lower(out, "th5_lower", offdiag_w(ops[0], ops[1], w), bound_th5_lower(ops[0], ops[1]).value);
}

void th2_upper(Operands ops, RadiusEvaluator& w, Out& out) {
  const double ws = offdiag_w(ops[0], ops[1], w);
  upper(out, "th2_upper", ws * ws, bound_th2_upper_sq(ops[0], ops[1], w).value);
}

void th6_lower(Operands ops, RadiusEvaluator& w, Out& out) {
  const double ws = offdiag_w(ops[0], ops[1], w);
  lower(out, "th6_lower", ws * ws, bound_th6_lower_sq(ops[0], ops[1]).value);
}

void th3_lower(Operands ops, RadiusEvaluator& w, Out& out) {
  const double ws = offdiag_w(ops[0], ops[1], w);
  const BoundChain chain = bound_th3_chain(ops[0], ops[1]);
  lower(out, "th3_lower", ws * ws, chain.first);
  lower(out, "th3_lower.chain", chain.first, chain.second);
}

void th4_lower(Operands ops, RadiusEvaluator& w, Out& out) {
  const double ws = offdiag_w(ops[0], ops[1], w);
  const BoundChain chain = bound_th4_chain(ops[0], ops[1]);
  lower(out, "th4_lower", ws * ws, chain.first);
  lower(out, "th4_lower.chain", chain.first, chain.second);
}

void th7_upper(Operands ops, RadiusEvaluator& w, Out& out) {
  const double w4 = std::pow(offdiag_w(ops[0], ops[1], w), 4);
  for (double alpha : kDefaultAlphas) {
    upper(out, with_alpha("th7_upper", alpha), w4, bound_th7_upper_4(ops[0], ops[1], alpha, w).value);
  }
}

void offdiag_swap(Operands ops, RadiusEvaluator& w, Out& out) {
  equal(out, "offdiag_swap", offdiag_w(ops[0], ops[1], w), offdiag_w(ops[1], ops[0], w));
}

void equality_conditions(Operands ops, RadiusEvaluator& w, Out& out) {
  const EqualityConditions e = check_equality_conditions(ops[0], ops[1], w);
  lower(out, "equality_conditions.base", e.w_sq, e.quarter_q2);
  if (e.sufficient) equal(out, "equality_conditions.sufficient", e.w_sq, e.quarter_q2);
  if (e.equality) {
    // Under equality the lower bound Q2/4 + |a^2 - b^2|/8 leaves no room
    // for a != b.
    const double spread = std::abs(e.norm_sum * e.norm_sum - e.norm_diff * e.norm_diff) / 8.0;
    upper(out, "equality_conditions.necessary", spread, e.w_sq - e.quarter_q2);
  }
}

void lemma21_block_diag(Operands ops, RadiusEvaluator& w, Out& out) {
  const Comparison c = check_block_diag_radius(ops[0], ops[1], w);
  equal(out, "lemma21_block_diag", c.lhs, c.rhs);
}

void lemma21_pinched(Operands ops, RadiusEvaluator& w, Out& out) {
  const Comparison c = check_pinched_radius(ops[0], ops[1], w);
  equal(out, "lemma21_pinched", c.lhs, c.rhs);
  const Comparison z = check_pinched_radius(ComplexMatrix(ops[1].dim()), ops[1], w);
  equal(out, "lemma21_pinched.zero_diagonal", z.lhs, w(ops[1]));
}

void lemma22_norms(Operands ops, RadiusEvaluator&, Out& out) {
  const BlockNorms n = check_block_norms(ops[0], ops[1]);
  equal(out, "lemma22_norms.diag", n.norm_diag, n.rhs);
  equal(out, "lemma22_norms.antidiag", n.norm_antidiag, n.rhs);
}

void positive_offdiag(Operands ops, RadiusEvaluator& w, Out& out) {
  const PositiveOffDiag p = positive_offdiag_radius(matrix_abs(ops[0]), matrix_abs(ops[1]), w);
  equal(out, "positive_offdiag", p.w_value, p.half_sum_norm);
}

void prop31(Operands ops, RadiusEvaluator&, Out& out) {
  const Prop31 p = check_prop31(matrix_abs(ops[0]), matrix_abs(ops[1]));
  upper(out, "prop31.difference", p.norm_diff, p.norm_sum);
  upper(out, "prop31.max_norm", p.max_norm, p.half_sum_plus_half_diff);
}

void prop33(Operands ops, RadiusEvaluator& w, Out& out) {
  const BoundReport r = bound_prop33(real_part(ops[0]), real_part(ops[1]), w);
  const double sum = r.components.at("norm_b_plus_c");
  const double diff = r.components.at("norm_b_minus_c");
  upper(out, "prop33", std::max(sum * sum, diff * diff), r.value);
}

void kittaneh2002(Operands ops, RadiusEvaluator&, Out& out) {
  const ComplexMatrix b = matrix_abs(ops[0]);
  const ComplexMatrix c = matrix_abs(ops[1]);
  upper(out, "kittaneh2002", op_norm(b + c), kittaneh2002_bound(b, c));
}

void norm_additive(Operands ops, RadiusEvaluator& w, Out& out) {
  const auto [b, c] = extremal_selfadjoint_pair(ops[0], ops[1]);
  const double nb = op_norm(b);
  const double nc = op_norm(c);
  if (op_norm(b + c) < nb + nc - 1e-9) return;
  const ComplexMatrix bc = b * c;
  const double norm_bc = op_norm(bc);
  equal(out, "norm_additive.squares", op_norm(b * b + c * c), nb * nb + nc * nc);
  equal(out, "norm_additive.w_abs_product", w(matrix_abs(b) * matrix_abs(c)), norm_bc);
  equal(out, "norm_additive.norm_product", norm_bc, nb * nc);
  equal(out, "norm_additive.w_product", nb * nc, w(bc));
}

// ---- full 2x2 blocks --------------------------------------------------------

void th25_upper(Operands ops, RadiusEvaluator& w, Out& out) {
  const double w4 = std::pow(w(make_full(ops[0], ops[1], ops[2], ops[3]).assembled), 4);
  for (double alpha : kDefaultAlphas) {
    upper(out, with_alpha("th25_upper", alpha), w4,
          bound_th25_upper_4(ops[0], ops[1], ops[2], ops[3], alpha, w).value);
  }
}

void bk21_compare(Operands ops, RadiusEvaluator& w, Out& out) {
  for (double alpha : kDefaultAlphas) {
    upper(out, with_alpha("bk21_compare", alpha),
          bound_th25_upper_4(ops[0], ops[1], ops[2], ops[3], alpha, w).value,
          bound_bk21_upper_4(ops[0], ops[1], ops[2], ops[3], alpha, w).value);
  }
}

std::vector<CheckInfo> build_registry() {
  return {
      {"eqv_sandwich", 1, eqv_sandwich},
      {"spectral_le_numerical", 1, spectral_le_numerical},
      {"nilpotent_half_norm", 1, nilpotent_half_norm},
      {"normal_norm", 1, normal_norm},
      {"specialized_b_eq_c", 1, specialized_b_eq_c},
      {"cor1_upper", 1, cor1_upper},
      {"cor1_cap", 1, cor1_cap},
      {"th1_upper", 2, th1_upper},
      {"th1eqn_upper", 2, th1eqn_upper},
      {"th5_lower", 2, th5_lower},
      {"th2_upper", 2, th2_upper},
      {"th6_lower", 2, th6_lower},
      {"th3_lower", 2, th3_lower},
      {"th4_lower", 2, th4_lower},
      {"th7_upper", 2, th7_upper},
      {"offdiag_swap", 2, offdiag_swap},
      {"equality_conditions", 2, equality_conditions},
      {"lemma21_block_diag", 2, lemma21_block_diag},
      {"lemma21_pinched", 2, lemma21_pinched},
      {"lemma22_norms", 2, lemma22_norms},
      {"positive_offdiag", 2, positive_offdiag},
      {"prop31", 2, prop31},
      {"prop33", 2, prop33},
      {"kittaneh2002", 2, kittaneh2002},
      {"norm_additive", 2, norm_additive},
      {"th25_upper", 4, th25_upper},
      {"bk21_compare", 4, bk21_compare},
  };
}

} // namespace

double outcome_gap(const Outcome& o) noexcept {
  switch (o.relation) {
  case Relation::Upper: return o.rhs - o.lhs;
  case Relation::Lower: return o.lhs - o.rhs;
  case Relation::Equal: return -std::abs(o.lhs - o.rhs);
  }
  return 0.0;
}

bool outcome_passed(const Outcome& o, double tol) noexcept {
  return outcome_gap(o) >= -inequality_slack(o.lhs, o.rhs, tol);
}

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> registry = build_registry();
  return registry;
}

const CheckInfo& find_check(std::string_view name) {
  for (const auto& c : check_registry()) {
    if (c.name == name) return c;
  }
  throw UnknownCheck("unknown check '" + std::string(name) + "'");
}

std::vector<std::string> resolve_checks(const std::vector<std::string>& names) {
  std::vector<std::string> out;
  auto add = [&](const std::string& n) {
    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
  };
  for (const auto& n : names) {
    if (n == "all") {
      for (const auto& c : check_registry()) add(c.name);
    } else {
      add(find_check(n).name);
    }
  }
  return out;
}

std::vector<Outcome> run_check(const CheckInfo& check, std::span<const ComplexMatrix> operands, RadiusEvaluator& w) {
  if (operands.size() != check.arity) {
    throw DimMismatch("check '" + check.name + "' takes " + std::to_string(check.arity) + " operands");
  }
  for (const auto& op : operands) require_same_dim(operands[0], op, check.name.c_str());
  std::vector<Outcome> out;
  check.run(operands, w, out);
  return out;
}

std::pair<ComplexMatrix, ComplexMatrix> extremal_selfadjoint_pair(const ComplexMatrix& b, const ComplexMatrix& c) {
  require_same_dim(b, c, "extremal_selfadjoint_pair");
  const std::size_t n = b.dim();
  const ComplexMatrix hb = real_part(b);
  const HermitianEig eig = hermitian_eig(hb);
  // Column of the eigenvalue with the largest modulus (ties go to the top).
  const std::size_t k = std::abs(eig.values.front()) > std::abs(eig.values.back()) ? 0 : n - 1;
  const double beta = eig.values[k];

  ComplexMatrix proj(n); // u u*
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) proj(i, j) = eig.vectors(i, k) * std::conj(eig.vectors(j, k));
  }
  const ComplexMatrix rest = ComplexMatrix::identity(n) - proj;
  const ComplexMatrix squeezed = symmetrize(rest * real_part(c) * rest);
  const double sign = beta < 0.0 ? -1.0 : 1.0;
  const ComplexMatrix hc = squeezed + cplx(sign * (op_norm(squeezed) + 1.0)) * proj;
  return {hb, symmetrize(hc)};
}

} // namespace nradius
