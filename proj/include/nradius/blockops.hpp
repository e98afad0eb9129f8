#pragma once

#include "nradius/matrix.hpp"
#include "nradius/numradius.hpp"

namespace nradius {

/// [[0, B], [C, 0]] assembled densely at dimension 2n.
struct OffDiagBlock {
  ComplexMatrix b;
  ComplexMatrix c;
  ComplexMatrix assembled;
};

/// [[A, B], [C, D]] assembled densely at dimension 2n.
struct FullBlock {
  ComplexMatrix a;
  ComplexMatrix b;
  ComplexMatrix c;
  ComplexMatrix d;
  ComplexMatrix assembled;
};

OffDiagBlock make_offdiag(const ComplexMatrix& b, const ComplexMatrix& c);
FullBlock make_full(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                    const ComplexMatrix& d);

/// Both sides of a claimed identity; the caller decides pass/fail.
struct Comparison {
  double lhs;
  double rhs;
};

/// lhs = w([[A, 0], [0, D]]), rhs = max{w(A), w(D)}.
Comparison check_block_diag_radius(const ComplexMatrix& a, const ComplexMatrix& d, RadiusEvaluator& w);

/// lhs = w([[A, B], [B, A]]), rhs = max{w(A + B), w(A - B)}.
Comparison check_pinched_radius(const ComplexMatrix& a, const ComplexMatrix& b, RadiusEvaluator& w);

struct BlockNorms {
  double norm_diag;     // ||[[A, 0], [0, D]]||
  double norm_antidiag; // ||[[0, A], [D, 0]]||
  double rhs;           // max{||A||, ||D||}
};
BlockNorms check_block_norms(const ComplexMatrix& a, const ComplexMatrix& d);

/// For PSD B, C: w([[0, B], [C, 0]]) and ||B + C|| / 2. Throws NotPSD.
struct PositiveOffDiag {
  double w_value;
  double half_sum_norm;
};
PositiveOffDiag positive_offdiag_radius(const ComplexMatrix& b, const ComplexMatrix& c, RadiusEvaluator& w);

} // namespace nradius
