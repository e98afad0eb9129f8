#include "nradius/blockops.hpp"

#include <algorithm>

#include "nradius/spectral.hpp"

namespace nradius {

namespace {

// Copies `block` into the (row, col) quadrant of the 2n matrix `out`.
void place(ComplexMatrix& out, const ComplexMatrix& block, std::size_t row, std::size_t col) {
  const std::size_t n = block.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(row * n + i, col * n + j) = block(i, j);
  }
}

} // namespace

OffDiagBlock make_offdiag(const ComplexMatrix& b, const ComplexMatrix& c) {
  require_same_dim(b, c, "make_offdiag");
  ComplexMatrix s(2 * b.dim());
  place(s, b, 0, 1);
  place(s, c, 1, 0);
  return {b, c, std::move(s)};
}

FullBlock make_full(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                    const ComplexMatrix& d) {
  require_same_dim(a, b, "make_full");
  require_same_dim(a, c, "make_full");
  require_same_dim(a, d, "make_full");
  ComplexMatrix t(2 * a.dim());
  place(t, a, 0, 0);
  place(t, b, 0, 1);
  place(t, c, 1, 0);
  place(t, d, 1, 1);
  return {a, b, c, d, std::move(t)};
}

Comparison check_block_diag_radius(const ComplexMatrix& a, const ComplexMatrix& d, RadiusEvaluator& w) {
  const ComplexMatrix zero(a.dim());
  const FullBlock block = make_full(a, zero, zero, d);
  return {w(block.assembled), std::max(w(a), w(d))};
}

Comparison check_pinched_radius(const ComplexMatrix& a, const ComplexMatrix& b, RadiusEvaluator& w) {
  const FullBlock block = make_full(a, b, b, a);
  return {w(block.assembled), std::max(w(a + b), w(a - b))};
}

BlockNorms check_block_norms(const ComplexMatrix& a, const ComplexMatrix& d) {
  const ComplexMatrix zero(a.dim());
  const FullBlock diag = make_full(a, zero, zero, d);
  const OffDiagBlock anti = make_offdiag(a, d);
  return {op_norm(diag.assembled), op_norm(anti.assembled), std::max(op_norm(a), op_norm(d))};
}

PositiveOffDiag positive_offdiag_radius(const ComplexMatrix& b, const ComplexMatrix& c, RadiusEvaluator& w) {
  require_same_dim(b, c, "positive_offdiag_radius");
  require_psd(b, "positive_offdiag_radius: B");
  require_psd(c, "positive_offdiag_radius: C");
  return {w(make_offdiag(b, c).assembled), 0.5 * op_norm(b + c)};
}

} // namespace nradius
