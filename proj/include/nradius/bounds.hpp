#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "nradius/matrix.hpp"
#include "nradius/numradius.hpp"

namespace nradius {

enum class BoundKind { Upper, Lower };

const char* to_string(BoundKind kind) noexcept;

/// One bound evaluated on concrete operands. `exponent` is the power of w
/// being bounded (1, 2 or 4); `components` holds the intermediate quantities
/// of the formula.
struct BoundReport {
  std::string name;
  BoundKind kind = BoundKind::Upper;
  int exponent = 1;
  double value = 0.0;
  std::optional<double> alpha;
  std::map<std::string, double> components;
};

inline constexpr std::array<double, 5> kDefaultAlphas{0.0, 0.25, 0.5, 0.75, 1.0};

/// Throws AlphaOutOfRange unless 0 <= alpha <= 1.
void require_alpha(double alpha);

/// w([[0, B], [C, 0]]).
double offdiag_radius(const ComplexMatrix& b, const ComplexMatrix& c, RadiusEvaluator& w);

// Shorthands used below, with S = [[0, B], [C, 0]]:
//   a  = ||B + C*||,  b = ||B - C*||
//   Q2 = max{|| |B|^2 + |C*|^2 ||, || |B*|^2 + |C|^2 ||}
//   Q4 = max{|| |B|^4 + |C*|^4 ||, || |B*|^4 + |C|^4 ||}
//   m  = max{w(BC), w(CB)}
// Squared and fourth powers of absolute values are formed from B*B and BB*
// directly, without square roots.

/// w(S) <= max{||B||, ||C||}/2 + max{r^{1/2}(|B||C*|), r^{1/2}(|B*||C|)}/2.
BoundReport bound_th1_upper(const ComplexMatrix& b, const ComplexMatrix& c);

/// w(S) <= max{|| |C| + |B*| ||, || |B| + |C*| ||}/2.
BoundReport bound_th1eqn_upper(const ComplexMatrix& b, const ComplexMatrix& c);

/// w(S) >= max{||B||, ||C||}/2 + |a - b|/4.
BoundReport bound_th5_lower(const ComplexMatrix& b, const ComplexMatrix& c);

/// w(S)^2 <= Q2/4 + max{w(|B||C*|), w(|C||B*|)}/2.
BoundReport bound_th2_upper_sq(const ComplexMatrix& b, const ComplexMatrix& c, RadiusEvaluator& w);

/// w(S)^2 >= Q2/4 + |a^2 - b^2|/8.
BoundReport bound_th6_lower_sq(const ComplexMatrix& b, const ComplexMatrix& c);

/// The two lines of a lower-bound chain w^2 >= first >= second.
struct BoundChain {
  double first;
  double second;
};

/// w(S)^2 >= (max{a^2, b^2} + ab)/8 >= Q2/4. Value is the first line.
BoundReport bound_th3_lower_sq(const ComplexMatrix& b, const ComplexMatrix& c);
BoundChain bound_th3_chain(const ComplexMatrix& b, const ComplexMatrix& c);

/// w(S)^2 >= (a^4 + b^4)^{1/2} / (4 sqrt 2) >= Q2/4. Value is the first line.
BoundReport bound_th4_lower_sq(const ComplexMatrix& b, const ComplexMatrix& c);
BoundChain bound_th4_chain(const ComplexMatrix& b, const ComplexMatrix& c);

/// w(S)^4 <= (1+alpha)/8 Q4 + (1-alpha)/4 m^2 + Q2 m / 4.
BoundReport bound_th7_upper_4(const ComplexMatrix& b, const ComplexMatrix& c, double alpha, RadiusEvaluator& w);

/// w(B)^4 <= (1+alpha)/8 N4 + (1-alpha)/4 w(B^2)^2 + N2 w(B^2) / 4 with
/// N2 = || |B|^2 + |B*|^2 ||, N4 = || |B|^4 + |B*|^4 ||.
BoundReport bound_cor1_upper_4(const ComplexMatrix& b, double alpha, RadiusEvaluator& w);

/// Successive relaxations of the previous bound, each no smaller:
/// w(B^2) -> ||B^2||, then ||B^2|| -> N2/2, ending at the cap N4/2.
struct Cor1Chain {
  double cor1;
  double with_norm_square;
  double with_half_sum;
  double cap;
};
Cor1Chain cor1_chain(const ComplexMatrix& b, double alpha, RadiusEvaluator& w);

/// w([[A, B], [C, D]])^4 <= 8 max{w(A)^4, w(D)^4} + (1+alpha) Q4
///                         + 2(1-alpha) m^2 + 2 Q2 m.
BoundReport bound_th25_upper_4(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                               const ComplexMatrix& d, double alpha, RadiusEvaluator& w);

/// The weaker comparison bound: the last two terms above become (3-alpha) Q2 m.
BoundReport bound_bk21_upper_4(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                               const ComplexMatrix& d, double alpha, RadiusEvaluator& w);

/// For self-adjoint B, C: max{||B + C||^2, ||B - C||^2} <= ||B^2 + C^2|| + 2 w(|B||C|).
/// Throws NotHermitian when either operand is further than 1e-8 from
/// self-adjoint.
BoundReport bound_prop33(const ComplexMatrix& b, const ComplexMatrix& c, RadiusEvaluator& w);

/// For PSD B, C: ||B + C|| <= (||B|| + ||C|| + ((||B|| - ||C||)^2 + 4 ||B^{1/2} C^{1/2}||^2)^{1/2}) / 2.
/// Throws NotPSD.
double kittaneh2002_bound(const ComplexMatrix& b, const ComplexMatrix& c);

/// Equality w(S)^2 = Q2/4 together with its sufficient condition
/// |B||C*| = |B*||C| = 0 and its necessary condition a = b.
struct EqualityConditions {
  double w_sq;
  double quarter_q2;
  double norm_sum; // a
  double norm_diff; // b
  double cross_b_cstar; // || |B||C*| ||
  double cross_bstar_c; // || |B*||C| ||
  bool equality;
  bool sufficient;
  bool necessary;
};
EqualityConditions check_equality_conditions(const ComplexMatrix& b, const ComplexMatrix& c, RadiusEvaluator& w);

/// For PSD B, C: (i) ||B - C|| <= ||B + C||, and
/// (ii) max{||B||, ||C||} <= ||B + C||/2 + ||B - C||/2. Throws NotPSD.
struct Prop31 {
  double norm_diff;
  double norm_sum;
  double max_norm;
  double half_sum_plus_half_diff;
  bool first_holds;
  bool second_holds;
};
Prop31 check_prop31(const ComplexMatrix& b, const ComplexMatrix& c);

} // namespace nradius
