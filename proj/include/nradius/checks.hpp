#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nradius/matrix.hpp"
#include "nradius/numradius.hpp"

namespace nradius {

/// How lhs (the exact quantity) relates to rhs (the bound) in a claim.
enum class Relation { Upper, Lower, Equal };

/// One claimed relation evaluated on one sample.
struct Outcome {
  std::string label;
  Relation relation;
  double lhs;
  double rhs;
};

/// rhs - lhs for Upper, lhs - rhs for Lower, -|lhs - rhs| for Equal.
double outcome_gap(const Outcome& o) noexcept;
/// gap >= -tol * (1 + max(|lhs|, |rhs|)).
bool outcome_passed(const Outcome& o, double tol) noexcept;

using CheckFn = std::function<void(std::span<const ComplexMatrix>, RadiusEvaluator&, std::vector<Outcome>&)>;

/// A named family of claims taking `arity` sampled operands. Checks may map
/// their operands (to |X| or Re X) when the claim needs PSD or self-adjoint
/// input, and may emit nothing when a sample misses the claim's premise.
struct CheckInfo {
  std::string name;
  std::size_t arity;
  CheckFn run;
};

const std::vector<CheckInfo>& check_registry();

/// Throws UnknownCheck.
const CheckInfo& find_check(std::string_view name);

/// Expands "all" and validates every other name. Order is preserved,
/// duplicates dropped.
std::vector<std::string> resolve_checks(const std::vector<std::string>& names);

/// Evaluates a check on explicit operands (operands.size() must equal the
/// arity, otherwise DimMismatch).
std::vector<Outcome> run_check(const CheckInfo& check, std::span<const ComplexMatrix> operands, RadiusEvaluator& w);

/// The self-adjoint pair used by the norm_additive check: B' = Re(B) and a
/// C' built from Re(C) sharing B's extremal eigenvector, so that
/// ||B' + C'|| = ||B'|| + ||C'||.
std::pair<ComplexMatrix, ComplexMatrix> extremal_selfadjoint_pair(const ComplexMatrix& b, const ComplexMatrix& c);

} // namespace nradius
