#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nradius/matrix.hpp"

namespace nradius {

enum class EnsembleKind { Ginibre, Hermitian, PSD, Nilpotent2, Normal, Diagonal, Unitary };

inline constexpr EnsembleKind kAllEnsembles[] = {
    EnsembleKind::Ginibre, EnsembleKind::Hermitian, EnsembleKind::PSD,     EnsembleKind::Nilpotent2,
    EnsembleKind::Normal,  EnsembleKind::Diagonal,  EnsembleKind::Unitary,
};

const char* to_string(EnsembleKind kind) noexcept;
/// Case-insensitive; throws UsageError on unknown names.
EnsembleKind parse_ensemble_kind(std::string_view name);

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::Ginibre;
  std::size_t dim = 1;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  double scale = 1.0; // entry standard deviation
};

/// Throws UsageError unless dim, trials >= 1 and scale > 0.
void validate(const EnsembleSpec& spec);

/// Operand `slot` of sample `index`. Keyed by (seed, kind, dim, index, slot)
/// alone, so any sample regenerates without replaying the stream and does
/// not depend on `trials`.
ComplexMatrix sample(const EnsembleSpec& spec, std::size_t index, std::size_t slot = 0);

/// Complex Gaussian vector of length spec.dim, keyed like sample() but
/// independent of spec.kind's matrices.
CVector gaussian_vector(const EnsembleSpec& spec, std::size_t index, std::size_t slot = 0);

/// Slot-0 operands of samples 0..trials-1.
std::vector<ComplexMatrix> generate(const EnsembleSpec& spec);

} // namespace nradius
