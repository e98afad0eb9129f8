#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nradius/spectral.hpp"

namespace nradius {

struct LemmaOptions {
  std::size_t trials = 10000;
  std::uint64_t seed = 1;
  std::size_t dim = 3;
  double tol = kInequalityTolerance;
};

/// Pass/fail tally of one lemma family. Every instance contributes one or
/// more claims; gaps follow the harness convention (>= 0 when the claim
/// holds exactly).
struct LemmaFamilyResult {
  std::string name;
  std::size_t claims = 0;
  std::size_t failures = 0;
  double min_gap = 0.0;
};

/// Families, in order: mixed_schwarz, buzano, lem5 (alpha grid plus the
/// alpha = 0 reduction to squared Buzano at 1e-12), power (r in {1, 2, 4},
/// r = 1 as an equality at 1e-12), kittaneh_sum (PSD pairs), lem4.
std::vector<LemmaFamilyResult> run_lemmas(const LemmaOptions& options);

} // namespace nradius
