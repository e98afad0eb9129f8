#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "nradius/checks.hpp"
#include "nradius/ensemble.hpp"
#include "nradius/spectral.hpp"

namespace nradius {

/// One claim checked on one sample.
struct VerificationRecord {
  std::string check_name; // outcome label
  std::string ensemble;
  std::size_t dim = 0;
  std::uint64_t seed = 0;
  std::size_t sample_index = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
  bool passed = true;
  std::uint64_t operands_digest = 0;
};

/// Aggregate over every record of one (check, spec) pair. min_gap and
/// mean_gap are NaN when no sample met the check's premise.
struct GapSummary {
  std::string check;
  std::string ensemble;
  std::size_t dim = 0;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t records = 0;
  std::size_t failures = 0;
  double min_gap = 0.0;
  double mean_gap = 0.0;
  std::uint64_t argmin_digest = 0;
  std::size_t argmin_sample = 0;
};

struct SuiteOptions {
  double tol = kInequalityTolerance;  // inequality slack
  double radius_tol = kInnerRadiusTol; // numerical-radius certificates
};

struct SuiteResult {
  std::vector<VerificationRecord> records; // check-major, then spec, then sample
  std::vector<GapSummary> summaries;       // one per (check, spec)

  std::size_t failures() const noexcept;
};

/// Runs every named check on every sample of every spec. Operand k of
/// sample i is sample(spec, i, k). Failing claims are recorded, never thrown.
/// Throws UnknownCheck on unknown names ("all" selects every check).
SuiteResult run_suite(const std::vector<EnsembleSpec>& specs, const std::vector<std::string>& checks,
                      const SuiteOptions& options = {});

struct SharpnessResult {
  VerificationRecord tightest;           // smallest gap over the ensemble
  std::optional<double> designated_gap;  // gap at the known equality instance
  std::string designated_instance;       // description of that instance
};

/// Tightest sample of `check_name` over `spec`, plus the gap at the check's
/// designated equality instance when it has one (C = 0 with B = sample 0
/// for th1/th1eqn/th2/th3/th4/th6; B = E12, C = E21 for th5).
SharpnessResult sharpness_probe(const std::string& check_name, const EnsembleSpec& spec,
                                const SuiteOptions& options = {});

/// %.12g formatting used by every report.
std::string format_number(double x);

void write_csv(std::ostream& os, const std::vector<VerificationRecord>& records);
/// {"summaries": [...], "failures": [...]}.
void write_json(std::ostream& os, const SuiteResult& result);

} // namespace nradius
