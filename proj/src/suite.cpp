#include "nradius/suite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <map>

#include <json.hpp>

#include "nradius/error.hpp"

namespace nradius {

namespace {

std::uint64_t operands_digest(const std::vector<ComplexMatrix>& ops) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& m : ops) h = digest(m, h);
  return h;
}

std::vector<ComplexMatrix> draw(const EnsembleSpec& spec, std::size_t index, std::size_t arity) {
  std::vector<ComplexMatrix> ops;
  ops.reserve(arity);
  for (std::size_t slot = 0; slot < arity; ++slot) ops.push_back(sample(spec, index, slot));
  return ops;
}

VerificationRecord make_record(const Outcome& o, const EnsembleSpec& spec, std::size_t index, std::uint64_t dig,
                               double tol) {
  VerificationRecord r;
  r.check_name = o.label;
  r.ensemble = to_string(spec.kind);
  r.dim = spec.dim;
  r.seed = spec.seed;
  r.sample_index = index;
  r.lhs = o.lhs;
  r.rhs = o.rhs;
  r.gap = outcome_gap(o);
  r.passed = outcome_passed(o, tol);
  r.operands_digest = dig;
  return r;
}

GapSummary summarize(const std::string& check, const EnsembleSpec& spec,
                     const std::vector<VerificationRecord>& records) {
  GapSummary s;
  s.check = check;
  s.ensemble = to_string(spec.kind);
  s.dim = spec.dim;
  s.seed = spec.seed;
  s.trials = spec.trials;
  s.records = records.size();
  s.min_gap = std::numeric_limits<double>::quiet_NaN();
  s.mean_gap = std::numeric_limits<double>::quiet_NaN();
  double total = 0.0;
  for (const auto& r : records) {
    if (!r.passed) ++s.failures;
    total += r.gap;
    if (std::isnan(s.min_gap) || r.gap < s.min_gap) {
      s.min_gap = r.gap;
      s.argmin_digest = r.operands_digest;
      s.argmin_sample = r.sample_index;
    }
  }
  if (!records.empty()) s.mean_gap = total / static_cast<double>(records.size());
  return s;
}

double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

nlohmann::json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round12(x);
}

std::string hex(std::uint64_t x) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

} // namespace

std::size_t SuiteResult::failures() const noexcept {
  std::size_t n = 0;
  for (const auto& s : summaries) n += s.failures;
  return n;
}

SuiteResult run_suite(const std::vector<EnsembleSpec>& specs, const std::vector<std::string>& checks,
                      const SuiteOptions& options) {
  const std::vector<std::string> names = resolve_checks(checks);
  for (const auto& spec : specs) validate(spec);

  // bucket[check][spec] collects records in sample order.
  std::vector<std::vector<std::vector<VerificationRecord>>> bucket(
      names.size(), std::vector<std::vector<VerificationRecord>>(specs.size()));

  for (std::size_t s = 0; s < specs.size(); ++s) {
    const EnsembleSpec& spec = specs[s];
    for (std::size_t i = 0; i < spec.trials; ++i) {
      // One evaluator per sample: checks sharing a radius compute it once.
      RadiusEvaluator w(options.radius_tol);
      std::map<std::size_t, std::pair<std::vector<ComplexMatrix>, std::uint64_t>> operands;
      for (std::size_t c = 0; c < names.size(); ++c) {
        const CheckInfo& check = find_check(names[c]);
        auto it = operands.find(check.arity);
        if (it == operands.end()) {
          auto ops = draw(spec, i, check.arity);
          const std::uint64_t dig = operands_digest(ops);
          it = operands.emplace(check.arity, std::make_pair(std::move(ops), dig)).first;
        }
        for (const Outcome& o : run_check(check, it->second.first, w)) {
          bucket[c][s].push_back(make_record(o, spec, i, it->second.second, options.tol));
        }
      }
    }
  }

  SuiteResult result;
  for (std::size_t c = 0; c < names.size(); ++c) {
    for (std::size_t s = 0; s < specs.size(); ++s) {
      result.summaries.push_back(summarize(names[c], specs[s], bucket[c][s]));
      for (auto& r : bucket[c][s]) result.records.push_back(std::move(r));
    }
  }
  return result;
}

SharpnessResult sharpness_probe(const std::string& check_name, const EnsembleSpec& spec,
                                const SuiteOptions& options) {
  const CheckInfo& check = find_check(check_name);
  const SuiteResult scan = run_suite({spec}, {check_name}, options);

  SharpnessResult out;
  if (!scan.records.empty()) {
    out.tightest = *std::min_element(scan.records.begin(), scan.records.end(),
                                     [](const auto& x, const auto& y) { return x.gap < y.gap; });
  }

  static const char* const zero_c_checks[] = {"th1_upper", "th1eqn_upper", "th2_upper",
                                              "th3_lower", "th4_lower",    "th6_lower"};
  std::vector<ComplexMatrix> ops;
  if (std::find(std::begin(zero_c_checks), std::end(zero_c_checks), check_name) != std::end(zero_c_checks)) {
    ops = {sample(spec, 0, 0), ComplexMatrix(spec.dim)};
    out.designated_instance = "B = sample 0, C = 0";
  } else if (check_name == "th5_lower") {
    const std::size_t n = std::max<std::size_t>(spec.dim, 2);
    ops = {ComplexMatrix::unit(n, 1, 2), ComplexMatrix::unit(n, 2, 1)};
    out.designated_instance = "B = E12, C = E21";
  }
  if (!ops.empty()) {
    RadiusEvaluator w(options.radius_tol);
    const auto outcomes = run_check(check, ops, w);
    // The first outcome is the bound's own inequality.
    out.designated_gap = outcome_gap(outcomes.front());
  }
  return out;
}

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void write_csv(std::ostream& os, const std::vector<VerificationRecord>& records) {
  os << "check_name,ensemble,dim,sample_index,lhs,rhs,gap,passed\n";
  for (const auto& r : records) {
    os << r.check_name << ',' << r.ensemble << ',' << r.dim << ',' << r.sample_index << ','
       << format_number(r.lhs) << ',' << format_number(r.rhs) << ',' << format_number(r.gap) << ','
       << (r.passed ? "true" : "false") << '\n';
  }
}

void write_json(std::ostream& os, const SuiteResult& result) {
  nlohmann::ordered_json doc;
  doc["summaries"] = nlohmann::ordered_json::array();
  for (const auto& s : result.summaries) {
    nlohmann::ordered_json j;
    j["check_name"] = s.check;
    j["ensemble"] = s.ensemble;
    j["dim"] = s.dim;
    j["seed"] = s.seed;
    j["trials"] = s.trials;
    j["records"] = s.records;
    j["failures"] = s.failures;
    j["min_gap"] = number(s.min_gap);
    j["mean_gap"] = number(s.mean_gap);
    j["argmin_digest"] = hex(s.argmin_digest);
    j["argmin_sample"] = s.argmin_sample;
    doc["summaries"].push_back(std::move(j));
  }
  doc["failures"] = nlohmann::ordered_json::array();
  for (const auto& r : result.records) {
    if (r.passed) continue;
    nlohmann::ordered_json j;
    j["check_name"] = r.check_name;
    j["ensemble"] = r.ensemble;
    j["dim"] = r.dim;
    j["seed"] = r.seed;
    j["sample_index"] = r.sample_index;
    j["lhs"] = number(r.lhs);
    j["rhs"] = number(r.rhs);
    j["gap"] = number(r.gap);
    j["operands_digest"] = hex(r.operands_digest);
    doc["failures"].push_back(std::move(j));
  }
  os << doc.dump(2) << '\n';
}

} // namespace nradius
