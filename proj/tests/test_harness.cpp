#include <doctest.h>

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "nradius/error.hpp"
#include "nradius/suite.hpp"
#include "oracles.hpp"

using namespace nradius;

TEST_CASE("ensemble samples are reproducible and independent of trials") {
  const EnsembleSpec a{EnsembleKind::Diagonal, 2, 1, 42, 1.0};
  CHECK(generate(a)[0] == generate(a)[0]);
  const EnsembleSpec many{EnsembleKind::Ginibre, 3, 50, 7, 1.0};
  const EnsembleSpec few{EnsembleKind::Ginibre, 3, 5, 7, 1.0};
  CHECK(generate(many)[4] == generate(few)[4]);
  CHECK(sample(many, 3, 0) != sample(many, 3, 1));
  CHECK(sample(many, 3, 0) != sample({EnsembleKind::Ginibre, 3, 5, 8, 1.0}, 3, 0));
}

TEST_CASE("ensemble kinds have their defining structure") {
  for (std::size_t dim : {1u, 2u, 3u, 5u}) {
    for (std::size_t i = 0; i < 20; ++i) {
      const ComplexMatrix nil = sample({EnsembleKind::Nilpotent2, dim, 20, 3, 1.0}, i);
      CHECK(op_norm(nil * nil) <= 1e-12);

      const ComplexMatrix psd = sample({EnsembleKind::PSD, dim, 20, 3, 1.0}, i);
      CHECK(hermitian_defect(psd) == 0.0);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(oracle::to_eigen(psd));
      CHECK(es.eigenvalues().minCoeff() >= -1e-12);

      const ComplexMatrix herm = sample({EnsembleKind::Hermitian, dim, 20, 3, 1.0}, i);
      CHECK(hermitian_defect(herm) == 0.0);

      const ComplexMatrix u = sample({EnsembleKind::Unitary, dim, 20, 3, 1.0}, i);
      CHECK(max_abs_entry(gram(u) - ComplexMatrix::identity(dim)) <= 1e-12);

      const ComplexMatrix n = sample({EnsembleKind::Normal, dim, 20, 3, 1.0}, i);
      CHECK(max_abs_entry(gram(n) - cogram(n)) <= 1e-12 * (1.0 + max_abs_entry(gram(n))));

      const ComplexMatrix d = sample({EnsembleKind::Diagonal, dim, 20, 3, 1.0}, i);
      for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
          if (r != c) CHECK(d(r, c) == cplx(0));
        }
      }
    }
  }
}

TEST_CASE("ensemble names and validation") {
  CHECK(parse_ensemble_kind("Ginibre") == EnsembleKind::Ginibre);
  CHECK(parse_ensemble_kind("nilpotent2") == EnsembleKind::Nilpotent2);
  CHECK_THROWS_AS(parse_ensemble_kind("gaussian"), UsageError);
  CHECK_THROWS_AS(validate({EnsembleKind::Ginibre, 0, 1, 0, 1.0}), UsageError);
  CHECK_THROWS_AS(validate({EnsembleKind::Ginibre, 1, 0, 0, 1.0}), UsageError);
  CHECK_THROWS_AS(validate({EnsembleKind::Ginibre, 1, 1, 0, -1.0}), UsageError);
}

TEST_CASE("outcome gap convention") {
  CHECK(outcome_gap({"u", Relation::Upper, 1.0, 3.0}) == 2.0);
  CHECK(outcome_gap({"l", Relation::Lower, 1.0, 3.0}) == -2.0);
  CHECK(outcome_gap({"e", Relation::Equal, 1.0, 3.0}) == -2.0);
  CHECK(outcome_passed({"u", Relation::Upper, 1.0 + 1e-10, 1.0}, 1e-9));
  CHECK_FALSE(outcome_passed({"u", Relation::Upper, 1.0 + 1e-8, 1.0}, 1e-9));
  CHECK_FALSE(outcome_passed({"l", Relation::Lower, 1.0, 3.0}, 1e-9));
}

TEST_CASE("check registry") {
  CHECK_THROWS_AS(find_check("bogus"), UnknownCheck);
  CHECK(resolve_checks({"all"}).size() == check_registry().size());
  CHECK(resolve_checks({"th1_upper", "th1_upper"}).size() == 1);
  CHECK_THROWS_AS(resolve_checks({"th1_upper", "bogus"}), UnknownCheck);
  RadiusEvaluator w;
  const ComplexMatrix one = ComplexMatrix::identity(2);
  CHECK_THROWS_AS(run_check(find_check("th1_upper"), std::vector<ComplexMatrix>{one}, w), DimMismatch);
}

TEST_CASE("run_suite on the spec examples") {
  SuiteResult r = run_suite({{EnsembleKind::Ginibre, 3, 500, 1, 1.0}}, {"eqv_sandwich"});
  REQUIRE(r.summaries.size() == 1);
  CHECK(r.summaries[0].failures == 0);
  CHECK(r.summaries[0].records == 1000);

  r = run_suite({{EnsembleKind::Nilpotent2, 4, 50, 2, 1.0}}, {"nilpotent_half_norm"});
  CHECK(r.summaries[0].failures == 0);
  CHECK(r.summaries[0].records == 50);
  CHECK(std::abs(r.summaries[0].min_gap) <= 1e-8);

  r = run_suite({}, {"all"});
  CHECK(r.summaries.empty());
  CHECK(r.records.empty());
  CHECK_THROWS_AS(run_suite({{EnsembleKind::Ginibre, 2, 1, 1, 1.0}}, {"bogus"}), UnknownCheck);
}

TEST_CASE("every check passes on a small mixed suite") {
  std::vector<EnsembleSpec> specs;
  for (EnsembleKind kind : kAllEnsembles) {
    for (std::size_t dim : {1u, 2u, 3u}) specs.push_back({kind, dim, 4, 5, 1.0});
  }
  const SuiteResult r = run_suite(specs, {"all"});
  for (const auto& s : r.summaries) {
    INFO(s.check << " " << s.ensemble << " dim " << s.dim);
    CHECK(s.failures == 0);
  }
  // Premise-gated checks fire where their premise is structural.
  std::size_t nil_records = 0;
  std::size_t normal_records = 0;
  for (const auto& s : r.summaries) {
    if (s.check == "nilpotent_half_norm" && s.ensemble == "nilpotent2") nil_records += s.records;
    if (s.check == "normal_norm" && s.ensemble == "normal") normal_records += s.records;
  }
  CHECK(nil_records == 12);
  CHECK(normal_records == 12);
}

TEST_CASE("summaries match their records") {
  const SuiteResult r = run_suite({{EnsembleKind::Hermitian, 2, 30, 9, 1.0}}, {"th5_lower", "th2_upper"});
  REQUIRE(r.summaries.size() == 2);
  for (const auto& s : r.summaries) {
    double min_gap = 1e300;
    std::size_t count = 0;
    for (const auto& rec : r.records) {
      if (rec.check_name != s.check) continue;
      ++count;
      min_gap = std::min(min_gap, rec.gap);
      CHECK(rec.passed == (rec.gap >= -inequality_slack(rec.lhs, rec.rhs)));
    }
    CHECK(count == s.records);
    CHECK(min_gap == s.min_gap);
  }
}

TEST_CASE("failing records are reproducible from seed and index") {
  const EnsembleSpec spec{EnsembleKind::Ginibre, 3, 10, 77, 1.0};
  const SuiteResult r = run_suite({spec}, {"th1_upper"});
  const auto& rec = r.records[6];
  RadiusEvaluator w;
  const std::vector<ComplexMatrix> ops{sample(spec, rec.sample_index, 0), sample(spec, rec.sample_index, 1)};
  const auto again = run_check(find_check("th1_upper"), ops, w);
  CHECK(again[0].lhs == rec.lhs);
  CHECK(again[0].rhs == rec.rhs);
}

TEST_CASE("sharpness probe") {
  const EnsembleSpec spec{EnsembleKind::Ginibre, 3, 20, 4, 1.0};
  for (const char* name : {"th1_upper", "th1eqn_upper", "th2_upper", "th3_lower", "th4_lower", "th6_lower"}) {
    const SharpnessResult s = sharpness_probe(name, spec);
    REQUIRE(s.designated_gap.has_value());
    CHECK(std::abs(*s.designated_gap) <= 1e-8);
  }
  const SharpnessResult th5 = sharpness_probe("th5_lower", spec);
  REQUIRE(th5.designated_gap.has_value());
  CHECK(std::abs(*th5.designated_gap) <= 1e-8);

  const SharpnessResult th2 = sharpness_probe("th2_upper", spec);
  CHECK(th2.tightest.gap >= -inequality_slack(th2.tightest.lhs, th2.tightest.rhs));
  CHECK_FALSE(sharpness_probe("offdiag_swap", spec).designated_gap.has_value());
  CHECK_THROWS_AS(sharpness_probe("bogus", spec), UnknownCheck);
}

TEST_CASE("reports are deterministic and formatted to 12 digits") {
  const EnsembleSpec spec{EnsembleKind::Unitary, 2, 6, 3, 1.0};
  const SuiteResult a = run_suite({spec}, {"th1_upper", "prop33"});
  const SuiteResult b = run_suite({spec}, {"th1_upper", "prop33"});
  std::ostringstream ca, cb, ja, jb;
  write_csv(ca, a.records);
  write_csv(cb, b.records);
  write_json(ja, a);
  write_json(jb, b);
  CHECK(ca.str() == cb.str());
  CHECK(ja.str() == jb.str());
  CHECK(ca.str().rfind("check_name,ensemble,dim,sample_index,lhs,rhs,gap,passed\n", 0) == 0);
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  const auto doc = nlohmann::json::parse(ja.str());
  CHECK(doc["summaries"].size() == 2);
  CHECK(doc["failures"].empty());
}
