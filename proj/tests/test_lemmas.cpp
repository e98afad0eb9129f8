#include <doctest.h>

#include "nradius/error.hpp"
#include "nradius/lemmas.hpp"

using namespace nradius;

TEST_CASE("lemma families pass on random instances") {
  for (std::size_t dim : {1u, 2u, 4u}) {
    const auto results = run_lemmas(LemmaOptions{1000, 5, dim});
    REQUIRE(results.size() == 6);
    const char* names[] = {"mixed_schwarz", "buzano", "lem5", "power", "kittaneh_sum", "lem4"};
    for (std::size_t k = 0; k < results.size(); ++k) {
      INFO(results[k].name << " dim " << dim);
      CHECK(results[k].name == names[k]);
      CHECK(results[k].failures == 0);
      CHECK(results[k].claims > 0);
    }
  }
}

TEST_CASE("Buzano instances reach equality") {
  // Half the instances use the extremal unit vector, so the tightest gap is
  // at rounding level.
  const auto results = run_lemmas(LemmaOptions{200, 3, 3});
  CHECK(results[1].min_gap <= 1e-12);
  CHECK(results[1].min_gap >= -1e-12);
}

TEST_CASE("lemma options are validated") {
  CHECK_THROWS_AS(run_lemmas(LemmaOptions{0, 1, 3}), UsageError);
  CHECK_THROWS_AS(run_lemmas(LemmaOptions{10, 1, 0}), UsageError);
}
