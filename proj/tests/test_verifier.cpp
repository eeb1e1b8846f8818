#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "helmert/verifier.hpp"

using helmert::VerificationConfig;

namespace {

VerificationConfig small_config() {
  VerificationConfig cfg;
  cfg.n = 5;
  cfg.trials = 5000;
  cfg.seed = helmert::Seed{42};
  cfg.alpha = 0.001;
  cfg.bins = 4;
  cfg.workers = 1;
  return cfg;
}

double get(const helmert::StatList& list, const std::string& key) {
  for (const auto& [k, v] : list) {
    if (k == key) return v;
  }
  REQUIRE_MESSAGE(false, "missing key ", key);
  return 0.0;
}

}  // namespace

TEST_CASE("config validation") {
  VerificationConfig cfg = small_config();
  cfg.trials = 10;
  CHECK_THROWS_AS(helmert::validate(cfg), std::invalid_argument);
  cfg = small_config();
  cfg.alpha = 0.0;
  CHECK_THROWS_AS(helmert::validate(cfg), std::invalid_argument);
  cfg = small_config();
  cfg.alpha = 1.0;
  CHECK_THROWS_AS(helmert::validate(cfg), std::invalid_argument);
  cfg = small_config();
  cfg.bins = 1;
  CHECK_THROWS_AS(helmert::validate(cfg), std::invalid_argument);
  cfg = small_config();
  cfg.n = 1;
  CHECK_THROWS_AS(helmert::validate(cfg), std::invalid_argument);
  cfg = small_config();
  cfg.workers = 0;
  CHECK_THROWS_AS(helmert::validate(cfg), std::invalid_argument);
  cfg = small_config();
  cfg.trials = 1000;
  cfg.bins = 20;  // needs 5 * 400 = 2000 trials
  CHECK_THROWS_AS(helmert::validate(cfg), std::invalid_argument);
  CHECK_NOTHROW(helmert::validate(small_config()));
}

TEST_CASE("claims pass under the null at moderate scale") {
  const VerificationConfig cfg = small_config();
  const helmert::ClaimResult c1 = helmert::verify_claim1(cfg);
  CHECK(c1.claim_id == "T2.1");
  CHECK(c1.passed);
  CHECK(get(c1.p_values, "ks") >= cfg.alpha);

  const helmert::ClaimResult c2 = helmert::verify_claim2(cfg);
  CHECK(c2.claim_id == "T2.2");
  CHECK(c2.passed);
  CHECK(std::fabs(get(c2.statistics, "pearson_mean_w")) <=
        get(c2.statistics, "corr_bound"));

  const helmert::ClaimResult c3 = helmert::verify_claim3(cfg);
  CHECK(c3.claim_id == "T2.3");
  CHECK(c3.passed);

  const helmert::ClaimResult cc = helmert::verify_transformed_coords(cfg);
  CHECK(cc.claim_id == "coords");
  CHECK(cc.passed);
  CHECK(get(cc.statistics, "ylast_max_err") <= 1e-12);
  CHECK(get(cc.statistics, "devsum_max_rel_err") <= 1e-10);
  CHECK(cc.p_values.size() == 5);
}

TEST_CASE("general claims reduce to standardized ones at identity params") {
  VerificationConfig cfg = small_config();
  cfg.params = helmert::NormalParams(0.0, 1.0);
  const std::vector<helmert::ClaimResult> general =
      helmert::verify_general(cfg);
  REQUIRE(general.size() == 2);
  const helmert::ClaimResult c1 = helmert::verify_claim1(cfg);
  const helmert::ClaimResult c3 = helmert::verify_claim3(cfg);
  // Bit-for-bit identical statistics and p-values.
  CHECK(get(general[0].statistics, "ks_d") == get(c1.statistics, "ks_d"));
  CHECK(get(general[0].p_values, "ks") == get(c1.p_values, "ks"));
  CHECK(get(general[1].statistics, "ks_d") == get(c3.statistics, "ks_d"));
  CHECK(get(general[1].p_values, "ks") == get(c3.p_values, "ks"));
  CHECK(get(general[0].statistics, "reduction_max_rel_err") == 0.0);
  CHECK(get(general[1].statistics, "reduction_max_rel_err") == 0.0);
}

TEST_CASE("general claims hold away from identity params") {
  VerificationConfig cfg = small_config();
  cfg.params = helmert::NormalParams(3.0, 2.0);
  const std::vector<helmert::ClaimResult> general =
      helmert::verify_general(cfg);
  REQUIRE(general.size() == 2);
  CHECK(general[0].claim_id == "T1.1");
  CHECK(general[0].passed);
  CHECK(get(general[0].statistics, "reduction_max_rel_err") <= 1e-10);
  CHECK(general[1].claim_id == "T1.3");
  CHECK(general[1].passed);
  CHECK(get(general[1].statistics, "reduction_max_rel_err") <= 1e-10);

  VerificationConfig no_params = small_config();
  CHECK_THROWS_AS(helmert::verify_general(no_params), std::invalid_argument);
}

TEST_CASE("run_all aggregates and is deterministic") {
  const VerificationConfig cfg = small_config();
  const helmert::TheoremReport a = helmert::run_all(cfg);
  CHECK(a.exact_certification_passed);
  CHECK(a.certified_pairs == 15);
  REQUIRE(a.results.size() == 4);  // T2.1, T2.2, T2.3, coords
  CHECK(a.overall_pass);

  const helmert::TheoremReport b = helmert::run_all(cfg);
  REQUIRE(b.results.size() == a.results.size());
  for (std::size_t i = 0; i < a.results.size(); ++i) {
    CHECK(a.results[i].claim_id == b.results[i].claim_id);
    CHECK(a.results[i].passed == b.results[i].passed);
    REQUIRE(a.results[i].statistics.size() == b.results[i].statistics.size());
    for (std::size_t s = 0; s < a.results[i].statistics.size(); ++s) {
      CHECK(a.results[i].statistics[s].second ==
            b.results[i].statistics[s].second);
    }
    for (std::size_t s = 0; s < a.results[i].p_values.size(); ++s) {
      CHECK(a.results[i].p_values[s].second ==
            b.results[i].p_values[s].second);
    }
  }
}

TEST_CASE("worker count does not change any reported number") {
  VerificationConfig cfg = small_config();
  cfg.trials = 3000;  // not a chunk multiple
  const helmert::TheoremReport w1 = helmert::run_all(cfg);
  cfg.workers = 3;
  const helmert::TheoremReport w3 = helmert::run_all(cfg);
  REQUIRE(w1.results.size() == w3.results.size());
  for (std::size_t i = 0; i < w1.results.size(); ++i) {
    for (std::size_t s = 0; s < w1.results[i].statistics.size(); ++s) {
      CHECK(w1.results[i].statistics[s].second ==
            w3.results[i].statistics[s].second);
    }
    for (std::size_t s = 0; s < w1.results[i].p_values.size(); ++s) {
      CHECK(w1.results[i].p_values[s].second ==
            w3.results[i].p_values[s].second);
    }
  }
}

TEST_CASE("claim selection") {
  const VerificationConfig cfg = small_config();
  const helmert::TheoremReport r =
      helmert::run_selected(cfg, {"T2.3", "T2.1"});
  REQUIRE(r.results.size() == 2);
  // Canonical order regardless of request order.
  CHECK(r.results[0].claim_id == "T2.1");
  CHECK(r.results[1].claim_id == "T2.3");

  CHECK_THROWS_AS(helmert::run_selected(cfg, {"T9.9"}),
                  std::invalid_argument);
  CHECK_THROWS_AS(helmert::run_selected(cfg, {"T1.1"}),
                  std::invalid_argument);  // needs params
}

TEST_CASE("coords order cap") {
  VerificationConfig cfg = small_config();
  cfg.n = 65;
  CHECK_THROWS_AS(helmert::verify_transformed_coords(cfg),
                  std::invalid_argument);
}

TEST_CASE("negative controls flip exactly the targeted claims") {
  VerificationConfig cfg = small_config();
  cfg.trials = 100000;
  const helmert::NegativeControlReport rep =
      helmert::run_negative_controls(cfg);
  REQUIRE(rep.controls.size() == 3);
  CHECK(rep.overall_pass);

  const auto& scaling = rep.controls[0];
  CHECK(scaling.control == "wrong_scaling");
  CHECK(scaling.targeted_claim == "T2.1");
  CHECK(scaling.control_ok);
  REQUIRE(scaling.results.size() == 3);
  CHECK(!scaling.results[0].passed);
  CHECK(get(scaling.results[0].p_values, "ks") < 1e-6);
  CHECK(scaling.results[1].passed);
  CHECK(scaling.results[2].passed);

  const auto& dof = rep.controls[1];
  CHECK(dof.control == "wrong_dof");
  CHECK(dof.targeted_claim == "T2.3");
  CHECK(dof.control_ok);
  CHECK(dof.results[0].passed);
  CHECK(dof.results[1].passed);
  CHECK(!dof.results[2].passed);
  CHECK(get(dof.results[2].p_values, "ks") < 1e-6);

  const auto& shape = rep.controls[2];
  CHECK(shape.control == "non_normal_inputs");
  CHECK(shape.targeted_claim == "T2.2");
  CHECK(shape.control_ok);
  CHECK(shape.results[0].passed);
  CHECK(!shape.results[1].passed);
  const double worst =
      std::max(std::fabs(get(shape.results[1].statistics, "pearson_mean_w")),
               std::fabs(get(shape.results[1].statistics,
                             "pearson_mean_sq_w")));
  CHECK(worst > get(shape.results[1].statistics, "corr_bound"));
  CHECK(shape.results[2].passed);
}
