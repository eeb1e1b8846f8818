#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "helmert/matrix.hpp"
#include "helmert/sampling.hpp"

namespace helmert {

struct VerificationConfig {
  std::int64_t n = 5;
  std::int64_t trials = 50000;
  Seed seed{42};
  double alpha = 0.001;
  std::int64_t bins = 4;
  // When set, the general-parameter claims (T1.1, T1.3) run too.
  std::optional<NormalParams> params;
  int workers = 1;
};

void validate(const VerificationConfig& cfg);

// Ordered key/value stats so reports serialize in a stable field order.
using StatList = std::vector<std::pair<std::string, double>>;

struct ClaimResult {
  std::string claim_id;   // "T2.1", "T2.2", "T2.3", "T1.1", "T1.3", "coords"
  std::string statement;  // plain-language version of what was tested
  StatList statistics;
  StatList p_values;
  bool passed = false;
};

// sqrt(n) * mean(Z) against N(0,1) (KS).
ClaimResult verify_claim1(const VerificationConfig& cfg);
// Independence of mean(Z) and W (two Pearson checks + contingency test).
ClaimResult verify_claim2(const VerificationConfig& cfg);
// W against chi-square(n-1) (KS).
ClaimResult verify_claim3(const VerificationConfig& cfg);
// General-parameter claims T1.1 and T1.3; requires cfg.params. Also checks
// per trial that the general statistics reduce to the standardized ones.
std::vector<ClaimResult> verify_general(const VerificationConfig& cfg);
// Coordinates of Y = O_n Z: per-coordinate KS against N(0,1), pairwise
// correlations, and the two transform identities.
ClaimResult verify_transformed_coords(const VerificationConfig& cfg);

struct TheoremReport {
  VerificationConfig config;
  bool exact_certification_passed = false;
  std::int64_t certified_pairs = 0;
  std::vector<ClaimResult> results;
  bool overall_pass = false;
};

inline const std::vector<std::string>& all_claim_ids() {
  static const std::vector<std::string> ids{"T2.1", "T2.2", "T2.3",
                                            "T1.1", "T1.3", "coords"};
  return ids;
}

// Runs the exact certification plus the selected claims (default: every
// claim the config supports; T1.* only when params are set).
TheoremReport run_all(const VerificationConfig& cfg);
TheoremReport run_selected(const VerificationConfig& cfg,
                           const std::vector<std::string>& claim_ids);

struct ControlResult {
  std::string control;         // "wrong_scaling", "wrong_dof", "non_normal_inputs"
  std::string targeted_claim;  // the one claim that must fail
  std::vector<ClaimResult> results;
  bool control_ok = false;  // targeted claim failed decisively, others passed
};

struct NegativeControlReport {
  VerificationConfig config;
  std::vector<ControlResult> controls;
  bool overall_pass = false;  // every control behaved as designed
};

// Each control re-runs the three standardized claims with exactly one thing
// broken, and must flip exactly the targeted claim's pass flag.
NegativeControlReport run_negative_controls(const VerificationConfig& cfg);

}  // namespace helmert
