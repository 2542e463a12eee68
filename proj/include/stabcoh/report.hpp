#pragma once

// Verification checks and the machine-readable report the CLI emits.
//
// The report is deterministic: keys are emitted in a fixed order and no
// timing enters the `checks` array. Wall-clock times live in a separate
// sidecar document (timing_json).

#include <string>
#include <vector>

#include "json.hpp"

#include "stabcoh/forms.hpp"
#include "stabcoh/group_cohomology.hpp"
#include "stabcoh/stable.hpp"

namespace stabcoh {

inline constexpr const char* kArtifactVersion = "1.0.0";

struct CheckResult {
  std::string check_id;
  std::string statement;
  bool pass = false;
  nlohmann::ordered_json per_degree_data = nlohmann::ordered_json::array();
  /// null when the check passes
  nlohmann::ordered_json counterexample;
  double elapsed_ms = 0;
};

struct VerificationReport {
  std::string artifact_version = kArtifactVersion;
  int degree_bound = 0;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  nlohmann::ordered_json to_json() const;
  nlohmann::ordered_json timing_json() const;
  /// check_id,status,row,field,value -- one line per per-degree field
  std::string to_csv() const;
  std::string to_text() const;
};

/// The statement string attached to each check id. Throws std::out_of_range
/// for an unknown id.
const std::string& check_statement(const std::string& check_id);

/// B_3 = <s1, s2 | s1 s2 s1 = s2 s1 s2> acting on Q^2 by
/// s1 -> (1 1; 0 1), s2 -> (1 0; -1 1).
GroupInput braid_group_b3();

CheckResult check_contraction(const StableCohomology& sc);
CheckResult check_cartan(const FormsComplex& forms, unsigned jobs);
CheckResult check_resolution(const FormsComplex& forms, unsigned jobs);
CheckResult check_injectivity(const StableCohomology& sc);
CheckResult check_surjectivity(const StableCohomology& sc);
CheckResult check_cross_oracle(const StableCohomology& sc);
CheckResult check_exact_sequence(const StableCohomology& sc);
CheckResult check_generators(const StableCohomology& sc);
CheckResult check_tor(const StableCohomology& sc, int j_max = 4);
CheckResult check_h1(const GroupInput& input, const std::string& check_id = "h1_b3");

/// Every check above, in a fixed order, at the given bound.
VerificationReport verify_all(int max_degree, unsigned jobs);

}  // namespace stabcoh
