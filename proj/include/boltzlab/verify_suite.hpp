// End-to-end verification suite: exact identities, kernel exactness, degenerate
// dynamics, conservation, scheme equivalence, clock statistics, coupling
// envelope, tail decay, regularization shape, and estimator self-tests.  Every
// check runs with pre-registered sizes, tolerances and seeds.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace boltzlab::verify {

enum class Profile { kQuick, kFull };

struct CriterionResult {
  std::string id;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs every registered criterion; results are deterministic per seed.
std::vector<CriterionResult> run_all(Profile profile, std::uint64_t seed = 1234);

// One pass/fail line per criterion.
std::string format_results(const std::vector<CriterionResult>& results);

// Machine-readable verdict.
std::string results_to_json(const std::vector<CriterionResult>& results, Profile profile,
                            std::uint64_t seed);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace boltzlab::verify
