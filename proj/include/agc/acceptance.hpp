#pragma once

#include "agc/affine_code.hpp"
#include "agc/qcomb.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace agc {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteOptions {
  unsigned threads = 1;
  std::uint64_t seed = 20240601;
};

inline constexpr int kCriterionCount = 8;

/// Runs one acceptance criterion (1..8). Exceptions are caught and reported
/// as failures.
CriterionResult run_criterion(int id, const SuiteOptions& options = {});
std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions& options = {});

/// Exhaustive consistency checks for one parameter triple: rank and
/// nondegeneracy, blind distance, minimum-weight census, maximal-minor
/// weight, and (when small enough) the minimum-weight characterization.
std::vector<CriterionResult> verify_params(const CodeParams& params, const Caps& caps,
                                           const SuiteOptions& options = {});

/// Randomized automorphism checks: group laws, the pointwise action
/// oracle, permutation homomorphism and code invariance.
CriterionResult autocheck(const CodeParams& params, unsigned samples, std::uint64_t seed, const Caps& caps = {});

/// "PASS name: detail", optionally with the elapsed time.
std::string format_result(const CriterionResult& r, bool with_time);

}  // namespace agc
