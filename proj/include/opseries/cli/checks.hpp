#pragma once

// Invariant suites behind `opseries check`. Each check reports the largest
// measured deviation over its grid against a fixed threshold.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "opseries/numerics.hpp"

namespace opseries::cli {

struct CheckResult {
  std::string suite;
  std::string name;
  double measured = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct CheckOptions {
  std::optional<double> tol_override;  // replaces every threshold when set
  std::filesystem::path fixtures;
};

/// Suite names accepted by run_suite, "all" excluded.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws DomainError for an
/// unknown name.
std::vector<CheckResult> run_suite(const std::string& suite, const CheckOptions& options);

/// e^{w d^2/dz^2} z^n by expanding the exponential over polynomial
/// coefficients in z and evaluating at z; independent of the Hermite sum.
ComplexValue heat_semigroup_brute_force(int n, ComplexValue z, ComplexValue w);

}  // namespace opseries::cli
