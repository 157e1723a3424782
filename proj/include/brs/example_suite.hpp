#pragma once

#include <string>
#include <vector>

namespace brs {

struct SuiteTolerances {
  /// Closed-form coefficient and value comparisons.
  double exact = 1e-10;
  /// Identities sampled on circle grids.
  double grid = 1e-9;
  /// Boundary limits and Gram entries.
  double limit = 1e-6;
};

struct SuiteItem {
  std::string group;  // example1 .. example4
  std::string name;
  bool pass;
  std::string detail;
};

/// Worked examples with closed forms: mates, factorizations, boundary zeros,
/// kernels, Gram matrices and decompositions. `filter` keeps groups whose
/// name contains it (empty keeps all).
std::vector<SuiteItem> run_example_suite(const SuiteTolerances& tol, const std::string& filter = "");

}  // namespace brs
