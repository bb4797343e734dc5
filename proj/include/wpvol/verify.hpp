#pragma once

#include <string>
#include <vector>

#include "wpvol/polynomial.hpp"

namespace wpvol::verify {

// Published genus-0 rows V_{0,3}..V_{0,6}, with 3 pi^2 in the n = 5 row.
Polynomial table_v0n(int n);

// Every monomial has pi^2-degree plus L^2-degree equal to `degree`.
bool homogeneous(const Polynomial& p, int degree);
// Invariant under all permutations of the length atoms with the given labels.
bool symmetric_in(const Polynomial& p, const std::vector<int>& labels);

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

// All exact cross-checks up to max_n (3 <= max_n <= 8).
std::vector<CheckResult> identity_suite(int max_n);

}  // namespace wpvol::verify
