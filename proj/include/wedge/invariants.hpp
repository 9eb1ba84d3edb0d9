#pragma once

// Randomized invariant suites behind `wedge check`.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wedge::invariants {

struct InvariantResult {
  std::string name;
  bool passed = false;
  double worst_deviation = 0.0;
  double tolerance = 0.0;
  int trials = 0;
  std::string detail;
};

// "lu", "party", "purity", "eq8".
const std::vector<std::string>& known();

// lu      measure unchanged (1e-9) and rank unchanged under a Haar unitary on
//         a random party of a random two-qutrit state
// party   first- vs second-party family (1e-10); every bipartite mode against
//         the complementary cut (1e-9)
// purity  I-concurrence^2 == 4 * pairwise wedge sum (1e-9), dims up to [3,3,3]
// eq8     coefficient expansion == wedge pipeline (1e-10)
InvariantResult run(std::string_view name, int trials, std::uint64_t seed);

}  // namespace wedge::invariants
