#include "wedge/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wedge/classify.hpp"
#include "wedge/error.hpp"
#include "wedge/measure.hpp"
#include "wedge/oracles.hpp"
#include "wedge/seeding.hpp"

namespace wedge::invariants {
namespace {

// Cycles through generic, planar, diagonal and product two-qutrit states so
// every geometric class gets exercised.
PureState mixed_two_qutrit(int trial, std::uint64_t seed) {
  switch (trial % 4) {
    case 0: return random_state({3, 3}, std::nullopt, seed);
    case 1: return random_schmidt_rank_state(3, 3, 2, seed);
    case 2: return random_state({3, 3}, std::vector<MultiIndex>{{0, 0}, {1, 1}, {2, 2}}, seed);
    default: return random_schmidt_rank_state(3, 3, 1, seed);
  }
}

InvariantResult check_lu(int trials, std::uint64_t seed) {
  InvariantResult res{"lu", true, 0.0, 1e-9, trials, {}};
  int rank_changes = 0;
  for (int t = 0; t < trials; ++t) {
    const PureState s = mixed_two_qutrit(t, derive_seed(seed, 2 * static_cast<std::uint64_t>(t)));
    const std::uint64_t useed = derive_seed(seed, 2 * static_cast<std::uint64_t>(t) + 1);
    const int party = static_cast<int>(useed & 1u);
    const PureState moved = apply_local_unitary(s, LocalUnitary(party, random_unitary(3, useed)));
    res.worst_deviation =
        std::max(res.worst_deviation, std::abs(eg_two_qutrit(moved).value - eg_two_qutrit(s).value));
    if (classify_two_qutrit(moved).rank != classify_two_qutrit(s).rank) ++rank_changes;
  }
  res.passed = res.worst_deviation < res.tolerance && rank_changes == 0;
  res.detail = "rank changes: " + std::to_string(rank_changes);
  return res;
}

InvariantResult check_party(int trials, std::uint64_t seed) {
  InvariantResult res{"party", true, 0.0, 1e-10, trials, {}};
  double worst_bipartite = 0.0;
  const std::vector<std::vector<int>> shapes{{3, 3}, {2, 2}, {2, 3}, {3, 4}, {2, 2, 2}, {3, 2, 2}};
  for (int t = 0; t < trials; ++t) {
    const PureState q = random_state({3, 3}, std::nullopt, derive_seed(seed, 3 * static_cast<std::uint64_t>(t)));
    res.worst_deviation =
        std::max(res.worst_deviation, std::abs(eg_two_qutrit(q, 0).value - eg_two_qutrit(q, 1).value));

    const std::uint64_t s2 = derive_seed(seed, 3 * static_cast<std::uint64_t>(t) + 1);
    const auto& dims = shapes[s2 % shapes.size()];
    const PureState s = random_state(dims, std::nullopt, derive_seed(seed, 3 * static_cast<std::uint64_t>(t) + 2));
    const int n = s.parties();
    const unsigned mask = 1u + static_cast<unsigned>((s2 >> 8) % ((1u << n) - 2));
    std::vector<int> side;
    for (int p = 0; p < n; ++p) {
      if (mask & (1u << p)) side.push_back(p);
    }
    const Bipartition bp(side, n);
    for (MeasureMode mode : {MeasureMode::qutrit, MeasureMode::literal, MeasureMode::normalized}) {
      if (mode == MeasureMode::qutrit && dims != std::vector<int>{3, 3}) continue;
      worst_bipartite = std::max(worst_bipartite, std::abs(eg_bipartite(s, bp, mode).value -
                                                           eg_bipartite(s, bp.flipped(), mode).value));
    }
  }
  res.passed = res.worst_deviation <= res.tolerance && worst_bipartite <= 1e-9;
  std::ostringstream detail;
  detail << "complementary cuts worst " << worst_bipartite << " (tolerance 1e-9)";
  res.detail = detail.str();
  res.worst_deviation = std::max(res.worst_deviation, worst_bipartite);
  return res;
}

InvariantResult check_purity(int trials, std::uint64_t seed) {
  InvariantResult res{"purity", true, 0.0, 1e-9, trials, {}};
  const std::vector<std::vector<int>> shapes{{2, 2}, {3, 3}, {2, 3}, {3, 2}, {2, 2, 2}, {2, 3, 3}, {3, 3, 3}};
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s1 = derive_seed(seed, 2 * static_cast<std::uint64_t>(t));
    const auto& dims = shapes[s1 % shapes.size()];
    const PureState s = random_state(dims, std::nullopt, derive_seed(seed, 2 * static_cast<std::uint64_t>(t) + 1));
    const int n = s.parties();
    const unsigned mask = 1u + static_cast<unsigned>((s1 >> 8) % ((1u << n) - 2));
    std::vector<int> side;
    for (int p = 0; p < n; ++p) {
      if (mask & (1u << p)) side.push_back(p);
    }
    const Bipartition bp(side, n);
    const double ic = i_concurrence(s, bp);
    const double pairs = exterior::pairwise_wedge_sum(post_measurement_vectors(s, bp).vectors);
    res.worst_deviation = std::max(res.worst_deviation, std::abs(ic * ic - 4.0 * pairs));
  }
  res.passed = res.worst_deviation <= res.tolerance;
  return res;
}

InvariantResult check_expansion(int trials, std::uint64_t seed) {
  InvariantResult res{"eq8", true, 0.0, 1e-10, trials, {}};
  for (int t = 0; t < trials; ++t) {
    const PureState s = mixed_two_qutrit(t, derive_seed(seed, static_cast<std::uint64_t>(t)));
    const double expanded = oracles::eg_expanded(coefficient_matrix(s));
    res.worst_deviation = std::max(res.worst_deviation, std::abs(expanded - eg_two_qutrit(s).value));
  }
  res.passed = res.worst_deviation <= res.tolerance;
  return res;
}

}  // namespace

const std::vector<std::string>& known() {
  static const std::vector<std::string> names{"lu", "party", "purity", "eq8"};
  return names;
}

InvariantResult run(std::string_view name, int trials, std::uint64_t seed) {
  if (trials < 1) throw ValidationError("check: trials must be >= 1");
  if (name == "lu") return check_lu(trials, seed);
  if (name == "party") return check_party(trials, seed);
  if (name == "purity") return check_purity(trials, seed);
  if (name == "eq8") return check_expansion(trials, seed);
  throw ValidationError("check: unknown invariant '" + std::string(name) + "'");
}

}  // namespace wedge::invariants
