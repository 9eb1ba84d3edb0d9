// Acceptance criteria, one [PASS]/[FAIL] line each; exits 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "table_fixtures.hpp"
#include "wedge/classify.hpp"
#include "wedge/measure.hpp"
#include "wedge/optimize.hpp"
#include "wedge/oracles.hpp"
#include "wedge/seeding.hpp"

using namespace wedge;

namespace {

struct Verdict {
  bool passed = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail << what << "; ";
    }
  }
};

using Clock = std::chrono::steady_clock;

PureState diagonal_max() {
  return from_coefficient_matrix(Eigen::Matrix3cd::Identity() / std::sqrt(3.0));
}

PureState ghz3() {
  ComplexVector amps = ComplexVector::Zero(8);
  amps(0) = amps(7) = 1.0 / std::sqrt(2.0);
  return PureState({2, 2, 2}, amps);
}

std::vector<int> random_cut(int parties, std::mt19937_64& rng) {
  std::vector<int> measured;
  while (measured.empty() || static_cast<int>(measured.size()) == parties) {
    measured.clear();
    for (int p = 0; p < parties; ++p) {
      if (rng() & 1U) measured.push_back(p);
    }
  }
  return measured;
}

void maximal_value(Verdict& v) {
  const double e = eg_two_qutrit(diagonal_max()).value;
  v.detail << "E = " << e << "; ";
  v.require(std::abs(e - 1.0) < 1e-10, "maximally entangled state off 1");
}

void separable_zero(Verdict& v) {
  double worst = 0.0;
  int misclassified = 0;
  for (std::uint64_t t = 0; t < 1000; ++t) {
    const PureState s = random_schmidt_rank_state(3, 3, 1, derive_seed(2, t));
    worst = std::max(worst, eg_two_qutrit(s).value);
    if (classify_two_qutrit(s).entanglement_class != EntanglementClass::separable) ++misclassified;
  }
  v.detail << "max E = " << worst << ", misclassified " << misclassified << "/1000; ";
  v.require(worst < 1e-10, "product state with nonzero measure");
  v.require(misclassified == 0, "product state not SEPARABLE");
}

void table_fixtures(Verdict& v) {
  int ok = 0;
  for (const auto& row : fixtures::table_rows()) {
    const GeometryReport g = classify_two_qutrit(fixtures::fixture_state(row));
    const bool op_ok = std::find(row.table_op.begin(), row.table_op.end(), g.orthogonal_pairs) != row.table_op.end();
    if (g.entanglement_class == row.expected_class && op_ok) {
      ++ok;
    } else {
      v.require(false, row.name + ": got " + std::string(to_string(g.entanglement_class)) + " Op=" +
                           std::to_string(g.orthogonal_pairs));
    }
  }
  v.detail << ok << "/" << fixtures::table_rows().size() << " rows; ";
}

std::string indices_text(const std::vector<MultiIndex>& indices) {
  std::string out = "{";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) out += ",";
    for (int d : indices[i]) out += std::to_string(d);
  }
  return out + "}";
}

void optimizer_tables(Verdict& v) {
  int ok = 0, total = 0;
  for (const auto& row : fixtures::table_rows()) {
    const bool boundary = !row.vanishing.empty();
    if (!row.attained_max && !boundary) continue;
    ++total;
    const OptimizationResult r = maximize_eg(SupportPattern::parse(row.support));
    bool row_ok = true;
    if (row.attained_max) {
      row_ok = std::abs(r.best_value - *row.attained_max) < 1e-4;
    } else {
      const auto expected = fixtures::vanishing_indices(row);
      row_ok = !r.attained;
      for (const auto& idx : expected) {
        row_ok = row_ok && std::find(r.boundary_indices.begin(), r.boundary_indices.end(), idx) !=
                               r.boundary_indices.end();
      }
      if (!row_ok) {
        v.require(false, row.name + ": expected " + indices_text(expected) + " -> 0, optimizer vanished " +
                             indices_text(r.boundary_indices) + " at E = " + std::to_string(r.best_value));
      }
    }
    if (row.attained_max && !row_ok) v.require(false, row.name + ": E = " + std::to_string(r.best_value));
    ok += row_ok ? 1 : 0;
  }
  v.detail << ok << "/" << total << " rows; ";
}

void lu_invariance(Verdict& v) {
  double worst = 0.0;
  int class_changed = 0, planarity_changed = 0, op3_changed = 0, op3_inputs = 0;
  for (std::uint64_t t = 0; t < 500; ++t) {
    const std::uint64_t seed = derive_seed(5, t);
    PureState s = random_state({3, 3}, std::nullopt, seed);
    switch (t % 4) {
      case 1: s = random_schmidt_rank_state(3, 3, 2, seed); break;
      case 2: s = random_state({3, 3}, std::vector<MultiIndex>{{0, 0}, {1, 1}, {2, 2}}, seed); break;
      case 3: s = random_schmidt_rank_state(3, 3, 1, seed); break;
      default: break;
    }
    const int party = static_cast<int>(splitmix64(seed) & 1U);
    const PureState moved = apply_local_unitary(s, LocalUnitary(party, random_unitary(3, derive_seed(seed, 1))));
    worst = std::max(worst, std::abs(eg_two_qutrit(moved).value - eg_two_qutrit(s).value));
    const GeometryReport before = classify_two_qutrit(s);
    const GeometryReport after = classify_two_qutrit(moved);
    class_changed += before.entanglement_class != after.entanglement_class;
    planarity_changed += before.planar != after.planar;
    op3_inputs += before.orthogonal_pairs == 3;
    op3_changed += (before.orthogonal_pairs == 3) != (after.orthogonal_pairs == 3);
  }
  v.detail << "max |dE| = " << worst << ", class changed " << class_changed << ", planarity changed "
           << planarity_changed << ", Op==3 changed " << op3_changed << " (of " << op3_inputs
           << " Op==3 inputs); ";
  v.require(worst < 1e-9, "measure moved");
  v.require(class_changed == 0, "class changed");
  v.require(planarity_changed == 0, "planarity changed");
  v.require(op3_changed == 0, "Op==3 not preserved");
}

void party_symmetry(Verdict& v) {
  const std::vector<std::vector<int>> shapes{{3, 3}, {2, 3}, {3, 4}, {2, 2, 2}, {3, 2, 2}, {2, 3, 2, 2}};
  std::mt19937_64 rng(6);
  double worst_sides = 0.0, worst_cut = 0.0;
  for (std::uint64_t t = 0; t < 1000; ++t) {
    const PureState q = random_state({3, 3}, std::nullopt, derive_seed(6, t));
    worst_sides = std::max(worst_sides, std::abs(eg_two_qutrit(q, 0).value - eg_two_qutrit(q, 1).value));
    const auto& dims = shapes[t % shapes.size()];
    const PureState s = random_state(dims, std::nullopt, derive_seed(60, t));
    const Bipartition bp(random_cut(s.parties(), rng), s.parties());
    for (auto mode : {MeasureMode::literal, MeasureMode::normalized}) {
      worst_cut = std::max(worst_cut, std::abs(eg_bipartite(s, bp, mode).value -
                                               eg_bipartite(s, bp.flipped(), mode).value));
    }
  }
  v.detail << "sides " << worst_sides << ", complementary cuts " << worst_cut << "; ";
  v.require(worst_sides < 1e-10, "first vs second party");
  v.require(worst_cut < 1e-9, "cut vs complement");
}

void purity_bridge(Verdict& v) {
  const std::vector<std::vector<int>> shapes{{2, 2}, {2, 3}, {3, 3}, {2, 2, 2}, {2, 3, 3}, {3, 3, 3}};
  std::mt19937_64 rng(7);
  double worst = 0.0;
  for (std::uint64_t t = 0; t < 1000; ++t) {
    const PureState s = random_state(shapes[t % shapes.size()], std::nullopt, derive_seed(7, t));
    const Bipartition bp(random_cut(s.parties(), rng), s.parties());
    const auto family = post_measurement_vectors(s, bp);
    const double ic = i_concurrence(s, bp);
    worst = std::max(worst, std::abs(ic * ic - 4.0 * exterior::pairwise_wedge_sum(family.vectors)));
  }
  v.detail << "max deviation " << worst << "; ";
  v.require(worst < 1e-9, "I-concurrence^2 != 4 * pair sum");
}

void expansion_oracle(Verdict& v) {
  double worst = 0.0;
  for (std::uint64_t t = 0; t < 1000; ++t) {
    const PureState s = random_state({3, 3}, std::nullopt, derive_seed(8, t));
    worst = std::max(worst, std::abs(oracles::eg_expanded(coefficient_matrix(s)) - eg_two_qutrit(s).value));
  }
  v.detail << "max deviation " << worst << "; ";
  v.require(worst < 1e-10, "expansion disagrees");
}

void gradient_check(Verdict& v) {
  std::mt19937_64 rng(9);
  double worst = 0.0;
  for (std::uint64_t t = 0; t < 100; ++t) {
    std::vector<MultiIndex> all;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) all.push_back({i, j});
    }
    std::shuffle(all.begin(), all.end(), rng);
    SupportPattern support;
    support.indices.assign(all.begin(), all.begin() + 1 + static_cast<std::ptrdiff_t>(rng() % 9));
    const PureState s = random_state({3, 3}, support.indices, derive_seed(9, t));
    worst = std::max(worst, fd_gradient_check(s, support));
  }
  v.detail << "max relative error " << worst << "; ";
  v.require(worst < 1e-5, "gradient mismatch");
}

void type_i_ceiling(Verdict& v) {
  double worst = 0.0;
  int not_planar = 0;
  for (std::uint64_t t = 0; t < 10000; ++t) {
    const PureState s = random_schmidt_rank_state(3, 3, 2, derive_seed(10, t));
    worst = std::max(worst, eg_two_qutrit(s).value);
    not_planar += !classify_two_qutrit(s).planar;
  }
  v.detail << "max E = " << worst << ", non-planar draws " << not_planar << "; ";
  v.require(worst <= 0.5 + 1e-9, "planar state above 1/2");
  v.require(not_planar == 0, "sampler produced a non-planar state");
}

void multipartite(Verdict& v) {
  const double once = eg_multipartite(ghz3(), Counting::each_bipartition_once).total;
  const double all = eg_multipartite(ghz3(), Counting::all_subsets).total;
  ComplexVector prod = ComplexVector::Zero(8);
  prod(0) = prod(1) = 1.0 / std::sqrt(2.0);
  const PureState p({2, 2, 2}, prod);
  const double zero_once = eg_multipartite(p, Counting::each_bipartition_once).total;
  const double zero_all = eg_multipartite(p, Counting::all_subsets).total;
  v.detail << "once " << once << ", all " << all << ", product " << zero_once << "/" << zero_all << "; ";
  v.require(std::abs(once - 0.75) < 1e-10, "GHZ once != 0.75");
  v.require(std::abs(all - 1.5) < 1e-10, "GHZ all != 1.5");
  v.require(std::abs(zero_once) < 1e-10 && std::abs(zero_all) < 1e-10, "product total != 0");
}

struct Criterion {
  int id;
  const char* title;
  double budget_s;
  std::function<void(Verdict&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "maximal value on the maximally entangled state", 1.0, maximal_value},
      {2, "separable states measure zero and classify SEPARABLE", 1.0, separable_zero},
      {3, "table fixtures: class and orthogonal-pair count", 1.0, table_fixtures},
      {4, "optimizer reproduces table maxima and vanishing coefficients", 60.0, optimizer_tables},
      {5, "local-unitary invariance of measure, class, planarity, Op==3", 5.0, lu_invariance},
      {6, "party symmetry", 60.0, party_symmetry},
      {7, "purity / I-concurrence bridge", 60.0, purity_bridge},
      {8, "coefficient-expansion oracle", 60.0, expansion_oracle},
      {9, "analytic vs finite-difference gradient", 60.0, gradient_check},
      {10, "planar states stay at or below 1/2", 5.0, type_i_ceiling},
      {11, "multipartite totals", 60.0, multipartite},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Verdict v;
    const auto start = Clock::now();
    c.body(v);
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs > c.budget_s) v.require(false, "over time budget");
    failed += !v.passed;
    std::printf("[%s] %2d %s (%.3f s): %s\n", v.passed ? "PASS" : "FAIL", c.id, c.title, secs,
                v.detail.str().c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
