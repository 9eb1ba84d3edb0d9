#pragma once

// Maximizing the two-qutrit measure over states supported on a fixed set of
// basis terms.
//
// The supported complex coefficients are packed as 2k reals
// (re_0, im_0, re_1, im_1, ...) on the unit sphere S^{2k-1}; ascent steps
// follow the tangent-space gradient and are retracted back by normalization.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wedge/states.hpp"

namespace wedge {

struct SupportPattern {
  std::vector<int> dims{3, 3};
  std::vector<MultiIndex> indices;

  // "00,11,22" -> {(0,0), (1,1), (2,2)} on dims [3,3]. Each token holds one
  // digit per party.
  static SupportPattern parse(std::string_view text);
  std::string to_string() const;

  // Throws ValidationError unless nonempty, in bounds and duplicate-free.
  void validate() const;
};

enum class StepRule {
  backtracking,  // Armijo backtracking, step grows 2x after each accepted move
  fixed,         // constant step, every move accepted
};

struct OptimizerConfig {
  int restarts = 32;
  int max_iters = 2000;
  std::uint64_t seed = 1;
  StepRule step_rule = StepRule::backtracking;
  double initial_step = 0.25;
  double max_step = 8.0;
  double armijo = 1e-4;
  // A supported coefficient with optimal magnitude below this marks a
  // supremum that lies outside the open support stratum.
  double epsilon_boundary = 1e-4;
  double gradient_tol = 1e-12;
  // Stop once a step gains less than stall_tol while the gradient is already
  // below stall_gradient.
  double stall_tol = 1e-15;
  double stall_gradient = 1e-5;
  bool parallel = true;
};

struct TracePoint {
  int iteration = 0;
  double value = 0.0;
};

struct RestartOutcome {
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<MultiIndex> boundary_indices;
  std::vector<TracePoint> trace;
};

struct OptimizationResult {
  PureState best_state;
  double best_value = 0.0;
  bool attained = true;
  std::vector<MultiIndex> boundary_indices;
  std::vector<TracePoint> trace;  // of the winning restart
  int best_restart = 0;
  int restarts_used = 0;
  std::vector<RestartOutcome> restarts;
};

OptimizationResult maximize_eg(const SupportPattern& support, const OptimizerConfig& config = {});

// dE/d(conj A) for the two-qutrit measure at coefficient matrix A: with
// M = A A^dagger,  9 det(A) conj(cof A) + 2 (tr(M) A - M A).
Eigen::Matrix3cd eg_wirtinger_gradient(const Eigen::Matrix3cd& coefficients);

// Real gradient on the support sphere, in the packed (re, im) layout, projected
// onto the tangent space at the state's coefficient vector.
Eigen::VectorXd sphere_gradient(const PureState& state, const SupportPattern& support);

// Largest discrepancy between sphere_gradient and central differences of
// E(normalize(x +- h e_i)), relative to max(|grad|_inf, 1).
double fd_gradient_check(const PureState& state, const SupportPattern& support, double h = 1e-6);

}  // namespace wedge
