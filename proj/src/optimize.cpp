#include "wedge/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <random>
#include <set>
#include <sstream>

#include "wedge/error.hpp"
#include "wedge/measure.hpp"
#include "wedge/seeding.hpp"

namespace wedge {
namespace {

void require_two_qutrit(const SupportPattern& support) {
  support.validate();
  if (support.dims != std::vector<int>{3, 3}) {
    throw ValidationError("maximize: only two-qutrit supports (dims [3,3]) are supported");
  }
}

Eigen::Matrix3cd to_matrix(const SupportPattern& support, const Eigen::VectorXd& x) {
  Eigen::Matrix3cd a = Eigen::Matrix3cd::Zero();
  for (std::size_t j = 0; j < support.indices.size(); ++j) {
    const auto& idx = support.indices[j];
    const auto k = static_cast<Eigen::Index>(2 * j);
    a(idx[0], idx[1]) = Complex(x(k), x(k + 1));
  }
  return a;
}

Eigen::VectorXd from_matrix(const SupportPattern& support, const Eigen::Matrix3cd& a) {
  Eigen::VectorXd x(2 * static_cast<Eigen::Index>(support.indices.size()));
  for (std::size_t j = 0; j < support.indices.size(); ++j) {
    const auto& idx = support.indices[j];
    const auto k = static_cast<Eigen::Index>(2 * j);
    x(k) = a(idx[0], idx[1]).real();
    x(k + 1) = a(idx[0], idx[1]).imag();
  }
  return x;
}

double objective(const SupportPattern& support, const Eigen::VectorXd& x) {
  return eg_two_qutrit_value(to_matrix(support, x));
}

Eigen::VectorXd tangent_gradient(const SupportPattern& support, const Eigen::VectorXd& x) {
  const Eigen::Matrix3cd g = eg_wirtinger_gradient(to_matrix(support, x));
  Eigen::VectorXd grad(x.size());
  for (std::size_t j = 0; j < support.indices.size(); ++j) {
    const auto& idx = support.indices[j];
    const auto k = static_cast<Eigen::Index>(2 * j);
    grad(k) = 2.0 * g(idx[0], idx[1]).real();
    grad(k + 1) = 2.0 * g(idx[0], idx[1]).imag();
  }
  return grad - grad.dot(x) * x;
}

std::vector<MultiIndex> small_coefficients(const SupportPattern& support, const Eigen::VectorXd& x,
                                           double epsilon) {
  std::vector<MultiIndex> out;
  for (std::size_t j = 0; j < support.indices.size(); ++j) {
    const auto k = static_cast<Eigen::Index>(2 * j);
    if (std::hypot(x(k), x(k + 1)) < epsilon) out.push_back(support.indices[j]);
  }
  return out;
}

struct RestartRun {
  RestartOutcome outcome;
  Eigen::VectorXd x;
};

RestartRun run_restart(const SupportPattern& support, const OptimizerConfig& config, int restart) {
  std::mt19937_64 rng(derive_seed(config.seed, static_cast<std::uint64_t>(restart)));
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd x(2 * static_cast<Eigen::Index>(support.indices.size()));
  for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = gauss(rng);
  x.normalize();

  RestartRun run;
  double f = objective(support, x);
  double step = config.initial_step;
  int it = 0;
  for (; it < config.max_iters; ++it) {
    run.outcome.trace.push_back({it, f});
    const Eigen::VectorXd g = tangent_gradient(support, x);
    const double gnorm_sq = g.squaredNorm();
    if (std::sqrt(gnorm_sq) < config.gradient_tol) {
      run.outcome.converged = true;
      break;
    }

    Eigen::VectorXd candidate;
    double fc = 0.0;
    bool accepted = false;
    if (config.step_rule == StepRule::fixed) {
      candidate = (x + step * g).normalized();
      fc = objective(support, candidate);
      accepted = true;
    } else {
      for (int tries = 0; tries < 60; ++tries) {
        candidate = (x + step * g).normalized();
        fc = objective(support, candidate);
        if (fc >= f + config.armijo * step * gnorm_sq) {
          accepted = true;
          break;
        }
        step *= 0.5;
      }
    }
    if (!accepted) {
      run.outcome.converged = true;
      break;
    }
    const double gain = fc - f;
    x = std::move(candidate);
    f = fc;
    if (gain <= config.stall_tol && std::sqrt(gnorm_sq) < config.stall_gradient) {
      run.outcome.converged = true;
      ++it;
      run.outcome.trace.push_back({it, f});
      break;
    }
    if (config.step_rule == StepRule::backtracking) step = std::min(2.0 * step, config.max_step);
  }
  if (it == config.max_iters) run.outcome.trace.push_back({it, f});
  run.outcome.iterations = it;
  run.outcome.value = f;
  run.outcome.boundary_indices = small_coefficients(support, x, config.epsilon_boundary);
  run.x = std::move(x);
  return run;
}

}  // namespace

// --- SupportPattern ---------------------------------------------------------

SupportPattern SupportPattern::parse(std::string_view text) {
  SupportPattern support;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    std::string_view token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token.size() != support.dims.size()) {
      throw ValidationError("support: token '" + std::string(token) + "' must have one digit per party");
    }
    MultiIndex index;
    for (char ch : token) {
      if (ch < '0' || ch > '9') throw ValidationError("support: non-digit in token '" + std::string(token) + "'");
      index.push_back(ch - '0');
    }
    support.indices.push_back(std::move(index));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  support.validate();
  return support;
}

std::string SupportPattern::to_string() const {
  std::string out;
  for (const auto& idx : indices) {
    if (!out.empty()) out += ',';
    for (int i : idx) out += static_cast<char>('0' + i);
  }
  return out;
}

void SupportPattern::validate() const {
  if (indices.empty()) throw ValidationError("support: empty support pattern");
  std::set<MultiIndex> seen;
  for (const auto& idx : indices) {
    if (idx.size() != dims.size()) throw ValidationError("support: index arity does not match dims");
    for (std::size_t p = 0; p < idx.size(); ++p) {
      if (idx[p] < 0 || idx[p] >= dims[p]) throw ValidationError("support: index out of bounds");
    }
    if (!seen.insert(idx).second) throw ValidationError("support: duplicate index");
  }
}

// --- gradients --------------------------------------------------------------

Eigen::Matrix3cd eg_wirtinger_gradient(const Eigen::Matrix3cd& a) {
  // Cofactor matrix, well defined for singular A.
  Eigen::Matrix3cd cof;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      const int r1 = (r + 1) % 3, r2 = (r + 2) % 3;
      const int c1 = (c + 1) % 3, c2 = (c + 2) % 3;
      cof(r, c) = a(r1, c1) * a(r2, c2) - a(r1, c2) * a(r2, c1);
    }
  }
  const Eigen::Matrix3cd m = a * a.adjoint();
  return 9.0 * a.determinant() * cof.conjugate() + 2.0 * (m.trace() * a - m * a);
}

Eigen::VectorXd sphere_gradient(const PureState& state, const SupportPattern& support) {
  require_two_qutrit(support);
  const Eigen::Matrix3cd a = coefficient_matrix(state);
  const Eigen::VectorXd x = from_matrix(support, a);
  if ((to_matrix(support, x) - a).cwiseAbs().maxCoeff() > 1e-12) {
    throw ValidationError("gradient: state has weight outside the support");
  }
  return tangent_gradient(support, x);
}

double fd_gradient_check(const PureState& state, const SupportPattern& support, double h) {
  const Eigen::VectorXd analytic = sphere_gradient(state, support);
  const Eigen::VectorXd x = from_matrix(support, coefficient_matrix(state));
  Eigen::VectorXd numeric(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    Eigen::VectorXd plus = x, minus = x;
    plus(i) += h;
    minus(i) -= h;
    numeric(i) = (objective(support, plus.normalized()) - objective(support, minus.normalized())) / (2.0 * h);
  }
  const double scale = std::max({analytic.cwiseAbs().maxCoeff(), numeric.cwiseAbs().maxCoeff(), 1.0});
  return (analytic - numeric).cwiseAbs().maxCoeff() / scale;
}

// --- maximize ---------------------------------------------------------------

OptimizationResult maximize_eg(const SupportPattern& support, const OptimizerConfig& config) {
  require_two_qutrit(support);
  if (config.restarts < 1) throw ValidationError("maximize: restarts must be >= 1");
  if (config.max_iters < 0) throw ValidationError("maximize: max_iters must be >= 0");

  std::vector<RestartRun> runs;
  runs.reserve(static_cast<std::size_t>(config.restarts));
  if (config.parallel && config.restarts > 1) {
    std::vector<std::future<RestartRun>> futures;
    for (int r = 0; r < config.restarts; ++r) {
      futures.push_back(std::async(std::launch::async, run_restart, std::cref(support), std::cref(config), r));
    }
    for (auto& fut : futures) runs.push_back(fut.get());
  } else {
    for (int r = 0; r < config.restarts; ++r) runs.push_back(run_restart(support, config, r));
  }

  // Highest value wins; ties go to the lowest restart index.
  int best = 0;
  for (int r = 1; r < config.restarts; ++r) {
    if (runs[static_cast<std::size_t>(r)].outcome.value > runs[static_cast<std::size_t>(best)].outcome.value) best = r;
  }
  const RestartRun& winner = runs[static_cast<std::size_t>(best)];

  std::vector<RestartOutcome> outcomes;
  for (auto& run : runs) outcomes.push_back(run.outcome);
  return OptimizationResult{from_coefficient_matrix(to_matrix(support, winner.x)),
                            winner.outcome.value,
                            winner.outcome.boundary_indices.empty(),
                            winner.outcome.boundary_indices,
                            winner.outcome.trace,
                            best,
                            config.restarts,
                            std::move(outcomes)};
}

}  // namespace wedge
