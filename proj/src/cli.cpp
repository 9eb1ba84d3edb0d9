#include "wedge/cli.hpp"

#include <cctype>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "wedge/classify.hpp"
#include "wedge/error.hpp"
#include "wedge/invariants.hpp"
#include "wedge/measure.hpp"
#include "wedge/optimize.hpp"
#include "wedge/report.hpp"
#include "wedge/state_file.hpp"

namespace wedge::cli {
namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 1;

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(' ');
    const auto last = item.find_last_not_of(' ');
    parts.push_back(first == std::string::npos ? "" : item.substr(first, last - first + 1));
  }
  return parts;
}

std::uint64_t parse_seed(const std::string& text, const char* source) {
  try {
    if (text.empty() || !std::isdigit(static_cast<unsigned char>(text.front()))) throw std::invalid_argument(text);
    std::size_t used = 0;
    const unsigned long long v = std::stoull(text, &used, 0);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ValidationError(std::string(source) + ": not an unsigned integer: '" + text + "'");
  }
}

// --seed wins over WEDGE_SEED, which wins over the built-in default.
std::uint64_t resolve_seed(const std::optional<std::string>& flag) {
  if (flag) return parse_seed(*flag, "--seed");
  if (const char* env = std::getenv("WEDGE_SEED"); env != nullptr && *env != '\0') {
    return parse_seed(env, "WEDGE_SEED");
  }
  return kDefaultSeed;
}

struct Options {
  bool reproducible = false;

  std::string state_path;
  bool renormalize = false;

  std::optional<std::string> bipartition;
  std::optional<std::string> mode;
  std::optional<std::string> total;

  double tol_rank = kDefaultRankTolerance;
  double tol_ortho = kDefaultOrthoTolerance;

  std::string support;
  OptimizerConfig optimizer;
  std::string step_rule = "backtracking";
  bool serial = false;
  std::optional<std::string> seed;

  std::string invariants = "lu,party,purity,eq8";
  int trials = 200;
};

json run_measure(const Options& o) {
  const PureState state = io::read_state_file(o.state_path, o.renormalize);
  const json tolerances = {{"norm", kNormTolerance}, {"negative_clamp", exterior::kNegativeClamp}};
  if (o.total) {
    if (o.bipartition || o.mode) throw ValidationError("--total cannot be combined with --bipartition or --mode");
    Counting counting;
    if (*o.total == "once") {
      counting = Counting::each_bipartition_once;
    } else if (*o.total == "all" || *o.total == "paper") {
      counting = Counting::all_subsets;
    } else {
      throw ValidationError("--total must be 'once' or 'paper'");
    }
    return report::document("measure", tolerances, report::to_json(eg_multipartite(state, counting)),
                            o.reproducible);
  }

  std::vector<int> measured{0};
  if (o.bipartition) {
    measured.clear();
    for (const auto& tok : split_csv(*o.bipartition)) {
      try {
        std::size_t used = 0;
        measured.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ValidationError("--bipartition: not a party index: '" + tok + "'");
      }
    }
  }
  const Bipartition bp(measured, state.parties());
  const MeasureMode mode = o.mode ? parse_measure_mode(*o.mode) : default_mode(state.dims());
  json result = report::to_json(eg_bipartite(state, bp, mode));
  result["bipartition"] = bp.measured();
  return report::document("measure", tolerances, std::move(result), o.reproducible);
}

json run_classify(const Options& o) {
  if (!(o.tol_rank > 0.0) || !(o.tol_ortho > 0.0)) throw ValidationError("tolerances must be positive");
  const PureState state = io::read_state_file(o.state_path, o.renormalize);
  const GeometryReport g = classify_two_qutrit(state, o.tol_rank, o.tol_ortho);
  const json tolerances = {{"norm", kNormTolerance}, {"tol_rank", g.tol_rank}, {"tol_ortho", g.tol_ortho},
                           {"tol_vol", g.tol_vol}};
  return report::document("classify", tolerances, report::to_json(g), o.reproducible);
}

json run_maximize(Options o) {
  const SupportPattern support = SupportPattern::parse(o.support);
  OptimizerConfig& config = o.optimizer;
  config.seed = resolve_seed(o.seed);
  config.parallel = !o.serial;
  if (o.step_rule == "backtracking") {
    config.step_rule = StepRule::backtracking;
  } else if (o.step_rule == "fixed") {
    config.step_rule = StepRule::fixed;
  } else {
    throw ValidationError("--step-rule must be 'backtracking' or 'fixed'");
  }
  const OptimizationResult result = maximize_eg(support, config);
  if (result.best_value > 1.0 + 1e-6) throw ConsistencyError("maximize: value above the measure's ceiling of 1");
  const json tolerances = {{"epsilon_boundary", config.epsilon_boundary},
                           {"gradient_tol", config.gradient_tol},
                           {"stall_tol", config.stall_tol},
                           {"stall_gradient", config.stall_gradient},
                           {"armijo", config.armijo},
                           {"restarts", config.restarts},
                           {"max_iters", config.max_iters},
                           {"step_rule", o.step_rule}};
  return report::document("maximize", tolerances, report::to_json(result, support, config), o.reproducible);
}

json run_check(const Options& o, bool& all_passed) {
  const std::uint64_t seed = resolve_seed(o.seed);
  json results = json::array();
  all_passed = true;
  for (const auto& name : split_csv(o.invariants)) {
    const invariants::InvariantResult r = invariants::run(name, o.trials, seed);
    all_passed = all_passed && r.passed;
    results.push_back({{"name", r.name},
                       {"passed", r.passed},
                       {"worst_deviation", r.worst_deviation},
                       {"tolerance", r.tolerance},
                       {"trials", r.trials},
                       {"detail", r.detail}});
  }
  return report::document("check", {{"trials", o.trials}},
                          {{"seed", seed}, {"passed", all_passed}, {"invariants", std::move(results)}},
                          o.reproducible);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wedge-product geometric entanglement of pure multi-qudit states", "wedge"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--reproducible", o.reproducible, "Omit the timestamp so identical runs give identical output");

  auto* measure = app.add_subcommand("measure", "Entanglement measure of a state file");
  measure->add_option("--state", o.state_path, "State file (JSON)")->required();
  measure->add_option("--bipartition", o.bipartition, "Measured parties, comma separated (default 0)");
  measure->add_option("--mode", o.mode, "qutrit | literal | normalized (default: qutrit for [3,3])");
  measure->add_option("--total", o.total,
                      "Multipartite total: 'once' (each cut once) or 'paper' (every subset, cuts twice)");
  measure->add_flag("--renormalize", o.renormalize, "Rescale an unnormalized state instead of rejecting it");

  auto* classify = app.add_subcommand("classify", "Geometric class of a two-qutrit state file");
  classify->add_option("--state", o.state_path, "State file (JSON)")->required();
  classify->add_option("--tol-rank", o.tol_rank, "Relative singular-value threshold");
  classify->add_option("--tol-ortho", o.tol_ortho, "Relative orthogonality threshold");
  classify->add_flag("--renormalize", o.renormalize, "Rescale an unnormalized state instead of rejecting it");

  auto* maximize = app.add_subcommand("maximize", "Maximize the two-qutrit measure over a support pattern");
  maximize->add_option("--support", o.support, "Basis terms, e.g. \"00,11,22\"")->required();
  maximize->add_option("--restarts", o.optimizer.restarts, "Independent random starts");
  maximize->add_option("--max-iters", o.optimizer.max_iters, "Ascent iterations per start");
  maximize->add_option("--epsilon-boundary", o.optimizer.epsilon_boundary,
                       "Magnitude below which a coefficient counts as vanished");
  maximize->add_option("--step-rule", o.step_rule, "backtracking | fixed");
  maximize->add_option("--seed", o.seed, "RNG seed (default: $WEDGE_SEED, else 1)");
  maximize->add_flag("--serial", o.serial, "Run restarts on one thread");

  auto* check = app.add_subcommand("check", "Randomized invariant suites");
  check->add_option("--invariants", o.invariants, "Comma separated subset of lu,party,purity,eq8");
  check->add_option("--trials", o.trials, "Random draws per invariant");
  check->add_option("--seed", o.seed, "RNG seed (default: $WEDGE_SEED, else 1)");

  std::vector<std::string> argv_store{"wedge"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    json doc;
    int status = kExitOk;
    if (*measure) {
      doc = run_measure(o);
    } else if (*classify) {
      doc = run_classify(o);
    } else if (*maximize) {
      doc = run_maximize(o);
    } else {
      bool passed = true;
      doc = run_check(o, passed);
      if (!passed) status = kExitConsistency;
    }
    out << doc.dump(2) << '\n';
    return status;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kExitConsistency;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitConsistency;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace wedge::cli
