// nessprobe: steady states and response curves for two coupled oscillators.
//
//   nessprobe simulate --config scenario.ini [--out DIR] [--limit L] [--json]
//   nessprobe figure fig2|fig3|fig4|fig5|fig7|all [--out DIR] [--json]
//   nessprobe steady-state --config scenario.ini [--limit L]
//
// Exit codes: 0 success, 1 configuration/usage error, 2 numeric error.

#include <cmath>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nessprobe/errors.hpp"
#include "nessprobe/scenario.hpp"

namespace {

using nlohmann::json;
using namespace nessprobe;

constexpr int kExitConfig = 1;
constexpr int kExitNumeric = 2;

json number_or_null(double v) { return std::isnan(v) ? json(nullptr) : json(v); }

json curve_summary(const ResponseCurve& curve) {
  return {{"label", curve.label},
          {"n_points", curve.times.size()},
          {"t_max", curve.times.empty() ? 0.0 : curve.times.back()},
          {"final_linear", curve.linear.empty() ? json(nullptr) : json(curve.linear.back())},
          {"asymptote", number_or_null(curve.asymptote)},
          {"perturbed_value", number_or_null(curve.perturbed_value)},
          {"has_exact", !curve.exact.empty()}};
}

json config_summary(const ScenarioConfig& cfg, double infinite_lambda) {
  json out = {{"scenario", to_string(cfg.kind)},
              {"system",
               {{"omega1", cfg.system.omega1},
                {"delta", cfg.system.delta},
                {"lambda", cfg.system.lambda},
                {"gamma", cfg.system.gamma}}},
              {"grid", {{"t_max", cfg.t_max}, {"n_points", cfg.n_points}}},
              {"limit", to_string(cfg.limit)},
              {"infinite_lambda", infinite_lambda}};
  if (cfg.kind == ScenarioKind::thermal) {
    out["bath"] = {{"n1", cfg.thermal.n1}, {"n2", cfg.thermal.n2}};
    out["perturbation"] = {{"epsilon", cfg.epsilon}, {"phi", cfg.phi}};
    out["observable"] = to_string(cfg.observable);
  } else {
    out["bath"] = {{"n", cfg.squeezed.n},
                   {"r", cfg.squeezed.r},
                   {"theta", cfg.squeezed.theta},
                   {"N", cfg.squeezed.occupation()},
                   {"M", {cfg.squeezed.squeeze().real(), cfg.squeezed.squeeze().imag()}}};
    const cplx eta = cfg.eta.value_or(cplx{});
    out["perturbation"] = {{"phi", cfg.phi}, {"eta", {eta.real(), eta.imag()}}};
    out["observable"] = "a2'a2";
  }
  return out;
}

std::string in_dir(const std::string& dir, const std::string& file) {
  return (std::filesystem::path(dir) / file).string();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear response of two coupled open quantum oscillators"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  std::string limit_text;
  std::string figure_id;
  double infinite_lambda = kDefaultInfiniteLambda;
  bool want_json = false;

  auto* simulate = app.add_subcommand("simulate", "Run a scenario file and write <name>.csv");
  simulate->add_option("--config", config_path, "Scenario file")->required();
  simulate->add_option("--out", out_dir, "Output directory");
  simulate->add_option("--limit", limit_text, "none | equilibrium | unitary | infinite")
      ->check(CLI::IsMember({"none", "equilibrium", "unitary", "infinite"}));
  simulate->add_option("--infinite-lambda", infinite_lambda, "Coupling used for the infinite limit");
  simulate->add_flag("--json", want_json, "Also write <name>.json with a summary");

  std::vector<std::string> ids = figure_ids();
  ids.push_back("all");
  auto* figure = app.add_subcommand("figure", "Write the curves of a reproduced figure");
  figure->add_option("id", figure_id, "fig2 | fig3 | fig4 | fig5 | fig7 | all")
      ->required()
      ->check(CLI::IsMember(ids));
  figure->add_option("--out", out_dir, "Output directory");
  figure->add_option("--infinite-lambda", infinite_lambda, "Coupling used for the infinite limit");
  figure->add_flag("--json", want_json, "Also write <id>.json with a summary");

  auto* steady = app.add_subcommand("steady-state", "Print the steady-state CM (x1,p1,x2,p2) as CSV");
  steady->add_option("--config", config_path, "Scenario file")->required();
  steady->add_option("--limit", limit_text, "none | equilibrium | unitary | infinite")
      ->check(CLI::IsMember({"none", "equilibrium", "unitary", "infinite"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*simulate || *steady) {
      ScenarioConfig cfg = load_config(config_path);
      if (!limit_text.empty()) cfg.limit = parse_limit(limit_text);
      if (*steady) {
        std::cout << covariance_to_csv(scenario_steady_state(cfg));
        return 0;
      }
      const ResponseCurve curve = run_scenario(cfg, infinite_lambda);
      const std::string csv_path = in_dir(out_dir, cfg.name + ".csv");
      write_file_atomic(csv_path, curve_to_csv(curve));
      std::cout << csv_path << '\n';
      if (want_json) {
        json summary = config_summary(cfg, infinite_lambda);
        summary["curve"] = curve_summary(curve);
        write_file_atomic(in_dir(out_dir, cfg.name + ".json"), summary.dump(2) + "\n");
      }
      return 0;
    }

    const std::vector<std::string> selected =
        figure_id == "all" ? figure_ids() : std::vector<std::string>{figure_id};
    for (const std::string& id : selected) {
      json curves = json::array();
      for (const ResponseCurve& curve : reproduce_figure(id, infinite_lambda)) {
        const std::string csv_path = in_dir(out_dir, curve.label + ".csv");
        write_file_atomic(csv_path, curve_to_csv(curve));
        std::cout << csv_path << '\n';
        curves.push_back(curve_summary(curve));
      }
      if (want_json) {
        json summary = {{"figure", id}, {"infinite_lambda", infinite_lambda}, {"curves", curves}};
        if (id == "fig7") summary["squeezing"] = {{"r", kFigureSqueezingR}, {"theta", kFigureSqueezingTheta}};
        write_file_atomic(in_dir(out_dir, id + ".json"), summary.dump(2) + "\n");
      }
    }
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const nessprobe::Error& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}
