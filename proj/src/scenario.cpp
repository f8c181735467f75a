#include "nessprobe/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "nessprobe/errors.hpp"
#include "nessprobe/squeezed_steady.hpp"

namespace nessprobe {

namespace {

// Shared parameters of the two-bath figures.
constexpr double kDelta = 10.0;
constexpr double kLambda = 5.0;
constexpr double kGamma = 0.5;
constexpr double kEpsilon = 0.1;
constexpr double kPhi = 0.1;
constexpr double kBeta1Omega1 = 0.1;
constexpr double kBeta2Omega1 = 0.001;
constexpr double kSqueezedBetaOmega1 = 0.1;

SystemParams figure_params() {
  SystemParams p;
  p.delta = kDelta;
  p.lambda = kLambda;
  p.gamma = kGamma;
  return p;
}

std::string format_value(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

SystemParams limited_params(const SystemParams& params, Limit limit, double infinite_lambda) {
  SystemParams out = params;
  switch (limit) {
    case Limit::equilibrium: out.lambda = 0.0; break;
    case Limit::unitary: out.gamma = 0.0; break;
    case Limit::infinite:
      if (!(infinite_lambda > 0.0) || !std::isfinite(infinite_lambda)) {
        throw InvalidModel("infinite-coupling lambda must be positive and finite");
      }
      out.lambda = infinite_lambda;
      break;
    case Limit::none: break;
  }
  return out;
}

ResponseCurve run_scenario(const ScenarioConfig& config, double infinite_lambda) {
  const SystemParams params = limited_params(config.system, config.limit, infinite_lambda);
  const std::vector<double> times = uniform_grid(config.t_max, config.n_points);
  if (config.kind == ScenarioKind::thermal) {
    return thermal_response_curve(params, config.thermal, config.epsilon, config.phi,
                                  config.observable, times, config.name);
  }
  return squeezed_response_curve(params, config.squeezed, config.phi, times, config.name);
}

QuadratureCovariance scenario_steady_state(const ScenarioConfig& config) {
  const SystemParams params = limited_params(config.system, config.limit);
  if (config.kind == ScenarioKind::thermal) {
    return solve_lyapunov(build_generators(params, config.thermal));
  }
  return cm_transform(steady_state_squeezed(params, config.squeezed).sigma0);
}

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids = {"fig2", "fig3", "fig4", "fig5", "fig7"};
  return ids;
}

std::vector<ResponseCurve> reproduce_figure(const std::string& id, double infinite_lambda) {
  const SystemParams base = figure_params();
  const std::vector<double> times = uniform_grid(kDefaultGridSpan / kGamma, kDefaultGridPoints);
  const ThermalBathPair baths =
      ThermalBathPair::from_inverse_temperatures(kBeta1Omega1, kBeta2Omega1, base);
  const SystemParams equilibrium = limited_params(base, Limit::equilibrium);
  const SystemParams infinite = limited_params(base, Limit::infinite, infinite_lambda);
  const auto thermal = [&](const SystemParams& p, double eps, Observable obs, std::string label) {
    return thermal_response_curve(p, baths, eps, kPhi, obs, times, std::move(label));
  };

  if (id == "fig2") {
    return {thermal(base, kEpsilon, Observable::energy1, "fig2_steady_state"),
            thermal(equilibrium, kEpsilon, Observable::energy1, "fig2_equilibrium"),
            thermal(limited_params(base, Limit::unitary), kEpsilon, Observable::energy1,
                    "fig2_unitary")};
  }
  if (id == "fig3") {
    return {thermal(base, 0.0, Observable::energy1, "fig3_steady_state"),
            thermal(equilibrium, 0.0, Observable::energy1, "fig3_equilibrium")};
  }
  if (id == "fig4") {
    return {thermal(base, 0.0, Observable::energy2, "fig4_steady_state"),
            thermal(equilibrium, 0.0, Observable::energy2, "fig4_equilibrium")};
  }
  if (id == "fig5") {
    return {thermal(base, 0.0, Observable::energy1, "fig5a_steady_state"),
            thermal(infinite, 0.0, Observable::energy1, "fig5a_infinite_coupling"),
            thermal(base, 0.0, Observable::energy2, "fig5b_steady_state"),
            thermal(infinite, 0.0, Observable::energy2, "fig5b_infinite_coupling")};
  }
  if (id == "fig7") {
    const SqueezedBath bath =
        SqueezedBath::from_inverse_temperature(kSqueezedBetaOmega1, kFigureSqueezingR,
                                                 kFigureSqueezingTheta);
    return {squeezed_response_curve(base, bath, kPhi, times, "fig7_steady_state"),
            squeezed_response_curve(equilibrium, bath, kPhi, times, "fig7_equilibrium")};
  }
  throw InvalidModel("unknown figure id '" + id + "' (expected fig2, fig3, fig4, fig5 or fig7)");
}

std::string curve_to_csv(const ResponseCurve& curve) {
  std::string out = "t,linear,exact,asymptote,perturbed_value\n";
  const std::string asymptote = format_value(curve.asymptote);
  const std::string perturbed = format_value(curve.perturbed_value);
  for (std::size_t i = 0; i < curve.times.size(); ++i) {
    const double exact = i < curve.exact.size() ? curve.exact[i] : std::nan("");
    out += format_value(curve.times[i]) + ',' + format_value(curve.linear[i]) + ',' +
           format_value(exact) + ',' + asymptote + ',' + perturbed + '\n';
  }
  return out;
}

std::string covariance_to_csv(const QuadratureCovariance& cm) {
  std::string out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      out += format_value(cm.sigma(i, j));
      out += j == 3 ? '\n' : ',';
    }
  }
  return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = fs::path(path + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("failed writing " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace nessprobe
