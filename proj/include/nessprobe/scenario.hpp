#pragma once

#include <string>
#include <vector>

#include "nessprobe/config.hpp"
#include "nessprobe/gaussian_dynamics.hpp"
#include "nessprobe/response.hpp"

namespace nessprobe {

/// Squeezing used for the squeezed-bath figure (chosen defaults for r and theta).
inline constexpr double kFigureSqueezingR = 1.0;
inline constexpr double kFigureSqueezingTheta = 0.0;

/// Applies the configured limit (lambda -> 0, gamma -> 0, or lambda -> infinite_lambda).
SystemParams limited_params(const SystemParams& params, Limit limit,
                            double infinite_lambda = kDefaultInfiniteLambda);

/// Evaluates the configured response on its time grid.
ResponseCurve run_scenario(const ScenarioConfig& config,
                           double infinite_lambda = kDefaultInfiniteLambda);

/// Steady-state CM in the quadrature basis (x1, p1, x2, p2).
QuadratureCovariance scenario_steady_state(const ScenarioConfig& config);

/// Every curve plotted in one of the reproduced figures:
/// fig2, fig3, fig4, fig5 (panels a and b), fig7.
std::vector<ResponseCurve> reproduce_figure(const std::string& id,
                                            double infinite_lambda = kDefaultInfiniteLambda);
const std::vector<std::string>& figure_ids();

/// CSV with header t,linear,exact,asymptote,perturbed_value; 12 significant
/// digits, "nan" for absent values, LF line endings.
std::string curve_to_csv(const ResponseCurve& curve);
std::string covariance_to_csv(const QuadratureCovariance& cm);

/// Writes `content` to `path` through a temporary file and a rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace nessprobe
