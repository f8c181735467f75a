#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "nessprobe/params.hpp"
#include "nessprobe/response.hpp"

namespace nessprobe {

/// Malformed or inconsistent scenario file. Deliberately not a nessprobe::Error:
/// the CLI reports it with exit code 1 instead of 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ScenarioKind { thermal, squeezed };

/// Parameter substitutions applied before a run.
enum class Limit {
  none,
  equilibrium,  // lambda -> 0
  unitary,      // gamma -> 0
  infinite,     // lambda -> infinite_lambda
};

inline constexpr double kDefaultInfiniteLambda = 1e3;
inline constexpr int kDefaultGridPoints = 400;
inline constexpr double kDefaultGridSpan = 40.0;  // t_max = span / gamma

struct ScenarioConfig {
  ScenarioKind kind = ScenarioKind::thermal;
  SystemParams system;
  ThermalBathPair thermal;   // kind == thermal
  SqueezedBath squeezed;     // kind == squeezed
  double epsilon = 0.0;
  double phi = 0.0;          // for squeezed runs, also derived from eta when given
  std::optional<cplx> eta;
  double t_max = 0.0;
  int n_points = kDefaultGridPoints;
  Observable observable = Observable::energy1;
  Limit limit = Limit::none;
  std::string name = "response";
};

/// Parses an INI-style scenario:
///
///   scenario = thermal            ; or squeezed
///   [system]       delta, lambda, gamma
///   [bath]         thermal:  beta1_omega1, beta2_omega1  or  n1, n2
///                  squeezed: beta_omega1 or n, r, theta
///   [perturbation] epsilon, phi  (thermal);  phi or eta, eta_imag  (squeezed)
///   [grid]         t_max (default 40/gamma), n_points (default 400)
///   [output]       name, observable (energy1|energy2), limit
///
/// Unknown sections or keys are rejected. `source` names the input in messages.
ScenarioConfig parse_config(std::istream& in, const std::string& source);
ScenarioConfig load_config(const std::string& path);

Limit parse_limit(const std::string& text);
std::string to_string(Limit limit);
std::string to_string(ScenarioKind kind);
std::string to_string(Observable observable);

}  // namespace nessprobe
