#pragma once

#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "nessprobe/heisenberg.hpp"
#include "nessprobe/params.hpp"

namespace nessprobe {

/// Step quenches switched on at t = 0.
struct CouplingQuench {
  double epsilon = 0.0;  // lambda -> lambda + epsilon
};
struct OccupationQuench {
  double phi = 0.0;  // n1 -> n1 + phi (or N -> N + phi)
};
struct SqueezingQuench {
  cplx eta;  // M -> M + eta
};
using Perturbation = std::variant<CouplingQuench, OccupationQuench, SqueezingQuench>;

/// A1 = b1 w1 a1'a1, A2 = b2 w2 a2'a2 (two-bath scenario).
enum class Observable { energy1, energy2 };

/// Pass as tau for the long-time limit.
inline constexpr double kInfiniteTime = std::numeric_limits<double>::infinity();

/// Linear response of A1 to a coupling quench, in closed form.
double response_coupling(const SystemParams& params, const ThermalBathPair& baths,
                         double epsilon, double tau);

/// Linear response of A1 (via f) or A2 (via j) to an occupation quench on bath 1.
double response_occupation(const SystemParams& params, const ThermalBathPair& baths, double phi,
                           double tau, Observable observable);

/// response_coupling + response_occupation for A1.
double response_combined(const SystemParams& params, const ThermalBathPair& baths,
                         double epsilon, double phi, double tau);

/// All-orders steady-state shift of the observable under (lambda + eps, n1 + phi).
double perturbed_value(const SystemParams& params, const ThermalBathPair& baths, double epsilon,
                       double phi, Observable observable);

/// Exact dynamic response for dissipative quenches from coefficient differences.
/// Coupling quenches raise UnsupportedPerturbation.
double exact_response(const SystemParams& params, const ThermalBathPair& baths,
                      const Perturbation& perturbation, double tau, Observable observable);

/// Probe (a2'a2, dimensionless) response to an occupation quench phi of the
/// squeezed bath: gamma phi int_0^tau f~.
double response_squeezed(const SystemParams& params, const SqueezedBath& bath, double phi,
                         double tau);

/// l~(tau, N + phi) - l~(tau, N).
double exact_response_squeezed(const SystemParams& params, const SqueezedBath& bath, double phi,
                               double tau);

/// Shift of <a2'a2> between the steady states at (N + phi, M + eta(phi)) and (N, M).
double perturbed_value_squeezed(const SystemParams& params, const SqueezedBath& bath, double phi);

/// phi = sum_j DeltaA_j / (beta_j omega_j).
double infer_phi_from_probe(double delta_a1_inf, double delta_a2_inf, double beta1_omega1,
                            double beta2_omega2);

/// eta = -2 e^{i theta} phi cosh r sinh r / (cosh^2 r + sinh^2 r) = -e^{i theta} phi tanh 2r.
cplx eta_from_phi(double phi, double r, double theta);

/// Inverse of eta_from_phi; requires r > 0 and eta on the e^{i theta} ray.
double phi_from_eta(cplx eta, double r, double theta);

/// int_0^tau Tr[a2'a2(tau - t) L_eta rho0] dt on the moment representation.
cplx squeezing_quench_contribution(const SystemParams& params, const SqueezedBath& bath, cplx eta,
                                   double tau);

/// Linear response through the numeric propagator (two-bath scenario):
/// int_0^tau c(tau - t) . <L1* v>_0 dt with c the observable's Heisenberg coefficients.
double linear_response_numeric(const SystemParams& params, const ThermalBathPair& baths,
                               const Perturbation& perturbation, double tau,
                               Observable observable);

/// Sampled response. `exact` is empty when no exact oracle exists; NaN marks
/// an undefined asymptote or perturbed value (e.g. gamma = 0).
struct ResponseCurve {
  std::string label;
  std::vector<double> times;
  std::vector<double> linear;
  std::vector<double> exact;
  double asymptote = 0.0;
  double perturbed_value = 0.0;
};

std::vector<double> uniform_grid(double t_max, int n_points);

ResponseCurve thermal_response_curve(const SystemParams& params, const ThermalBathPair& baths,
                                     double epsilon, double phi, Observable observable,
                                     const std::vector<double>& times, std::string label);

ResponseCurve squeezed_response_curve(const SystemParams& params, const SqueezedBath& bath,
                                      double phi, const std::vector<double>& times,
                                      std::string label);

}  // namespace nessprobe
