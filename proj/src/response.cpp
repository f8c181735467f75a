#include "nessprobe/response.hpp"

#include <cmath>
#include <type_traits>
#include <utility>

#include "nessprobe/errors.hpp"
#include "nessprobe/gaussian_dynamics.hpp"
#include "nessprobe/quadratic_lindblad.hpp"
#include "nessprobe/squeezed_steady.hpp"

namespace nessprobe {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// int_0^tau e^{-g u} du, and the cos/sin analogues with frequency z.
struct DampedIntegrals {
  double i0, ic, is;
};

DampedIntegrals damped_integrals(double g, double z, double tau) {
  if (tau == 0.0) return {0.0, 0.0, 0.0};
  const double g2z2 = g * g + z * z;
  if (std::isinf(tau)) {
    if (!(g > 0.0)) {
      throw NoSteadyState("undamped response has no long-time limit (gamma = 0)");
    }
    return {1.0 / g, g / g2z2, z / g2z2};
  }
  DampedIntegrals out;
  out.i0 = g > 0.0 ? -std::expm1(-g * tau) / g : tau;
  if (g2z2 == 0.0) {
    out.ic = tau;
    out.is = 0.0;
    return out;
  }
  const double decay = std::exp(-g * tau);
  const double c = std::cos(z * tau);
  const double s = std::sin(z * tau);
  out.ic = (g - decay * (g * c - z * s)) / g2z2;
  out.is = (z - decay * (g * s + z * c)) / g2z2;
  return out;
}

double observable_weight(const ThermalBathPair& baths, Observable observable) {
  const double w = observable == Observable::energy1 ? baths.beta_omega1() : baths.beta_omega2();
  if (!std::isfinite(w)) {
    throw InvalidModel("energy observable needs a non-empty bath (beta omega is infinite)");
  }
  return w;
}

Monomial occupation_monomial(Observable observable) {
  return observable == Observable::energy1 ? Monomial::n1 : Monomial::n2;
}

QuadraticLindbladian thermal_perturbation(const SystemParams& params,
                                          const Perturbation& perturbation) {
  QuadraticLindbladian lb;
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, CouplingQuench>) {
          lb.hamiltonian << 0.0, p.epsilon, p.epsilon, 0.0;
        } else if constexpr (std::is_same_v<T, OccupationQuench>) {
          lb.terms = {{params.gamma * p.phi, LadderOp::a1d, LadderOp::a1},
                      {params.gamma * p.phi, LadderOp::a1, LadderOp::a1d}};
        } else {
          throw UnsupportedPerturbation("squeezing quenches need the squeezed-bath scenario");
        }
      },
      perturbation);
  return lb;
}

// M-derivative of the squeezed dissipator, scaled by eta.
QuadraticLindbladian squeezing_perturbation(const SystemParams& params, cplx eta) {
  QuadraticLindbladian lb;
  lb.terms = {{-params.gamma * eta, LadderOp::a1d, LadderOp::a1d},
              {-params.gamma * std::conj(eta), LadderOp::a1, LadderOp::a1}};
  return lb;
}

SqueezedBath shifted_bath(const SqueezedBath& bath, double phi) {
  // N is affine in n with slope cosh 2r; M follows with the same n.
  SqueezedBath out = bath;
  out.n = bath.n + phi / std::cosh(2.0 * bath.r);
  return out;
}

double squeezed_numeric_integral(const SystemParams& params, const SqueezedBath& bath,
                                 double phi, double tau) {
  const ObservableGenerator gen = build_squeezed_observable_generator(params, bath);
  CVec10 source = CVec10::Zero();
  source(index(Monomial::n1)) = params.gamma * phi;
  return integrate_response(gen, unit_observable(Monomial::n2), source, tau).real();
}

double squeezed_constant_numeric(const SystemParams& params, const SqueezedBath& bath,
                                 double tau) {
  const ObservableGenerator gen = build_squeezed_observable_generator(params, bath);
  return evolve_observables(gen, unit_observable(Monomial::n2), tau).constant.real();
}

}  // namespace

double response_coupling(const SystemParams& params, const ThermalBathPair& baths,
                         double epsilon, double tau) {
  params.validate();
  baths.validate();
  if (!(tau >= 0.0)) throw InvalidModel("response time must be non-negative");
  const double z2 = params.z_squared();
  if (epsilon == 0.0 || params.lambda == 0.0 || baths.n1 == baths.n2 || z2 == 0.0) return 0.0;
  const double g = params.gamma;
  const double d = params.delta;
  const double l = params.lambda;
  const double z = std::sqrt(z2);
  const DampedIntegrals in = damped_integrals(g, z, tau);
  const double prefactor =
      2.0 * (baths.n2 - baths.n1) * l * baths.beta_omega1() * epsilon / (z2 * (g * g + z2));
  // Kernel G(u) = g [4 l^2 cos(zu) + d^2] + (g^2 + d^2) z sin(zu), damped by e^{-g u}.
  return prefactor * (g * (4.0 * l * l * in.ic + d * d * in.i0) + (g * g + d * d) * z * in.is);
}

double response_occupation(const SystemParams& params, const ThermalBathPair& baths, double phi,
                           double tau, Observable observable) {
  params.validate();
  baths.validate();
  if (!(tau >= 0.0)) throw InvalidModel("response time must be non-negative");
  const double weight = observable_weight(baths, observable);
  const double g = params.gamma;
  if (phi == 0.0 || g == 0.0) return 0.0;
  const double z2 = params.z_squared();
  const double l2 = params.lambda * params.lambda;
  const DampedIntegrals in = damped_integrals(g, std::sqrt(z2), tau);
  double integral = 0.0;
  if (observable == Observable::energy1) {
    integral = z2 == 0.0 ? in.i0
                         : ((params.delta * params.delta + 2.0 * l2) * in.i0 + 2.0 * l2 * in.ic) / z2;
  } else {
    integral = z2 == 0.0 ? 0.0 : 2.0 * l2 * (in.i0 - in.ic) / z2;
  }
  return weight * g * phi * integral;
}

double response_combined(const SystemParams& params, const ThermalBathPair& baths,
                         double epsilon, double phi, double tau) {
  return response_coupling(params, baths, epsilon, tau) +
         response_occupation(params, baths, phi, tau, Observable::energy1);
}

double perturbed_value(const SystemParams& params, const ThermalBathPair& baths, double epsilon,
                       double phi, Observable observable) {
  const double weight = observable_weight(baths, observable);
  SystemParams shifted = params;
  shifted.lambda += epsilon;
  const ThermalBathPair shifted_baths{baths.n1 + phi, baths.n2};
  const int k = observable == Observable::energy1 ? 1 : 2;
  const double before = mean_occupation(closed_form_steady_state(params, baths), k);
  const double after = mean_occupation(closed_form_steady_state(shifted, shifted_baths), k);
  return weight * (after - before);
}

double exact_response(const SystemParams& params, const ThermalBathPair& baths,
                      const Perturbation& perturbation, double tau, Observable observable) {
  const auto* quench = std::get_if<OccupationQuench>(&perturbation);
  if (quench == nullptr) {
    throw UnsupportedPerturbation(
        "exact dynamic response is only available for occupation quenches");
  }
  const double weight = observable_weight(baths, observable);
  const double phi = quench->phi;
  if (observable == Observable::energy1) {
    const double base = coeffs_thermal(params, baths, tau).s;
    const double moved = coeffs_thermal(params, {baths.n1 + phi, baths.n2}, tau).s;
    return weight * (moved - base);
  }
  // a2'a2 is a1'a1 with the modes relabelled; s only sees delta^2.
  const double base = coeffs_thermal(params, {baths.n2, baths.n1}, tau).s;
  const double moved = coeffs_thermal(params, {baths.n2, baths.n1 + phi}, tau).s;
  return weight * (moved - base);
}

double response_squeezed(const SystemParams& params, const SqueezedBath& bath, double phi,
                         double tau) {
  params.validate();
  bath.validate();
  if (!(tau >= 0.0)) throw InvalidModel("response time must be non-negative");
  if (phi == 0.0 || params.lambda == 0.0 || params.gamma == 0.0) return 0.0;
  try {
    return params.gamma * phi * integrated_f_tilde(params, tau);
  } catch (const DegenerateParameters&) {
    return squeezed_numeric_integral(params, bath, phi, tau);
  }
}

double exact_response_squeezed(const SystemParams& params, const SqueezedBath& bath, double phi,
                               double tau) {
  params.validate();
  bath.validate();
  if (!(tau >= 0.0) || std::isinf(tau)) {
    throw InvalidModel("exact response time must be finite and non-negative");
  }
  if (phi == 0.0) return 0.0;
  const double big_n = bath.occupation();
  try {
    return coeffs_squeezed(params, big_n + phi, tau).l - coeffs_squeezed(params, big_n, tau).l;
  } catch (const DegenerateParameters&) {
    return squeezed_constant_numeric(params, shifted_bath(bath, phi), tau) -
           squeezed_constant_numeric(params, bath, tau);
  }
}

double perturbed_value_squeezed(const SystemParams& params, const SqueezedBath& bath,
                                double phi) {
  const SqueezedBath moved = shifted_bath(bath, phi);
  const double before = steady_state_squeezed(params, bath).sigma0.sigma(2, 2).real();
  const double after = steady_state_squeezed(params, moved).sigma0.sigma(2, 2).real();
  return after - before;
}

double infer_phi_from_probe(double delta_a1_inf, double delta_a2_inf, double beta1_omega1,
                            double beta2_omega2) {
  if (!(beta1_omega1 > 0.0) || !(beta2_omega2 > 0.0) || !std::isfinite(beta1_omega1) ||
      !std::isfinite(beta2_omega2)) {
    throw InvalidModel("inverse temperatures must be positive and finite");
  }
  return delta_a1_inf / beta1_omega1 + delta_a2_inf / beta2_omega2;
}

cplx eta_from_phi(double phi, double r, double theta) {
  if (!(r >= 0.0)) throw InvalidModel("squeezing magnitude must be non-negative");
  const double ch = std::cosh(r);
  const double sh = std::sinh(r);
  return -2.0 * std::polar(1.0, theta) * phi * ch * sh / (ch * ch + sh * sh);
}

double phi_from_eta(cplx eta, double r, double theta) {
  if (!(r > 0.0)) {
    throw DegenerateParameters("phi cannot be recovered from eta without squeezing (r = 0)");
  }
  const cplx aligned = -eta * std::polar(1.0, -theta) / std::tanh(2.0 * r);
  if (std::abs(aligned.imag()) > 1e-9 * std::max(1.0, std::abs(aligned))) {
    throw InconsistentInput("eta is not along the bath squeezing phase");
  }
  return aligned.real();
}

cplx squeezing_quench_contribution(const SystemParams& params, const SqueezedBath& bath,
                                   cplx eta, double tau) {
  const ObservableGenerator gen = build_squeezed_observable_generator(params, bath);
  const CVec10 moments = moments_from_ladder(steady_state_squeezed(params, bath).sigma0);
  const ObservableGenerator quench =
      assemble_observable_generator(squeezing_perturbation(params, eta));
  const CVec10 source = quench.m * moments + quench.w;
  return integrate_response(gen, unit_observable(Monomial::n2), source, tau);
}

double linear_response_numeric(const SystemParams& params, const ThermalBathPair& baths,
                               const Perturbation& perturbation, double tau,
                               Observable observable) {
  const double weight = observable_weight(baths, observable);
  const ObservableGenerator gen = build_observable_generator(params, baths);
  const CVec10 moments = moments_from_quadrature(closed_form_steady_state(params, baths));
  const ObservableGenerator quench =
      assemble_observable_generator(thermal_perturbation(params, perturbation));
  const CVec10 source = quench.m * moments + quench.w;
  const cplx value =
      integrate_response(gen, unit_observable(occupation_monomial(observable)), source, tau);
  return weight * value.real();
}

std::vector<double> uniform_grid(double t_max, int n_points) {
  if (!(t_max > 0.0) || !std::isfinite(t_max)) {
    throw InvalidModel("grid t_max must be positive and finite");
  }
  if (n_points < 2) throw InvalidModel("grid needs at least 2 points");
  std::vector<double> t(static_cast<std::size_t>(n_points));
  for (int i = 0; i < n_points; ++i) t[i] = t_max * i / (n_points - 1);
  return t;
}

ResponseCurve thermal_response_curve(const SystemParams& params, const ThermalBathPair& baths,
                                     double epsilon, double phi, Observable observable,
                                     const std::vector<double>& times, std::string label) {
  ResponseCurve curve;
  curve.label = std::move(label);
  curve.times = times;
  const bool coupled_a2 = observable == Observable::energy2 && epsilon != 0.0;
  auto linear_at = [&](double tau) {
    if (observable == Observable::energy1) return response_combined(params, baths, epsilon, phi, tau);
    double value = response_occupation(params, baths, phi, tau, observable);
    if (coupled_a2) {
      value += linear_response_numeric(params, baths, CouplingQuench{epsilon}, tau, observable);
    }
    return value;
  };
  curve.linear.reserve(times.size());
  for (double t : times) curve.linear.push_back(linear_at(t));
  if (epsilon == 0.0) {
    curve.exact.reserve(times.size());
    for (double t : times) {
      curve.exact.push_back(exact_response(params, baths, OccupationQuench{phi}, t, observable));
    }
  }
  if (params.gamma > 0.0) {
    curve.asymptote = linear_at(kInfiniteTime);
    curve.perturbed_value = perturbed_value(params, baths, epsilon, phi, observable);
  } else {
    curve.asymptote = kNaN;
    curve.perturbed_value = kNaN;
  }
  return curve;
}

ResponseCurve squeezed_response_curve(const SystemParams& params, const SqueezedBath& bath,
                                      double phi, const std::vector<double>& times,
                                      std::string label) {
  ResponseCurve curve;
  curve.label = std::move(label);
  curve.times = times;
  curve.linear.reserve(times.size());
  curve.exact.reserve(times.size());
  for (double t : times) {
    curve.linear.push_back(response_squeezed(params, bath, phi, t));
    curve.exact.push_back(exact_response_squeezed(params, bath, phi, t));
  }
  if (params.gamma > 0.0) {
    curve.asymptote = response_squeezed(params, bath, phi, kInfiniteTime);
    curve.perturbed_value = perturbed_value_squeezed(params, bath, phi);
  } else {
    curve.asymptote = kNaN;
    curve.perturbed_value = kNaN;
  }
  return curve;
}

}  // namespace nessprobe
