#include "nessprobe/squeezed_steady.hpp"

#include <cmath>
#include <string>

#include "nessprobe/errors.hpp"
#include "nessprobe/heisenberg.hpp"

namespace nessprobe {

using namespace std::complex_literals;

std::pair<double, cplx> bath_coefficients(double n, double r, double theta) {
  const SqueezedBath bath{n, r, theta};
  bath.validate();
  const double big_n = bath.occupation();
  const cplx m = bath.squeeze();
  // Equality at n = 0, so allow roundoff on the right.
  const double bound = big_n * (big_n + 1.0);
  if (std::norm(m) > bound * (1.0 + 1e-12) + 1e-300) {
    throw InconsistentInput("squeezed bath violates |M|^2 <= N(N+1)");
  }
  return {big_n, m};
}

SqueezedSteadyState steady_state_squeezed(const SystemParams& params, const SqueezedBath& bath) {
  params.validate();
  if (!(params.gamma > 0.0)) {
    throw NoSteadyState("squeezed-bath steady state requires gamma > 0");
  }
  const auto [big_n, m] = bath_coefficients(bath.n, bath.r, bath.theta);
  const double g = params.gamma;
  const double w1 = params.omega1;
  const double w2 = params.omega2();  // w1 + delta
  const double l = params.lambda;
  const double l2 = l * l;

  const cplx outer = g + 2i * (w1 + w2);  // gamma + 2i(2 w1 + delta)
  const cplx inner = -2i * l2 + (g + 2i * w1) * w2;
  const cplx den = inner * outer;
  const double scale = std::max({1.0, g * g, w1 * w1, w2 * w2, l2});
  if (std::abs(den) < 1e-14 * scale * scale) {
    throw DegenerateParameters("squeezed steady state has a vanishing denominator");
  }

  SqueezedSteadyState out;
  out.d = m * g * (-2i * l2 + w2 * outer) / den;
  out.e = 2i * std::conj(m) * g * l * w2 / std::conj(den);
  out.f = 2i * m * g * l2 / den;

  const cplx diag = big_n + 0.5;
  CMat4& s = out.sigma0.sigma;
  s << diag, out.d, 0.0, std::conj(out.e),
       std::conj(out.d), diag, out.e, 0.0,
       0.0, std::conj(out.e), diag, out.f,
       out.e, 0.0, std::conj(out.f), diag;
  return out;
}

double stationarity_residual(const SystemParams& params, const SqueezedBath& bath,
                             const LadderCovariance& state) {
  const ObservableGenerator gen = build_squeezed_observable_generator(params, bath);
  const CVec10 v = moments_from_ladder(state);
  return (gen.m * v + gen.w).cwiseAbs().maxCoeff();
}

}  // namespace nessprobe
