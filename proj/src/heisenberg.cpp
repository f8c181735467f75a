#include "nessprobe/heisenberg.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "nessprobe/errors.hpp"

namespace nessprobe {

namespace {

constexpr double kRealTolerance = 1e-9;
constexpr double kXiDegeneracy = 1e-8;

using namespace std::complex_literals;

double checked_real(cplx value, const char* name) {
  const double scale = std::max(1.0, std::abs(value));
  if (std::abs(value.imag()) > kRealTolerance * scale) {
    throw InconsistentInput(std::string("squeezed coefficient ") + name +
                            " has imaginary residue " + std::to_string(value.imag()));
  }
  return value.real();
}

Eigen::MatrixXcd augmented(const ObservableGenerator& gen, const CVec10& source) {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(11, 11);
  a.topLeftCorner(10, 10) = gen.m;
  a.topRightCorner(10, 1) = source;
  return a;
}

// Spectral data shared by the squeezed closed forms.
struct SqueezedSpectrum {
  double gamma, lambda, delta, z2;
  cplx xi;
  cplx root_minus;  // sqrt(zeta^2 - xi)
  cplx root_plus;   // sqrt(zeta^2 + xi)
  cplx a;           // sqrt(2 (zeta^2 - xi))
  cplx b;           // sqrt(2 (zeta^2 + xi))
};

SqueezedSpectrum squeezed_spectrum(const SystemParams& params) {
  params.validate();
  SqueezedSpectrum sp{};
  sp.gamma = params.gamma;
  sp.lambda = params.lambda;
  sp.delta = params.delta;
  sp.z2 = params.z_squared();
  const double g2 = sp.gamma * sp.gamma;
  const double zeta2 = g2 - 4.0 * sp.z2;
  const double xi2 = (4.0 * sp.z2 + g2) * (4.0 * sp.z2 + g2) - 64.0 * g2 * sp.lambda * sp.lambda;
  sp.xi = std::sqrt(cplx(xi2, 0.0));
  if (std::abs(sp.xi) < kXiDegeneracy) {
    throw DegenerateParameters("squeezed closed forms have a repeated root (|xi| < 1e-8); "
                               "use the numeric propagator");
  }
  // xi^2 - zeta^4 = 16 g^2 d^2, so whichever of zeta^2 +- xi cancels is
  // rebuilt from the other one.
  const cplx product = 16.0 * g2 * sp.delta * sp.delta;
  cplx plus = zeta2 + sp.xi;
  cplx minus = zeta2 - sp.xi;
  if (std::abs(plus) < std::abs(minus)) {
    plus = -product / minus;
  } else {
    minus = -product / plus;
  }
  const double scale = std::max(1.0, std::abs(zeta2) + std::abs(sp.xi));
  if (std::abs(plus) < 1e-12 * scale || std::abs(minus) < 1e-12 * scale) {
    throw DegenerateParameters("squeezed closed forms are singular (zeta^2 +- xi = 0); "
                               "use the numeric propagator");
  }
  sp.root_minus = std::sqrt(minus);
  sp.root_plus = std::sqrt(plus);
  sp.a = std::sqrt(2.0 * minus);
  sp.b = std::sqrt(2.0 * plus);
  return sp;
}

// (e^{k tau} - 1) / k, with the k -> 0 limit and tau = inf for decaying k.
cplx exp_integral(cplx k, double tau) {
  if (std::isinf(tau)) return -1.0 / k;
  if (std::abs(k * tau) < 1e-8) return tau * (1.0 + 0.5 * k * tau);
  return (std::exp(k * tau) - 1.0) / k;
}

}  // namespace

ObservableGenerator build_observable_generator(const SystemParams& params,
                                               const ThermalBathPair& baths) {
  params.validate();
  baths.validate();
  const double g = params.gamma;
  const double w1 = params.omega1;
  const double w2 = params.omega2();
  const double w12 = w1 + w2;
  const double dw = w1 - w2;
  const cplx il = 1i * params.lambda;

  ObservableGenerator gen;
  CMat10& m = gen.m;
  m.setZero();
  m(0, 0) = -g;                m(0, 7) = il;          m(0, 8) = -il;
  m(1, 1) = -2i * w1 - g;      m(1, 6) = -2.0 * il;
  m(2, 2) = 2i * w1 - g;       m(2, 9) = 2.0 * il;
  m(3, 3) = -g;                m(3, 7) = -il;         m(3, 8) = il;
  m(4, 4) = -2i * w2 - g;      m(4, 6) = -2.0 * il;
  m(5, 5) = 2i * w2 - g;       m(5, 9) = 2.0 * il;
  m(6, 1) = -il;  m(6, 4) = -il;  m(6, 6) = -1i * w12 - g;
  m(7, 0) = il;   m(7, 3) = -il;  m(7, 7) = -1i * dw - g;
  m(8, 0) = -il;  m(8, 3) = il;   m(8, 8) = 1i * dw - g;
  m(9, 2) = il;   m(9, 5) = il;   m(9, 9) = 1i * w12 - g;

  gen.w.setZero();
  gen.w(index(Monomial::n1)) = baths.n1 * g;
  gen.w(index(Monomial::n2)) = baths.n2 * g;
  return gen;
}

ObservableGenerator build_squeezed_observable_generator(const SystemParams& params,
                                                        const SqueezedBath& bath) {
  return assemble_observable_generator(squeezed_lindbladian(params, bath));
}

EvolvedObservable evolve_observables(const ObservableGenerator& gen, const CVec10& observable,
                                     double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw InvalidModel("evolution time must be finite and non-negative");
  }
  EvolvedObservable out;
  if (t == 0.0) {
    out.coefficients = observable;
    out.constant = 0.0;
    return out;
  }
  const Eigen::MatrixXcd e = (t * augmented(gen, gen.w)).exp();
  out.coefficients = (observable.transpose() * e.topLeftCorner(10, 10)).transpose();
  out.constant = (observable.transpose() * e.topRightCorner(10, 1))(0, 0);
  return out;
}

cplx integrate_response(const ObservableGenerator& gen, const CVec10& observable,
                        const CVec10& source, double tau) {
  if (!(tau >= 0.0)) throw InvalidModel("response time must be non-negative");
  if (tau == 0.0) return 0.0;
  if (std::isinf(tau)) {
    // int_0^inf e^{uM} du = -M^{-1} for Hurwitz M.
    const Eigen::ComplexEigenSolver<CMat10> solver(gen.m, false);
    if (!(solver.eigenvalues().real().maxCoeff() < -1e-12)) {
      throw NoSteadyState("observable flow is not damped; the long-time response is undefined");
    }
    const CVec10 x = gen.m.fullPivLu().solve(source);
    return -(observable.transpose() * x)(0, 0);
  }
  const Eigen::MatrixXcd e = (tau * augmented(gen, source)).exp();
  return (observable.transpose() * e.topRightCorner(10, 1))(0, 0);
}

ThermalCoefficients coeffs_thermal(const SystemParams& params, const ThermalBathPair& baths,
                                   double t) {
  params.validate();
  baths.validate();
  const double g = params.gamma;
  const double d = params.delta;
  const double l = params.lambda;
  const double n1 = baths.n1;
  const double n2 = baths.n2;
  const double decay = std::exp(-g * t);

  ThermalCoefficients c;
  const double z2 = params.z_squared();
  if (z2 == 0.0) {
    c.f = decay;
    c.j = 0.0;
    c.p = 0.0;
    c.q = 0.0;
    c.s = -n1 * std::expm1(-g * t);
    return c;
  }
  const double z = std::sqrt(z2);
  const double cz = std::cos(z * t);
  const double sz = std::sin(z * t);
  c.f = decay * (d * d + 2.0 * l * l + 2.0 * l * l * cz) / z2;
  c.j = 2.0 * l * l * decay * (1.0 - cz) / z2;
  c.p = l * decay * (-d + 1i * z * sz + d * cz) / z2;
  c.q = std::conj(c.p);

  // Stationary part minus the decaying transient; e^{g t} factored out.
  const double g2z2 = g * g + z2;
  const double stationary = z2 * (n1 * (g * g + d * d) + 2.0 * l * l * (n1 + n2));
  const double transient =
      decay * (g2z2 * (d * d * n1 + 2.0 * l * l * (n1 + n2)) +
               2.0 * g * l * l * (n1 - n2) * (g * cz - z * sz));
  c.s = (stationary - transient) / (z2 * g2z2);
  return c;
}

SqueezedCoefficients coeffs_squeezed(const SystemParams& params, double occupation, double t) {
  if (!(t >= 0.0)) throw InvalidModel("evolution time must be non-negative");
  if (!(occupation >= 0.0)) throw InvalidModel("bath occupation must be non-negative");
  if (!(params.gamma > 0.0)) {
    throw DegenerateParameters("squeezed closed forms require gamma > 0");
  }
  const SqueezedSpectrum sp = squeezed_spectrum(params);
  const double g = sp.gamma;
  const double g2 = g * g;
  const double g3 = g2 * g;
  const double l2 = sp.lambda * sp.lambda;
  const double z2 = sp.z2;
  const double z4 = z2 * z2;
  const cplx xi = sp.xi;
  const cplx a = sp.a;
  const cplx b = sp.b;
  const cplx ra = sp.root_minus;
  const cplx rb = sp.root_plus;

  const cplx e_ma = std::exp((-g / 2.0 - a / 4.0) * t);
  const cplx e_pa = std::exp((-g / 2.0 + a / 4.0) * t);
  const cplx e_mb = std::exp((-g / 2.0 - b / 4.0) * t);
  const cplx e_pb = std::exp((-g / 2.0 + b / 4.0) * t);

  SqueezedCoefficients out;

  const cplx f = 8.0 * l2 / xi * std::exp(-g * t / 2.0) *
                 (std::cosh(t * b / 4.0) - std::cosh(t * a / 4.0));
  out.f = checked_real(f, "f");

  const cplx c = g - 2i * sp.delta;
  out.g = sp.lambda / (std::sqrt(2.0) * xi) *
          (-1i * e_ma / ra * (16.0 * l2 + xi - c * (c - a)) +
           1i * e_pa / ra * (16.0 * l2 + xi - c * (c + a)) +
           1i * e_pb / rb * (-16.0 * l2 + xi + c * (c + b)) -
           1i * e_mb / rb * (-16.0 * l2 + xi + c * (c - b)));

  const cplx x = 32.0 * l2 + xi - 4.0 * z2;
  const cplx y = 16.0 * l2 + xi - 4.0 * z2;
  const cplx w = g2 - 16.0 * l2 + xi + 4.0 * z2;
  const cplx j = 1.0 / (8.0 * std::sqrt(2.0) * xi) *
                 (2.0 * e_ma / ra * (2.0 * g3 - g2 * a - 2.0 * g * x + a * y) +
                  2.0 * e_pa / ra * (-2.0 * g3 - g2 * a + 2.0 * g * x + a * y) +
                  e_mb / rb * (64.0 * g * l2 + 2.0 * (b - 2.0 * g) * w) +
                  e_pb / rb * (-64.0 * g * l2 + 2.0 * (b + 2.0 * g) * w));
  out.j = checked_real(j, "j");

  const double s2 = std::sqrt(2.0);
  const cplx arg_a = t * ra / (2.0 * s2);
  const cplx arg_b = t * rb / (2.0 * s2);
  const cplx p1 = g2 * (-g2 + 64.0 * l2 + xi) - 16.0 * z4 + 4.0 * z2 * (xi - 2.0 * g2);
  const cplx p2 = g2 * (g2 - 64.0 * l2 + xi) + 16.0 * z4 + 4.0 * z2 * (2.0 * g2 + xi);
  const cplx p3 = g2 * (g2 - 64.0 * l2 - xi) + 16.0 * z4 - 4.0 * z2 * (xi - 2.0 * g2);
  const cplx bracket = s2 * (ra * std::sinh(arg_a) * p1 - rb * std::sinh(arg_b) * p2) -
                       2.0 * g * std::cosh(arg_a) * p3 - 2.0 * g * std::cosh(arg_b) * p2;
  const cplx l = occupation + occupation / (4.0 * g * xi * xi) * std::exp(-g * t / 2.0) * bracket;
  out.l = checked_real(l, "l");
  return out;
}

double integrated_f_tilde(const SystemParams& params, double tau) {
  if (!(tau >= 0.0)) throw InvalidModel("response time must be non-negative");
  if (params.lambda == 0.0) return 0.0;
  const SqueezedSpectrum sp = squeezed_spectrum(params);
  const double g = sp.gamma;
  // f~ = (4 l^2 / xi) [e^{k(+b)} + e^{k(-b)} - e^{k(+a)} - e^{k(-a)}], k(+-x) = -g/2 +- x/4.
  const std::array<cplx, 4> rates = {-g / 2.0 + sp.b / 4.0, -g / 2.0 - sp.b / 4.0,
                                     -g / 2.0 + sp.a / 4.0, -g / 2.0 - sp.a / 4.0};
  const std::array<double, 4> signs = {1.0, 1.0, -1.0, -1.0};
  if (std::isinf(tau)) {
    for (const cplx& k : rates) {
      if (!(k.real() < 0.0)) {
        throw NoSteadyState("squeezed-bath response has no long-time limit (undamped mode)");
      }
    }
  }
  cplx total = 0.0;
  for (int k = 0; k < 4; ++k) total += signs[k] * exp_integral(rates[k], tau);
  total *= 4.0 * sp.lambda * sp.lambda / sp.xi;
  return checked_real(total, "integral of f");
}

}  // namespace nessprobe
