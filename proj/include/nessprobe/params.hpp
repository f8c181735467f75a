#pragma once

#include <complex>

namespace nessprobe {

// Units: omega1 = hbar = k_B = 1. Every frequency and rate is a ratio to omega1.

/// Two coupled oscillators, H = w1 a1'a1 + w2 a2'a2 + lambda (a1 a2' + a2 a1'),
/// with w2 = w1 + delta and a common damping rate gamma.
struct SystemParams {
  double omega1 = 1.0;
  double delta = 0.0;
  double lambda = 0.0;
  double gamma = 0.0;

  double omega2() const noexcept { return omega1 + delta; }
  /// z^2 = delta^2 + 4 lambda^2
  double z_squared() const noexcept { return delta * delta + 4.0 * lambda * lambda; }
  double z() const;

  /// Throws InvalidModel unless gamma >= 0, omega1 > 0 and everything is finite.
  void validate() const;
};

/// Mean occupations of the two local thermal baths.
struct ThermalBathPair {
  double n1 = 0.0;
  double n2 = 0.0;

  /// Bose-Einstein occupations n_j = 1/(exp(beta_j omega_j) - 1) with
  /// omega2 = omega1 + delta. Inputs are beta1*omega1 and beta2*omega1.
  static ThermalBathPair from_inverse_temperatures(double beta1_omega1, double beta2_omega1,
                                                   const SystemParams& params);

  /// beta_j * omega_j recovered from n_j; +inf for an empty bath.
  double beta_omega1() const;
  double beta_omega2() const;

  void validate() const;
};

/// Squeezed thermal bath acting on oscillator 1 only.
struct SqueezedBath {
  double n = 0.0;      // thermal occupation
  double r = 0.0;      // squeezing magnitude
  double theta = 0.0;  // squeezing phase

  static SqueezedBath from_inverse_temperature(double beta_omega1, double r, double theta);

  /// N = n (cosh^2 r + sinh^2 r) + sinh^2 r
  double occupation() const;
  /// M = -cosh r sinh r e^{i theta} (2n + 1)
  std::complex<double> squeeze() const;

  void validate() const;
};

/// n = 1/(exp(x) - 1) for x = beta*omega > 0.
double bose_einstein(double beta_omega);

}  // namespace nessprobe
