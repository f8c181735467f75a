#include "nessprobe/params.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "nessprobe/errors.hpp"

namespace nessprobe {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidModel(what);
}

}  // namespace

double SystemParams::z() const { return std::sqrt(z_squared()); }

void SystemParams::validate() const {
  require(std::isfinite(omega1) && omega1 > 0.0, "omega1 must be positive and finite");
  require(std::isfinite(delta), "delta must be finite");
  require(std::isfinite(lambda), "lambda must be finite");
  require(std::isfinite(gamma), "gamma must be finite");
  require(gamma >= 0.0, "gamma must be non-negative, got " + std::to_string(gamma));
}

double bose_einstein(double beta_omega) {
  if (!(beta_omega > 0.0)) {
    throw InvalidModel("beta*omega must be positive, got " + std::to_string(beta_omega));
  }
  return 1.0 / std::expm1(beta_omega);
}

ThermalBathPair ThermalBathPair::from_inverse_temperatures(double beta1_omega1,
                                                           double beta2_omega1,
                                                           const SystemParams& params) {
  params.validate();
  const double beta2_omega2 = beta2_omega1 * params.omega2() / params.omega1;
  if (!(params.omega2() > 0.0)) {
    throw InvalidModel("omega2 = omega1 + delta must be positive to define a bath temperature");
  }
  ThermalBathPair baths{bose_einstein(beta1_omega1), bose_einstein(beta2_omega2)};
  return baths;
}

double ThermalBathPair::beta_omega1() const {
  return n1 > 0.0 ? std::log1p(1.0 / n1) : std::numeric_limits<double>::infinity();
}

double ThermalBathPair::beta_omega2() const {
  return n2 > 0.0 ? std::log1p(1.0 / n2) : std::numeric_limits<double>::infinity();
}

void ThermalBathPair::validate() const {
  require(std::isfinite(n1) && n1 >= 0.0, "n1 must be a non-negative occupation");
  require(std::isfinite(n2) && n2 >= 0.0, "n2 must be a non-negative occupation");
}

SqueezedBath SqueezedBath::from_inverse_temperature(double beta_omega1, double r, double theta) {
  SqueezedBath bath{bose_einstein(beta_omega1), r, theta};
  bath.validate();
  return bath;
}

double SqueezedBath::occupation() const {
  const double c = std::cosh(r);
  const double s = std::sinh(r);
  return n * (c * c + s * s) + s * s;
}

std::complex<double> SqueezedBath::squeeze() const {
  return -std::cosh(r) * std::sinh(r) * std::polar(1.0, theta) * (2.0 * n + 1.0);
}

void SqueezedBath::validate() const {
  require(std::isfinite(n) && n >= 0.0, "bath occupation n must be non-negative");
  require(std::isfinite(r) && r >= 0.0, "squeezing magnitude r must be non-negative");
  require(std::isfinite(theta), "squeezing phase must be finite");
}

}  // namespace nessprobe
