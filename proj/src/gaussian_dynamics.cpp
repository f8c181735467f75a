#include "nessprobe/gaussian_dynamics.hpp"

#include <cmath>
#include <string>

#include "nessprobe/errors.hpp"

namespace nessprobe {

namespace {

constexpr double kHurwitzMargin = 1e-12;
constexpr double kImaginaryTolerance = 1e-12;
constexpr double kPhysicalityTolerance = 1e-10;

Eigen::Matrix2d block_j() {
  Eigen::Matrix2d j;
  j << 0.0, 1.0, -1.0, 0.0;
  return j;
}

}  // namespace

Mat4 symplectic_form() {
  Mat4 omega = Mat4::Zero();
  omega.block<2, 2>(0, 0) = block_j();
  omega.block<2, 2>(2, 2) = block_j();
  return omega;
}

CMat4 ladder_to_quadrature() {
  using namespace std::complex_literals;
  const double s = 1.0 / std::sqrt(2.0);
  CMat4 lam = CMat4::Zero();
  for (int k = 0; k < 2; ++k) {
    lam(2 * k, 2 * k) = s;
    lam(2 * k, 2 * k + 1) = s;
    lam(2 * k + 1, 2 * k) = -1i * s;
    lam(2 * k + 1, 2 * k + 1) = 1i * s;
  }
  return lam;
}

QuadraticGenerators build_generators(const SystemParams& params, const ThermalBathPair& baths) {
  using namespace std::complex_literals;
  params.validate();
  baths.validate();

  QuadraticGenerators gen;
  const double w1 = params.omega1;
  const double w2 = params.omega2();
  const double lam = params.lambda;
  gen.hamiltonian << w1, 0.0, lam, 0.0,
                     0.0, w1, 0.0, lam,
                     lam, 0.0, w2, 0.0,
                     0.0, lam, 0.0, w2;

  // L1 = sqrt(g(n1+1)) a1, L2 = sqrt(g n1) a1', L3/L4 likewise on mode 2,
  // with a = (x + i p)/sqrt(2).
  const double g = params.gamma;
  const double loss1 = std::sqrt(g * (baths.n1 + 1.0) / 2.0);
  const double gain1 = std::sqrt(g * baths.n1 / 2.0);
  const double loss2 = std::sqrt(g * (baths.n2 + 1.0) / 2.0);
  const double gain2 = std::sqrt(g * baths.n2 / 2.0);
  gen.jump_vectors[0] = CVec4(loss1, 1i * loss1, 0.0, 0.0);
  gen.jump_vectors[1] = CVec4(gain1, -1i * gain1, 0.0, 0.0);
  gen.jump_vectors[2] = CVec4(0.0, 0.0, loss2, 1i * loss2);
  gen.jump_vectors[3] = CVec4(0.0, 0.0, gain2, -1i * gain2);

  CMat4 cc = CMat4::Zero();
  for (const auto& c : gen.jump_vectors) cc += c * c.adjoint();

  // The Omega = i J convention folds into alpha = J (G - Im CC') and
  // D = J Re(CC') J^T.
  gen.omega = symplectic_form();
  gen.drift = gen.omega * (gen.hamiltonian - cc.imag());
  gen.diffusion = gen.omega * cc.real() * gen.omega.transpose();
  return gen;
}

double drift_spectral_abscissa(const Mat4& drift) {
  const Eigen::EigenSolver<Mat4> solver(drift, false);
  return solver.eigenvalues().real().maxCoeff();
}

QuadratureCovariance solve_lyapunov(const QuadraticGenerators& gen) {
  const double abscissa = drift_spectral_abscissa(gen.drift);
  if (!(abscissa < -kHurwitzMargin)) {
    throw NoSteadyState("drift matrix is not Hurwitz (max Re eigenvalue " +
                        std::to_string(abscissa) + "); no unique steady state");
  }

  // (I (x) alpha + alpha (x) I) vec(sigma) = -vec(D), column-major vec.
  // Solved in extended precision: the operator's condition number grows like
  // |alpha| / gamma and the result is checked against 1e-10 absolute.
  using Mat16l = Eigen::Matrix<long double, 16, 16>;
  using Vec16l = Eigen::Matrix<long double, 16, 1>;
  const Eigen::Matrix<long double, 4, 4> alpha = gen.drift.cast<long double>();
  Mat16l op = Mat16l::Zero();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      for (int k = 0; k < 4; ++k) {
        op(4 * j + i, 4 * j + k) += alpha(i, k);  // alpha sigma
        op(4 * j + i, 4 * k + i) += alpha(j, k);  // sigma alpha^T
      }
    }
  }
  Vec16l rhs;
  for (int j = 0; j < 4; ++j) {
    for (int i = 0; i < 4; ++i) rhs(4 * j + i) = -static_cast<long double>(gen.diffusion(i, j));
  }
  const Eigen::FullPivLU<Mat16l> lu(op);
  Vec16l x = lu.solve(rhs);
  x += lu.solve(rhs - op * x);

  QuadratureCovariance cm;
  for (int j = 0; j < 4; ++j) {
    for (int i = 0; i < 4; ++i) cm.sigma(i, j) = static_cast<double>(x(4 * j + i));
  }
  cm.sigma = 0.5 * (cm.sigma + cm.sigma.transpose()).eval();
  return cm;
}

double lyapunov_residual(const QuadraticGenerators& gen, const QuadratureCovariance& cm) {
  const Mat4 res = gen.drift * cm.sigma + cm.sigma * gen.drift.transpose() + gen.diffusion;
  return res.cwiseAbs().maxCoeff();
}

QuadratureCovariance closed_form_steady_state(const SystemParams& params,
                                              const ThermalBathPair& baths) {
  params.validate();
  baths.validate();
  const double g = params.gamma;
  const double d = params.delta;
  const double l = params.lambda;
  const double base = g * g + d * d;
  if (base == 0.0) {
    if (l != 0.0) {
      throw DegenerateParameters(
          "closed-form steady state is singular for gamma = delta = 0 with lambda != 0");
    }
    throw NoSteadyState("gamma = delta = lambda = 0: the closed form is undefined");
  }
  const double zeta_ss = base / (4.0 * l * l + base);
  const double b = 2.0 * l * l * (baths.n1 + baths.n2 + 1.0) / base;
  const double c = l * (baths.n1 - baths.n2) / base;
  const double xi1 = b + baths.n1 + 0.5;
  const double xi2 = b + baths.n2 + 0.5;

  QuadratureCovariance cm;
  cm.sigma << xi1, 0.0, -d * c, -g * c,
              0.0, xi1, g * c, -d * c,
              -d * c, g * c, xi2, 0.0,
              -g * c, -d * c, 0.0, xi2;
  cm.sigma *= zeta_ss;
  return cm;
}

QuadratureCovariance cm_transform(const LadderCovariance& ladder) {
  const CMat4 lam = ladder_to_quadrature();
  const CMat4 sigma = lam * ladder.sigma * lam.adjoint();
  const double scale = std::max(1.0, sigma.cwiseAbs().maxCoeff());
  const double residue = sigma.imag().cwiseAbs().maxCoeff();
  if (residue > kImaginaryTolerance * scale) {
    throw InconsistentInput("ladder covariance does not map to a real quadrature covariance "
                            "(imaginary residue " + std::to_string(residue) + ")");
  }
  QuadratureCovariance out;
  out.sigma = 0.5 * (sigma.real() + sigma.real().transpose());
  return out;
}

LadderCovariance cm_transform(const QuadratureCovariance& quadrature) {
  const CMat4 lam = ladder_to_quadrature();
  return {lam.adjoint() * quadrature.sigma.cast<std::complex<double>>() * lam};
}

PhysicalityReport check_physicality(const QuadratureCovariance& cm) {
  using namespace std::complex_literals;
  const CMat4 h = cm.sigma.cast<std::complex<double>>() +
                  0.5i * symplectic_form().cast<std::complex<double>>();
  const Eigen::SelfAdjointEigenSolver<CMat4> solver(h, Eigen::EigenvaluesOnly);
  PhysicalityReport report;
  report.min_eigenvalue = solver.eigenvalues().minCoeff();
  report.physical = report.min_eigenvalue >= -kPhysicalityTolerance;
  return report;
}

double mean_occupation(const QuadratureCovariance& cm, int oscillator) {
  if (oscillator != 1 && oscillator != 2) {
    throw InvalidModel("oscillator index must be 1 or 2");
  }
  const int k = 2 * (oscillator - 1);
  return 0.5 * (cm.sigma(k, k) + cm.sigma(k + 1, k + 1) - 1.0);
}

}  // namespace nessprobe
