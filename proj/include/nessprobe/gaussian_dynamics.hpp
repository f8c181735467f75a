#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

#include "nessprobe/params.hpp"

namespace nessprobe {

using Mat4 = Eigen::Matrix4d;
using CMat4 = Eigen::Matrix4cd;
using CVec4 = Eigen::Vector4cd;

/// Drift/diffusion description of a quadratic Lindbladian in the quadrature
/// basis Y = (x1, p1, x2, p2), with H = Y G Y^T / 2 and jumps L_k = c_k . Y.
struct QuadraticGenerators {
  Mat4 hamiltonian;                 // G
  std::array<CVec4, 4> jump_vectors;
  Mat4 drift;                       // alpha
  Mat4 diffusion;                   // D
  Mat4 omega;                       // J (+) J, J = [[0, 1], [-1, 0]]
};

/// Covariance matrix sigma_ij = <{Y_i, Y_j}>/2 in the quadrature basis.
struct QuadratureCovariance {
  Mat4 sigma;
};

/// Covariance matrix Sigma_ij = <{X_i, X_j'}>/2 in the ladder basis
/// X = (a1, a1', a2, a2').
struct LadderCovariance {
  CMat4 sigma;
};

struct PhysicalityReport {
  double min_eigenvalue = 0.0;
  bool physical = false;
};

/// J (+) J.
Mat4 symplectic_form();

/// Lambda (+) Lambda with Lambda_i = [[1, 1], [-i, i]] / sqrt(2), so Y = Lambda X.
CMat4 ladder_to_quadrature();

QuadraticGenerators build_generators(const SystemParams& params, const ThermalBathPair& baths);

/// Largest real part among the drift eigenvalues.
double drift_spectral_abscissa(const Mat4& drift);

/// Solves alpha sigma + sigma alpha^T + D = 0 through the 16x16 Kronecker
/// system. Throws NoSteadyState unless alpha is Hurwitz (abscissa < -1e-12).
QuadratureCovariance solve_lyapunov(const QuadraticGenerators& gen);

/// max |alpha sigma + sigma alpha^T + D|
double lyapunov_residual(const QuadraticGenerators& gen, const QuadratureCovariance& cm);

/// Closed-form NESS of the two-bath model:
///   sigma0 = zeta [[Xi1, Theta], [Theta^T, Xi2]],
///   zeta = (g^2 + d^2) / (4 l^2 + g^2 + d^2), Xi_i = (B + n_i + 1/2) I,
///   Theta = C [[-d, -g], [g, -d]],
///   B = 2 l^2 (n1 + n2 + 1) / (g^2 + d^2), C = l (n1 - n2) / (g^2 + d^2).
/// Throws DegenerateParameters when gamma = delta = 0 and lambda != 0.
QuadratureCovariance closed_form_steady_state(const SystemParams& params,
                                              const ThermalBathPair& baths);

/// sigma = Lambda Sigma Lambda^dagger. Throws InconsistentInput if the result
/// carries an imaginary part above 1e-12 (relative to the matrix scale).
QuadratureCovariance cm_transform(const LadderCovariance& ladder);

/// Sigma = Lambda^dagger sigma Lambda.
LadderCovariance cm_transform(const QuadratureCovariance& quadrature);

/// Smallest eigenvalue of sigma + (i/2) J; physical iff >= -1e-10.
PhysicalityReport check_physicality(const QuadratureCovariance& cm);

/// <a_j' a_j> = (sigma_{2j,2j} + sigma_{2j+1,2j+1} - 1)/2 for oscillator j in {1, 2}.
double mean_occupation(const QuadratureCovariance& cm, int oscillator);

}  // namespace nessprobe
