#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "nessprobe/gaussian_dynamics.hpp"

namespace nessprobe {

using cplx = std::complex<double>;
using CMat10 = Eigen::Matrix<cplx, 10, 10>;
using CVec10 = Eigen::Matrix<cplx, 10, 1>;

/// Ordered monomial basis of the second moments.
enum class Monomial : int {
  n1 = 0,       // a1' a1
  a1_a1 = 1,    // a1^2
  a1d_a1d = 2,  // a1'^2
  n2 = 3,       // a2' a2
  a2_a2 = 4,    // a2^2
  a2d_a2d = 5,  // a2'^2
  a1_a2 = 6,    // a1 a2
  a1_a2d = 7,   // a1 a2'
  a1d_a2 = 8,   // a1' a2
  a1d_a2d = 9,  // a1' a2'
};

constexpr int index(Monomial m) noexcept { return static_cast<int>(m); }

/// Unit coefficient vector selecting one monomial.
CVec10 unit_observable(Monomial m);

/// Heisenberg-picture flow of the monomial vector: dv/dt = M v + w, where w
/// collects the identity components generated by the dual Lindbladian.
struct ObservableGenerator {
  CMat10 m;
  CVec10 w;
};

enum class LadderOp : int { a1 = 0, a2 = 1, a1d = 2, a2d = 3 };

/// One dual dissipator term, A -> rate (P A Q - {P Q, A}/2). A Schrodinger
/// term rate (B rho C - {C B, rho}/2) has P = C and Q = B.
struct DissipatorTerm {
  cplx rate;
  LadderOp left;   // P
  LadderOp right;  // Q
};

/// Quadratic two-mode Lindbladian: H = sum_ij h_ij a_i' a_j plus dissipator terms.
struct QuadraticLindbladian {
  Eigen::Matrix2d hamiltonian = Eigen::Matrix2d::Zero();
  std::vector<DissipatorTerm> terms;
};

/// Builds (M, w) term by term from the Lindbladian, using
///   L*(XY) = L*(X) Y + X L*(Y) + sum_k rate_k [P_k, X][Y, Q_k].
ObservableGenerator assemble_observable_generator(const QuadraticLindbladian& lindbladian);

/// Local thermal baths on both oscillators plus the beam-splitter Hamiltonian.
QuadraticLindbladian thermal_lindbladian(const SystemParams& params, const ThermalBathPair& baths);

/// Squeezed thermal bath on oscillator 1 only (oscillator 2 undamped):
///   g(N+1) D[a1] + g N D[a1'] - g M (a1' rho a1' - {a1'^2, rho}/2) + h.c.
QuadraticLindbladian squeezed_lindbladian(const SystemParams& params, const SqueezedBath& bath);

/// Expectation values <v_k> of the ten monomials for a zero-mean state.
CVec10 moments_from_ladder(const LadderCovariance& cm);
CVec10 moments_from_quadrature(const QuadratureCovariance& cm);

}  // namespace nessprobe
