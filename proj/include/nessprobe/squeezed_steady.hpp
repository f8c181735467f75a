#pragma once

#include <utility>

#include "nessprobe/gaussian_dynamics.hpp"
#include "nessprobe/params.hpp"
#include "nessprobe/quadratic_lindblad.hpp"

namespace nessprobe {

/// (N, M) for a squeezed thermal bath. Checks |M|^2 <= N(N+1).
std::pair<double, cplx> bath_coefficients(double n, double r, double theta);

/// Stationary ladder-basis CM, ordered (a1, a1', a2, a2'):
///
///   [ N+1/2  D      0      E*   ]
///   [ D*     N+1/2  E      0    ]
///   [ 0      E*     N+1/2  F    ]
///   [ E      0      F*     N+1/2]
struct SqueezedSteadyState {
  LadderCovariance sigma0;
  cplx d;
  cplx e;
  cplx f;
};

/// Closed-form steady state. Requires gamma > 0 (NoSteadyState otherwise);
/// a vanishing denominator raises DegenerateParameters.
SqueezedSteadyState steady_state_squeezed(const SystemParams& params, const SqueezedBath& bath);

/// max_k |(M v + w)_k| for the moment flow assembled from the master equation,
/// evaluated at the moments of `state`. Zero iff `state` is stationary.
double stationarity_residual(const SystemParams& params, const SqueezedBath& bath,
                             const LadderCovariance& state);

}  // namespace nessprobe
