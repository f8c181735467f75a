#pragma once

#include "nessprobe/params.hpp"
#include "nessprobe/quadratic_lindblad.hpp"

namespace nessprobe {

/// A quadratic observable c . v + constant in the Heisenberg picture.
struct EvolvedObservable {
  CVec10 coefficients;
  cplx constant;
};

/// (a1'a1)(t) = f a1'a1 + j a2'a2 + p a1 a2' + q a1' a2 + s.
struct ThermalCoefficients {
  double f = 1.0;
  double j = 0.0;
  cplx p;
  cplx q;
  double s = 0.0;
};

/// (a2'a2)(t) = f a1'a1 + [g a1'a2 + h.c.] + j a2'a2 + l  (squeezed bath on mode 1).
struct SqueezedCoefficients {
  double f = 0.0;
  cplx g;
  double j = 1.0;
  double l = 0.0;
};

/// Explicit 10x10 generator of the adjoint two-bath master equation and its
/// source w = (g n1, 0, 0, g n2, 0, ..., 0).
ObservableGenerator build_observable_generator(const SystemParams& params,
                                               const ThermalBathPair& baths);

/// Same flow for the single squeezed bath, assembled from the dissipator.
ObservableGenerator build_squeezed_observable_generator(const SystemParams& params,
                                                        const SqueezedBath& bath);

/// Propagates the observable c . v: returns e^{tM^T} c and c . int_0^t e^{sM} w ds.
/// The source integral goes through the augmented exponential
/// exp(t [[M, w], [0, 0]]), so singular M (gamma = 0) needs no special case.
EvolvedObservable evolve_observables(const ObservableGenerator& gen, const CVec10& observable,
                                     double t);

/// int_0^tau c . e^{uM} source du. tau = +inf needs a Hurwitz M.
cplx integrate_response(const ObservableGenerator& gen, const CVec10& observable,
                        const CVec10& source, double tau);

/// Closed forms for the two-bath model. z = 0 uses the decoupled limit.
ThermalCoefficients coeffs_thermal(const SystemParams& params, const ThermalBathPair& baths,
                                   double t);

/// Closed forms for the squeezed-bath model, evaluated in complex arithmetic.
/// `occupation` is the bath's effective N; it only enters l.
/// Throws DegenerateParameters when xi or zeta^2 +- xi (nearly) vanish.
SqueezedCoefficients coeffs_squeezed(const SystemParams& params, double occupation, double t);

/// int_0^tau f~(u) du in closed form (tau = +inf allowed).
double integrated_f_tilde(const SystemParams& params, double tau);

}  // namespace nessprobe
