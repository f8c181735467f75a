#include "doctest.h"

#include <cmath>
#include <limits>
#include <numbers>

#include "nessprobe/errors.hpp"
#include "nessprobe/heisenberg.hpp"
#include "support/oracles.hpp"

using namespace nessprobe;
using namespace std::complex_literals;
using doctest::Approx;

namespace {

const SystemParams kFig = oracle::system(10.0, 5.0, 0.5);
constexpr double kInfinity = std::numeric_limits<double>::infinity();

double max_abs(const CMat10& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_SUITE("heisenberg generator") {
  TEST_CASE("thermal generator matches the Fock-space adjoint") {
    const oracle::Fock fock(10);
    const SystemParams p = oracle::system(0.7, 0.45, 0.3);
    const ThermalBathPair b{2.0, 5.0};
    const auto gen = build_observable_generator(p, b);
    CHECK(oracle::generator_mismatch(fock, oracle::hamiltonian(fock, p),
                                     oracle::thermal_channels(p, b), gen) < 1e-12);
  }

  TEST_CASE("squeezed generator matches the Fock-space adjoint") {
    const oracle::Fock fock(10);
    const SystemParams p = oracle::system(1.3, 0.6, 0.4);
    const SqueezedBath b{1.5, 0.6, 0.9};
    const auto gen = build_squeezed_observable_generator(p, b);
    CHECK(oracle::generator_mismatch(fock, oracle::hamiltonian(fock, p),
                                     oracle::squeezed_channels(p, b), gen) < 1e-12);
  }

  TEST_CASE("explicit thermal generator equals the assembled one") {
    oracle::Draw draw(0x5eed0101);
    for (int k = 0; k < 20; ++k) {
      const SystemParams p =
          oracle::system(draw.uniform(-5, 5), draw.uniform(0, 5), draw.uniform(0, 2));
      const ThermalBathPair b{draw.uniform(0, 10), draw.uniform(0, 10)};
      const auto explicit_gen = build_observable_generator(p, b);
      const auto assembled = assemble_observable_generator(thermal_lindbladian(p, b));
      CHECK(max_abs(explicit_gen.m - assembled.m) < 1e-14);
      CHECK((explicit_gen.w - assembled.w).cwiseAbs().maxCoeff() < 1e-14);
    }
  }

  TEST_CASE("first row couples a1'a1 to a1 a2' and a1' a2") {
    const auto gen = build_observable_generator(kFig, {1.0, 2.0});
    CHECK(gen.m(0, 0) == cplx(-0.5));
    CHECK(gen.m(0, 7) == 5.0i);
    CHECK(gen.m(0, 8) == -5.0i);
    CHECK(gen.w(0) == cplx(0.5));
    CHECK(gen.w(3) == cplx(1.0));
  }

  TEST_CASE("decoupled generator is block diagonal") {
    const auto gen = build_observable_generator(oracle::system(2.0, 0.0, 0.3), {1.0, 2.0});
    CHECK(gen.m.row(0).cwiseAbs().sum() == Approx(0.3));
    for (int i : {0, 1, 2})
      for (int j : {3, 4, 5, 6, 7, 8, 9}) CHECK(gen.m(i, j) == cplx{});
  }

  TEST_CASE("uniform damping: spectral abscissa is -gamma") {
    const auto gen = build_observable_generator(kFig, {1.0, 2.0});
    const Eigen::ComplexEigenSolver<CMat10> es(gen.m, false);
    CHECK(es.eigenvalues().real().maxCoeff() == Approx(-0.5).epsilon(1e-12));
  }

  TEST_CASE("squeezing enters only the source") {
    const SystemParams p = oracle::system(1.0, 0.7, 0.4);
    const auto plain = build_squeezed_observable_generator(p, {2.0, 0.0, 0.0});
    const auto squeezed = build_squeezed_observable_generator(p, {2.0, 0.8, 1.1});
    CHECK(max_abs(plain.m - squeezed.m) < 1e-15);
    const SqueezedBath b{2.0, 0.8, 1.1};
    CHECK(squeezed.w(0).real() == Approx(0.4 * b.occupation()));
    CHECK(std::abs(squeezed.w(1) - 0.4 * b.squeeze()) < 1e-14);
    CHECK(std::abs(squeezed.w(2) - 0.4 * std::conj(b.squeeze())) < 1e-14);
    for (int k = 3; k < 10; ++k) CHECK(squeezed.w(k) == cplx{});
  }
}

TEST_SUITE("heisenberg propagation") {
  TEST_CASE("t = 0 is the identity") {
    const auto gen = build_observable_generator(kFig, {1.0, 2.0});
    const auto e = evolve_observables(gen, unit_observable(Monomial::n1), 0.0);
    CHECK(e.coefficients == unit_observable(Monomial::n1));
    CHECK(e.constant == cplx{});
    const auto c = coeffs_thermal(kFig, {1.0, 2.0}, 0.0);
    CHECK(c.f == Approx(1.0));
    CHECK(c.j == Approx(0.0));
    CHECK(std::abs(c.p) < 1e-15);
    CHECK(c.s == Approx(0.0));
  }

  TEST_CASE("decoupled oscillator relaxes exponentially") {
    const SystemParams p = oracle::system(3.0, 0.0, 0.6);
    const ThermalBathPair b{4.0, 1.0};
    const auto gen = build_observable_generator(p, b);
    for (double t : {0.3, 2.0, 9.0}) {
      const auto e = evolve_observables(gen, unit_observable(Monomial::n1), t);
      CHECK(e.coefficients(0).real() == Approx(std::exp(-0.6 * t)).epsilon(1e-12));
      CHECK(e.constant.real() == Approx(4.0 * (1.0 - std::exp(-0.6 * t))).epsilon(1e-12));
      const auto c = coeffs_thermal(p, b, t);
      CHECK(c.f == Approx(std::exp(-0.6 * t)).epsilon(1e-14));
      CHECK(c.s == Approx(4.0 * (1.0 - std::exp(-0.6 * t))).epsilon(1e-13));
    }
    const auto z0 = coeffs_thermal(oracle::system(0.0, 0.0, 0.6), b, 1.0);
    CHECK(z0.f == Approx(std::exp(-0.6)));
    CHECK(z0.j == 0.0);
  }

  TEST_CASE("closed forms equal the propagator at the figure parameters") {
    const ThermalBathPair b = ThermalBathPair::from_inverse_temperatures(0.1, 0.001, kFig);
    const auto gen = build_observable_generator(kFig, b);
    const auto e = evolve_observables(gen, unit_observable(Monomial::n1), 1.0);
    const auto c = coeffs_thermal(kFig, b, 1.0);
    CHECK(std::abs(e.coefficients(0) - c.f) < 1e-8);
    CHECK(std::abs(e.coefficients(3) - c.j) < 1e-8);
    CHECK(std::abs(e.coefficients(7) - c.p) < 1e-8);
    CHECK(std::abs(e.coefficients(8) - c.q) < 1e-8);
    CHECK(std::abs(e.constant - c.s) < 1e-8);
  }

  TEST_CASE("integrated response reaches -M^{-1} at infinite time") {
    const auto gen = build_observable_generator(kFig, {1.0, 2.0});
    const CVec10 src = unit_observable(Monomial::n1);
    const cplx finite = integrate_response(gen, unit_observable(Monomial::n1), src, 120.0);
    const cplx limit = integrate_response(gen, unit_observable(Monomial::n1), src, kInfinity);
    CHECK(std::abs(finite - limit) < 1e-12);
    const auto undamped = build_observable_generator(oracle::system(1, 1, 0), {1.0, 2.0});
    CHECK_THROWS_AS(integrate_response(undamped, src, src, kInfinity), NoSteadyState);
  }
}

TEST_SUITE("heisenberg properties") {
  TEST_CASE("propagator and thermal closed forms agree over random draws") {
    oracle::Draw draw(0x5eed0102);
    for (int k = 0; k < 100; ++k) {
      const SystemParams p =
          oracle::system(draw.uniform(0, 20), draw.uniform(0, 20), draw.open_low(0, 2));
      const ThermalBathPair b{draw.uniform(0, 100), draw.uniform(0, 100)};
      const auto gen = build_observable_generator(p, b);
      for (int i = 0; i < 20; ++i) {
        const double t = draw.uniform(0, 20);
        const auto e = evolve_observables(gen, unit_observable(Monomial::n1), t);
        const auto c = coeffs_thermal(p, b, t);
        CAPTURE(t);
        CHECK(std::abs(e.coefficients(0) - c.f) < 1e-8);
        CHECK(std::abs(e.coefficients(3) - c.j) < 1e-8);
        CHECK(std::abs(e.coefficients(7) - c.p) < 1e-8);
        CHECK(std::abs(e.constant - c.s) < 1e-8);
        CHECK(c.q == std::conj(c.p));
        CHECK(c.f + c.j == Approx(std::exp(-p.gamma * t)).epsilon(1e-10));
        CHECK(c.s >= 0.0);
      }
    }
  }

  TEST_CASE("undamped f + j = 1 and f is periodic with period 2 pi / z") {
    oracle::Draw draw(0x5eed0103);
    for (int k = 0; k < 20; ++k) {
      const SystemParams p = oracle::system(draw.uniform(0, 5), draw.open_low(0, 5), 0.0);
      const double period = 2.0 * std::numbers::pi / p.z();
      for (int i = 0; i < 10; ++i) {
        const double t = draw.uniform(0, period);
        const auto c0 = coeffs_thermal(p, {1.0, 2.0}, t);
        CHECK(c0.f + c0.j == Approx(1.0).epsilon(1e-12));
        CHECK(coeffs_thermal(p, {1.0, 2.0}, t + period).f == Approx(c0.f).epsilon(1e-10));
        CHECK(coeffs_thermal(p, {1.0, 2.0}, t + 2 * period).f == Approx(c0.f).epsilon(1e-10));
      }
    }
  }

  TEST_CASE("squeezed closed forms agree with the propagator") {
    oracle::Draw draw(0x5eed0104);
    int evaluated = 0;
    for (int k = 0; k < 100; ++k) {
      const SystemParams p =
          oracle::system(draw.uniform(0, 20), draw.uniform(0, 20), draw.open_low(0, 2));
      const SqueezedBath b{draw.uniform(0, 20), draw.uniform(0, 1.5), draw.uniform(0, 6.28)};
      const auto gen = build_squeezed_observable_generator(p, b);
      for (int i = 0; i < 20; ++i) {
        const double t = draw.uniform(0, 20);
        const auto e = evolve_observables(gen, unit_observable(Monomial::n2), t);
        const auto c = coeffs_squeezed(p, b.occupation(), t);
        CAPTURE(t);
        CHECK(std::abs(e.coefficients(0) - c.f) < 1e-8);
        CHECK(std::abs(e.coefficients(8) - c.g) < 1e-8);
        CHECK(std::abs(e.coefficients(7) - std::conj(c.g)) < 1e-8);
        CHECK(std::abs(e.coefficients(3) - c.j) < 1e-8);
        CHECK(std::abs(e.constant - c.l) < 1e-8 * std::max(1.0, c.l));
        ++evaluated;
      }
    }
    CHECK(evaluated == 2000);
  }

  TEST_CASE("squeezed coefficients at t = 0 and without coupling") {
    const auto c0 = coeffs_squeezed(kFig, 3.0, 0.0);
    CHECK(c0.f == Approx(0.0).epsilon(1e-14));
    CHECK(std::abs(c0.g) < 1e-14);
    CHECK(c0.j == Approx(1.0).epsilon(1e-14));
    CHECK(c0.l == Approx(0.0).epsilon(1e-12));
    for (double t : {0.5, 3.0, 30.0}) {
      const auto c = coeffs_squeezed(oracle::system(2.0, 0.0, 0.5), 3.0, t);
      CHECK(c.f == Approx(0.0).epsilon(1e-14));
      CHECK(c.l == Approx(0.0).epsilon(1e-12));
    }
  }

  TEST_CASE("squeezed integral of f~ matches the numeric integral") {
    const SystemParams p = oracle::system(1.3, 0.6, 0.4);
    const auto gen = build_squeezed_observable_generator(p, {1.0, 0.5, 0.0});
    for (double tau : {0.7, 5.0, 40.0}) {
      const cplx numeric = integrate_response(gen, unit_observable(Monomial::n2),
                                              unit_observable(Monomial::n1), tau);
      CHECK(integrated_f_tilde(p, tau) == Approx(numeric.real()).epsilon(1e-10));
    }
    CHECK(integrated_f_tilde(p, kInfinity) == Approx(1.0 / p.gamma).epsilon(1e-10));
  }

  TEST_CASE("repeated roots are reported") {
    // With delta = 0, xi = (4 lambda - gamma)(4 lambda + gamma).
    const SystemParams p = oracle::system(0.0, 0.25, 1.0);
    CHECK_THROWS_AS(coeffs_squeezed(p, 1.0, 1.0), DegenerateParameters);
    CHECK_THROWS_AS(coeffs_squeezed(oracle::system(1, 1, 0), 1.0, 1.0), DegenerateParameters);
  }
}
