// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Every tolerance and budget is pinned below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "nessprobe/errors.hpp"
#include "nessprobe/heisenberg.hpp"
#include "nessprobe/response.hpp"
#include "nessprobe/scenario.hpp"
#include "nessprobe/squeezed_steady.hpp"
#include "support/oracles.hpp"

using namespace nessprobe;

namespace {

// ---- pinned tolerances ----------------------------------------------------
constexpr double kTolSteady = 1e-10;
constexpr double kBudgetSteady = 5.0;  // seconds
constexpr int kSteadyDraws = 200;
constexpr double kTolHeisenberg = 1e-8;
constexpr double kBudgetHeisenberg = 30.0;
constexpr int kHeisenbergDraws = 100;
constexpr int kHeisenbergTimes = 20;
constexpr double kTolLinearExact = 1e-10;
constexpr double kTolAsymptote = 1e-6;
constexpr double kRatioLow = 3.5, kRatioHigh = 4.5;
constexpr double kTolEquilibrium = 1e-10;
constexpr double kTolEquipartition = 1e-3;  // relative
constexpr double kTolStationary = 1e-9;
constexpr int kSqueezedDraws = 100;
constexpr double kTolEtaNull = 1e-12;
constexpr double kTolConservation = 1e-10;
constexpr double kTolPeriod = 1e-8;
constexpr double kBudgetFigures = 10.0;

// Values shared by the two-bath figures.
constexpr double kBeta1Omega1 = 0.1;
constexpr double kPhi = 0.1;
constexpr double kEpsilon = 0.1;
const SystemParams kFig = oracle::system(10.0, 5.0, 0.5);
const ThermalBathPair kFigBaths = ThermalBathPair::from_inverse_temperatures(0.1, 0.001, kFig);

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(const char* format, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

double max_abs(const Mat4& m) { return m.cwiseAbs().maxCoeff(); }

const ResponseCurve& find(const std::vector<ResponseCurve>& curves, const std::string& label) {
  for (const auto& c : curves)
    if (c.label == label) return c;
  throw std::runtime_error("missing curve " + label);
}

double max_linear_exact_gap(const ResponseCurve& c) {
  if (c.exact.size() != c.linear.size()) return INFINITY;
  double worst = 0.0;
  for (std::size_t i = 0; i < c.linear.size(); ++i)
    worst = std::max(worst, std::abs(c.linear[i] - c.exact[i]));
  return worst;
}

using Figures = std::map<std::string, std::vector<ResponseCurve>>;

// ---- criteria ---------------------------------------------------------------

Outcome steady_state_oracle() {
  const auto start = std::chrono::steady_clock::now();
  oracle::Draw draw(0xacce0001);
  double worst = 0.0;
  for (int k = 0; k < kSteadyDraws; ++k) {
    const SystemParams p =
        oracle::system(draw.uniform(0, 20), draw.uniform(0, 20), draw.open_low(0, 2));
    const ThermalBathPair b{draw.uniform(0, 100), draw.uniform(0, 100)};
    const Mat4 numeric = solve_lyapunov(build_generators(p, b)).sigma;
    worst = std::max(worst, max_abs(numeric - closed_form_steady_state(p, b).sigma));
  }
  const double elapsed = seconds_since(start);
  return {worst <= kTolSteady && elapsed < kBudgetSteady,
          fmt("max entry error %.2e over %d draws in %.2f s", worst, kSteadyDraws, elapsed)};
}

Outcome heisenberg_oracle() {
  const auto start = std::chrono::steady_clock::now();
  oracle::Draw draw(0xacce0002);
  double worst = 0.0;
  int compared = 0;
  for (int k = 0; k < kHeisenbergDraws; ++k) {
    const SystemParams p =
        oracle::system(draw.uniform(0, 20), draw.uniform(0, 20), draw.open_low(0, 2));
    const ThermalBathPair b{draw.uniform(0, 100), draw.uniform(0, 100)};
    const SqueezedBath sb{draw.uniform(0, 20), draw.uniform(0, 1.5), draw.uniform(0, 6.28)};
    const auto thermal = build_observable_generator(p, b);
    const auto squeezed = build_squeezed_observable_generator(p, sb);
    for (int i = 0; i < kHeisenbergTimes; ++i) {
      const double t = draw.uniform(0, 20);
      const auto e = evolve_observables(thermal, unit_observable(Monomial::n1), t);
      const auto c = coeffs_thermal(p, b, t);
      // Constant terms grow with the occupations; compare them relative to max(1, |s|).
      worst = std::max({worst, std::abs(e.coefficients(0) - c.f), std::abs(e.coefficients(3) - c.j),
                        std::abs(e.coefficients(7) - c.p), std::abs(e.coefficients(8) - c.q),
                        std::abs(e.constant - c.s) / std::max(1.0, std::abs(c.s))});
      const auto es = evolve_observables(squeezed, unit_observable(Monomial::n2), t);
      const auto cs = coeffs_squeezed(p, sb.occupation(), t);
      worst = std::max({worst, std::abs(es.coefficients(0) - cs.f),
                        std::abs(es.coefficients(8) - cs.g), std::abs(es.coefficients(3) - cs.j),
                        std::abs(es.constant - cs.l) / std::max(1.0, std::abs(cs.l))});
      ++compared;
    }
  }
  const double elapsed = seconds_since(start);
  return {worst <= kTolHeisenberg && elapsed < kBudgetHeisenberg,
          fmt("max error %.2e over %d draws x %d times in %.2f s", worst, kHeisenbergDraws,
              compared / kHeisenbergDraws, elapsed)};
}

Outcome linear_equals_exact(const Figures& figs) {
  const double g3 = std::max(max_linear_exact_gap(find(figs.at("fig3"), "fig3_steady_state")),
                             max_linear_exact_gap(find(figs.at("fig3"), "fig3_equilibrium")));
  const double g7 = std::max(max_linear_exact_gap(find(figs.at("fig7"), "fig7_steady_state")),
                             max_linear_exact_gap(find(figs.at("fig7"), "fig7_equilibrium")));
  return {g3 <= kTolLinearExact && g7 <= kTolLinearExact,
          fmt("max |linear - exact|: fig3 %.2e, fig7 %.2e", g3, g7)};
}

Outcome asymptotic_convergence(const Figures& figs) {
  bool ok = true;
  double worst_temp = 0.0, worst_combined = 0.0;
  const double bound = kBeta1Omega1 * (kEpsilon * kEpsilon + kPhi * kPhi);
  for (const char* id : {"fig3", "fig4"}) {
    for (const auto& c : figs.at(id)) {
      const double gap = std::abs(c.linear.back() - c.perturbed_value);
      worst_temp = std::max(worst_temp, gap);
      ok = ok && gap <= kTolAsymptote && c.times.back() == 80.0;
    }
  }
  for (const auto& c : figs.at("fig2")) {
    if (std::isnan(c.perturbed_value)) continue;  // unitary curve has no steady state
    const double gap = std::abs(c.linear.back() - c.perturbed_value);
    worst_combined = std::max(worst_combined, gap);
    ok = ok && gap <= bound;
  }

  // Halving (eps, phi) should quarter the asymptotic discrepancy.
  double eps = kEpsilon, phi = kPhi;
  auto discrepancy = [&] {
    return std::abs(response_combined(kFig, kFigBaths, eps, phi, kInfiniteTime) -
                    perturbed_value(kFig, kFigBaths, eps, phi, Observable::energy1));
  };
  double previous = discrepancy();
  std::string ratios;
  for (int level = 0; level < 3; ++level) {
    eps /= 2;
    phi /= 2;
    const double d = discrepancy();
    const double ratio = previous / d;
    ok = ok && ratio >= kRatioLow && ratio <= kRatioHigh;
    ratios += fmt(" %.3f", ratio);
    previous = d;
  }
  return {ok, fmt("temperature-only gap %.2e, combined gap %.2e (bound %.1e), halving ratios",
                  worst_temp, worst_combined, bound) +
                  ratios};
}

Outcome equilibrium_closed_form(const Figures& figs) {
  const ResponseCurve& c = find(figs.at("fig3"), "fig3_equilibrium");
  double worst = 0.0;
  for (std::size_t i = 0; i < c.times.size(); ++i) {
    worst = std::max(worst, std::abs(c.linear[i] - kBeta1Omega1 * kPhi *
                                                       -std::expm1(-kFig.gamma * c.times[i])));
  }
  const double asym_err = std::abs(c.asymptote - 0.01);
  return {worst <= kTolEquilibrium && asym_err <= kTolEquilibrium,
          fmt("max deviation %.2e, asymptote %.12g", worst, c.asymptote)};
}

Outcome equipartition(const Figures& figs) {
  const double a1 = find(figs.at("fig5"), "fig5a_infinite_coupling").asymptote;
  const double a2 = find(figs.at("fig5"), "fig5b_infinite_coupling").asymptote;
  const double b2w2 = kFigBaths.beta_omega2();
  const double e1 = std::abs(a1 / (kBeta1Omega1 * kPhi / 2) - 1.0);
  const double e2 = std::abs(a2 / (b2w2 * kPhi / 2) - 1.0);
  const double e3 = std::abs(infer_phi_from_probe(a1, a2, kBeta1Omega1, b2w2) / kPhi - 1.0);
  return {e1 <= kTolEquipartition && e2 <= kTolEquipartition && e3 <= kTolEquipartition,
          fmt("relative errors: A1 %.2e, A2 %.2e, inferred phi %.2e (lambda = %g)", e1, e2, e3,
              kDefaultInfiniteLambda)};
}

Outcome squeezed_stationarity() {
  oracle::Draw draw(0xacce0007);
  double worst = 0.0;
  for (int k = 0; k < kSqueezedDraws; ++k) {
    const SystemParams p =
        oracle::system(draw.uniform(0, 20), draw.uniform(0, 20), draw.open_low(0, 2));
    const SqueezedBath b{draw.uniform(0, 20), draw.uniform(0, 1.5), draw.uniform(0, 6.28)};
    worst = std::max(worst, stationarity_residual(p, b, steady_state_squeezed(p, b).sigma0));
  }
  const auto uncoupled = steady_state_squeezed(oracle::system(3.0, 0.0, 0.7), {1.0, 0.8, 0.3});
  const auto unsqueezed = steady_state_squeezed(oracle::system(3.0, 2.0, 0.7), {1.0, 0.0, 0.3});
  const bool limits = uncoupled.e == cplx{} && uncoupled.f == cplx{} && unsqueezed.d == cplx{};
  return {worst <= kTolStationary && limits,
          fmt("max residual %.2e over %d draws; lambda=0 gives E=F=0: %s; r=0 gives D=0: %s", worst,
              kSqueezedDraws, uncoupled.e == cplx{} && uncoupled.f == cplx{} ? "yes" : "no",
              unsqueezed.d == cplx{} ? "yes" : "no")};
}

Outcome eta_null() {
  oracle::Draw draw(0xacce0008);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const SystemParams p =
        oracle::system(draw.uniform(0, 20), draw.uniform(0, 20), draw.open_low(0, 2));
    const SqueezedBath b{draw.uniform(0, 5), draw.uniform(0, 1.5), draw.uniform(0, 6.28)};
    const cplx eta{draw.uniform(-1, 1), draw.uniform(-1, 1)};
    for (double tau : {draw.uniform(0, 10), draw.uniform(0, 100), kInfiniteTime}) {
      worst = std::max(worst, std::abs(squeezing_quench_contribution(p, b, eta, tau)));
    }
  }
  return {worst <= kTolEtaNull, fmt("max |eta contribution| %.2e over 100 draws", worst)};
}

Outcome conservation_and_period() {
  oracle::Draw draw(0xacce0009);
  double worst_sum = 0.0;
  for (int k = 0; k < kHeisenbergDraws; ++k) {
    const SystemParams p =
        oracle::system(draw.uniform(0, 20), draw.uniform(0, 20), draw.uniform(0, 2));
    const ThermalBathPair b{draw.uniform(0, 100), draw.uniform(0, 100)};
    for (int i = 0; i < kHeisenbergTimes; ++i) {
      const double t = draw.uniform(0, 20);
      const auto c = coeffs_thermal(p, b, t);
      worst_sum = std::max(worst_sum, std::abs(c.f + c.j - std::exp(-p.gamma * t)));
    }
  }
  double worst_period = 0.0;
  for (int k = 0; k < 50; ++k) {
    const SystemParams p = oracle::system(draw.uniform(0, 20), draw.uniform(0.1, 20), 0.0);
    const ThermalBathPair b{draw.open_low(0, 20), draw.open_low(0, 20)};
    const double period = 2.0 * std::numbers::pi / p.z();
    for (int i = 0; i < 20; ++i) {
      const double t = draw.uniform(0, period);
      const double v = response_coupling(p, b, 0.1, t);
      worst_period = std::max({worst_period, std::abs(response_coupling(p, b, 0.1, t + period) - v),
                               std::abs(response_coupling(p, b, 0.1, t + 2 * period) - v)});
    }
  }
  return {worst_sum <= kTolConservation && worst_period <= kTolPeriod,
          fmt("max |f + j - exp(-gamma t)| %.2e; max two-period mismatch %.2e", worst_sum,
              worst_period)};
}

Outcome figure_reproduction(const Figures& figs, double elapsed, const Outcome& c3,
                            const Outcome& c4, const Outcome& c5, const Outcome& c6) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "nessprobe_acceptance";
  fs::remove_all(dir);
  bool deterministic = true;
  for (const auto& [id, curves] : figs) {
    const auto again = reproduce_figure(id);
    for (std::size_t i = 0; i < curves.size(); ++i) {
      const std::string path = (dir / (curves[i].label + ".csv")).string();
      write_file_atomic(path, curve_to_csv(curves[i]));
      std::ifstream in(path, std::ios::binary);
      std::stringstream written;
      written << in.rdbuf();
      deterministic = deterministic && written.str() == curve_to_csv(again[i]);
    }
  }
  fs::remove_all(dir);
  const bool derived = c3.pass && c4.pass && c5.pass && c6.pass;
  return {deterministic && elapsed < kBudgetFigures && derived,
          fmt("%zu figures in %.2f s, deterministic: %s, criteria 3-6 on figure data: %s",
              figs.size(), elapsed, deterministic ? "yes" : "no", derived ? "yes" : "no")};
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int number, const char* title, const std::function<Outcome()>& check) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    std::printf("[%s] %d. %s: %s\n", o.pass ? "PASS" : "FAIL", number, title, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
    return o;
  };

  const auto start = std::chrono::steady_clock::now();
  Figures figs;
  for (const std::string& id : figure_ids()) figs[id] = reproduce_figure(id);
  const double figure_seconds = seconds_since(start);

  report(1, "steady-state oracle equivalence", steady_state_oracle);
  report(2, "Heisenberg oracle equivalence", heisenberg_oracle);
  const Outcome c3 = report(3, "linear = exact for dissipative quenches",
                            [&] { return linear_equals_exact(figs); });
  const Outcome c4 =
      report(4, "asymptotic convergence", [&] { return asymptotic_convergence(figs); });
  const Outcome c5 =
      report(5, "equilibrium closed form", [&] { return equilibrium_closed_form(figs); });
  const Outcome c6 = report(6, "equipartition limit", [&] { return equipartition(figs); });
  report(7, "squeezed-bath stationarity", squeezed_stationarity);
  report(8, "eta-null property", eta_null);
  report(9, "conservation identity and recurrence", conservation_and_period);
  report(10, "figure reproduction",
         [&] { return figure_reproduction(figs, figure_seconds, c3, c4, c5, c6); });

  std::printf("%s: %d of 10 criteria failed\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
