#include <doctest.h>

#include <cmath>

#include "casprop/constants.hpp"
#include "casprop/materials.hpp"
#include "casprop/quadrature.hpp"

using namespace casprop;

namespace {

// Gamma(n+1) Zeta(s) by direct series, independent oracle for the Bose moments
double zeta(double s) {
  double z = 0.0;
  for (int n = 1; n < 200000; ++n) z += std::pow(double(n), -s);
  return z;
}

}  // namespace

TEST_CASE("bose moment integrals against zeta closed forms") {
  const double T = 300.0;
  const double kT_hbar = k_boltzmann * T / hbar;

  // Int dw w n(w,T) = Gamma(2) zeta(2) (kT/hbar)^2 = pi^2/6 (kT/hbar)^2,
  // corrected for the x_min = 1e-6 head (integrand ~ 1 - x/2 there)
  auto r1 = thermal_integral([](double w) { return w; }, T, ThermalWeight::Bose);
  const QuadratureSpec def;
  const double head = def.x_min - def.x_min * def.x_min / 4.0;
  CHECK(r1.value ==
        doctest::Approx((pi * pi / 6.0 - head) * kT_hbar * kT_hbar).epsilon(1e-8));

  // Int dw w^10 n(w,T) = Gamma(11) zeta(11) (kT/hbar)^11
  auto r10 = thermal_integral([](double w) { return std::pow(w, 10); }, T, ThermalWeight::Bose);
  const double want = 3628800.0 * zeta(11.0) * std::pow(kT_hbar, 11);
  CHECK(r10.value == doctest::Approx(want).epsilon(1e-8));

  // T = 0 gives 0 without evaluating anything
  auto r0 = thermal_integral([](double) { return 1.0; }, 0.0, ThermalWeight::Bose);
  CHECK(r0.value == 0.0);
}

TEST_CASE("derivative weight matches finite differences of the bose moment") {
  const double T = 400.0;
  auto f = [](double w) { return w * w; };
  auto dr = thermal_integral(f, T, ThermalWeight::BoseDerivative);
  const double dT = 0.05;
  auto p = thermal_integral(f, T + dT, ThermalWeight::Bose);
  auto m = thermal_integral(f, T - dT, ThermalWeight::Bose);
  // engine integrates T dn/dT
  CHECK(dr.value == doctest::Approx(T * (p.value - m.value) / (2.0 * dT)).epsilon(1e-6));
}

TEST_CASE("narrow lorentzian needs seeding; seeded run converges") {
  const double T = 550.0;
  auto plate = preset_model("plate1");
  auto f = [&](double w) { return near_field_response(plate.permittivity(w)); };

  std::vector<double> seeds;
  for (const auto& o : plate.oscillators()) {
    seeds.push_back(o.omega0);
    seeds.push_back(o.omega0 * std::sqrt(1.0 + o.strength / 2.0));
  }
  QuadratureSpec spec;
  spec.rel_tol = 1e-9;
  auto seeded = thermal_integral(f, T, ThermalWeight::Bose, spec, seeds);
  CHECK(seeded.error_estimate < 1e-8 * std::abs(seeded.value));

  // doubling x_max does not move paper-configuration integrals
  QuadratureSpec wide = spec;
  wide.x_max = 120.0;
  auto wider = thermal_integral(f, T, ThermalWeight::Bose, wide, seeds);
  CHECK(std::abs(wider.value - seeded.value) < 1e-10 * std::abs(seeded.value));
}

TEST_CASE("non-convergence reports the offending interval") {
  // a spike far narrower than max_panels can resolve from a cold start
  auto spike = [](double x) { return 1.0 / (1e-22 + (x - 0.37) * (x - 0.37)); };
  QuadratureSpec spec;
  spec.max_panels = 40;
  bool threw = false;
  try {
    adaptive_integral(spike, 1e-6, 60.0, 1e-12, spec.max_panels);
  } catch (const QuadratureError& e) {
    threw = true;
    CHECK(e.x_lo <= 0.37);
    CHECK(e.x_hi >= 0.37);
  }
  CHECK(threw);
}

TEST_CASE("plain adaptive integral sanity") {
  auto r = adaptive_integral([](double x) { return std::sin(x); }, 0.0, pi, 1e-12, 1000);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS(adaptive_integral([](double x) { return x; }, 1.0, 1.0, 1e-6, 10));
}
