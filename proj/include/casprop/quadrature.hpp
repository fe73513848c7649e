#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

// Frequency quadrature engine for the thermal integrals. Integration runs in
// the dimensionless variable x = hbar w / (k_B T); panels are refined
// adaptively (15-point Gauss-Legendre, error from panel bisection) with a
// deterministic, compensated final reduction. Narrow Lorentzian features can
// be seeded via explicit panel break points.

namespace casprop {

struct QuadratureSpec {
  double rel_tol = 1e-8;
  double x_min = 1e-6;
  double x_max = 60.0;   // Bose weight < 1e-20 at the default cutoff
  int max_panels = 20000;
};

enum class ThermalWeight { Bose, BoseDerivative };  // n(w,T) or T dn/dT

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int panels = 0;
};

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double x_lo, double x_hi)
      : std::runtime_error(what), x_lo(x_lo), x_hi(x_hi) {}
  double x_lo, x_hi;  // offending interval in x = hbar w / k_B T
};

// Integral over omega of f(omega) * weight(omega, T). f must be smooth inside
// panels; seed_omegas lists frequencies (resonances, surface modes) that are
// inserted as panel boundaries together with small enclosing windows.
// Throws QuadratureError on non-convergence ("integrand too sharp").
QuadratureResult thermal_integral(const std::function<double(double)>& f, double T,
                                  ThermalWeight weight, const QuadratureSpec& spec = {},
                                  const std::vector<double>& seed_omegas = {});

// Plain adaptive integral of g(x) on [a, b] with the same engine; used by the
// thermal wrapper and handy for oracles in tests.
QuadratureResult adaptive_integral(const std::function<double(double)>& g, double a, double b,
                                   double rel_tol, int max_panels,
                                   const std::vector<double>& break_points = {});

}  // namespace casprop
