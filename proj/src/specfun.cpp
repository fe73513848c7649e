#include "casprop/specfun.hpp"

#include "casprop/constants.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace casprop::specfun {

namespace {

constexpr int kFactTableSize = 201;

const std::array<double, kFactTableSize>& log_factorial_table() {
  static const std::array<double, kFactTableSize> table = [] {
    std::array<double, kFactTableSize> t{};
    t[0] = 0.0;
    for (int n = 1; n < kFactTableSize; ++n) t[n] = t[n - 1] + std::log(double(n));
    return t;
  }();
  return table;
}

// Taylor series j_l(x) = x^l/(2l+1)!! * sum_k (-x^2/2)^k / (k! (2l+3)(2l+5)...(2l+2k+1)).
cdouble bessel_j_series(int l, cdouble x) {
  double dfac = 1.0;  // (2l+1)!!
  for (int n = 3; n <= 2 * l + 1; n += 2) dfac *= n;
  cdouble x2 = -0.5 * x * x;
  cdouble term = 1.0, sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    term *= x2 / (double(k) * (2.0 * l + 2.0 * k + 1.0));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  cdouble xl = 1.0;
  for (int n = 0; n < l; ++n) xl *= x;
  return xl / dfac * sum;
}

cdouble bessel_j_upward(int l, cdouble x) {
  cdouble jm = std::sin(x) / x;  // j_0
  if (l == 0) return jm;
  cdouble jc = std::sin(x) / (x * x) - std::cos(x) / x;  // j_1
  for (int n = 1; n < l; ++n) {
    cdouble jn = (2.0 * n + 1.0) / x * jc - jm;
    jm = jc;
    jc = jn;
  }
  return jc;
}

cdouble bessel_j_downward(int l, cdouble x) {
  // Miller's algorithm: start well above l, recurse down, normalize by j_0
  // (or j_1 when sin(x)/x is accidentally small).
  const int start = l + 20 + int(std::ceil(std::abs(x)));
  cdouble jp = 0.0, jc = 1e-280;
  cdouble jl = 0.0, j1 = 0.0, j0 = 0.0;
  for (int n = start; n >= 0; --n) {
    cdouble jm = (2.0 * n + 3.0) / x * jc - jp;
    jp = jc;
    jc = jm;
    if (n == l) jl = jm;
    if (n == 1) j1 = jm;
    if (n == 0) j0 = jm;
    // rescale to avoid overflow of the unnormalized recurrence
    if (std::abs(jc) > 1e250) {
      jc *= 1e-250;
      jp *= 1e-250;
      jl *= 1e-250;
      j1 *= 1e-250;
    }
  }
  cdouble ref0 = std::sin(x) / x;
  if (std::abs(ref0) > 1e-3 / (1.0 + std::abs(x))) return jl * (ref0 / j0);
  cdouble ref1 = std::sin(x) / (x * x) - std::cos(x) / x;
  return jl * (ref1 / j1);
}

}  // namespace

double log_factorial(int n) {
  if (n < 0 || n >= kFactTableSize) throw std::domain_error("log_factorial: n out of table range");
  return log_factorial_table()[n];
}

cdouble spherical_bessel_j(int l, cdouble x) {
  if (l < 0 || l > l_max_supported) throw std::domain_error("spherical_bessel_j: l out of supported range");
  if (std::abs(x.imag()) > 700.0) throw std::domain_error("spherical_bessel_j: argument out of supported range");
  double ax = std::abs(x);
  if (ax == 0.0) return l == 0 ? 1.0 : 0.0;
  if (ax < 0.6 || ax < 0.3 * l) return bessel_j_series(l, x);
  if (ax > double(l) + 1.0) return bessel_j_upward(l, x);
  return bessel_j_downward(l, x);
}

double spherical_bessel_y(int l, double x) {
  if (l < 0 || l > l_max_supported) throw std::domain_error("spherical_bessel_y: l out of supported range");
  if (x <= 0.0) throw std::domain_error("spherical_bessel_y: requires x > 0");
  double ym = -std::cos(x) / x;  // y_0
  if (l == 0) return ym;
  double yc = -std::cos(x) / (x * x) - std::sin(x) / x;  // y_1
  for (int n = 1; n < l; ++n) {
    double yn = (2.0 * n + 1.0) / x * yc - ym;
    ym = yc;
    yc = yn;
  }
  return yc;
}

cdouble spherical_hankel1(int l, double x) {
  if (x <= 0.0) throw std::domain_error("spherical_hankel1: requires x > 0");
  return spherical_bessel_j(l, x) + cdouble(0.0, 1.0) * spherical_bessel_y(l, x);
}

cdouble riccati_derivative(RadialKind kind, int l, cdouble x) {
  if (kind == RadialKind::Bessel) {
    if (l == 0) return std::abs(x) == 0.0 ? 1.0 : std::cos(x);
    return x * spherical_bessel_j(l - 1, x) - double(l) * spherical_bessel_j(l, x);
  }
  if (x.imag() != 0.0 || x.real() <= 0.0)
    throw std::domain_error("riccati_derivative: Hankel kind requires real x > 0");
  double xr = x.real();
  cdouble hm = l == 0 ? std::exp(cdouble(0.0, xr)) / xr : spherical_hankel1(l - 1, xr);
  if (l == 0) {
    // d/dx [x h_0] = h_{-1} * x - 0, with h_{-1}(x) = e^{ix}/x
    return std::exp(cdouble(0.0, xr));
  }
  return x * hm - double(l) * spherical_hankel1(l, xr);
}

double wigner3j(int l1, int l2, int l3, int m1, int m2, int m3) {
  if (m1 + m2 + m3 != 0) return 0.0;
  if (l3 < std::abs(l1 - l2) || l3 > l1 + l2) return 0.0;
  if (std::abs(m1) > l1 || std::abs(m2) > l2 || std::abs(m3) > l3) return 0.0;
  const auto lf = [](int n) { return log_factorial(n); };
  const double pref = 0.5 * (lf(l1 + l2 - l3) + lf(l1 - l2 + l3) + lf(-l1 + l2 + l3) -
                             lf(l1 + l2 + l3 + 1) + lf(l1 + m1) + lf(l1 - m1) + lf(l2 + m2) +
                             lf(l2 - m2) + lf(l3 + m3) + lf(l3 - m3));
  const int tmin = std::max({0, l2 - l3 - m1, l1 - l3 + m2});
  const int tmax = std::min({l1 + l2 - l3, l1 - m1, l2 + m2});
  double sum = 0.0;
  for (int t = tmin; t <= tmax; ++t) {
    double ln = pref - (lf(t) + lf(l3 - l2 + m1 + t) + lf(l3 - l1 - m2 + t) +
                        lf(l1 + l2 - l3 - t) + lf(l1 - m1 - t) + lf(l2 + m2 - t));
    double term = std::exp(ln);
    sum += (t % 2 == 0) ? term : -term;
  }
  return ((l1 - l2 - m3) % 2 == 0) ? sum : -sum;
}

double assoc_legendre(int l, int m, double x) {
  if (std::abs(x) > 1.0) throw std::domain_error("assoc_legendre: |x| > 1");
  if (l < 0) throw std::domain_error("assoc_legendre: l < 0");
  if (m < 0) {
    // P_l^{-m} = (-1)^m (l-m)!/(l+m)! P_l^m
    int ma = -m;
    if (ma > l) return 0.0;
    double ratio = std::exp(log_factorial(l - ma) - log_factorial(l + ma));
    double v = assoc_legendre(l, ma, x) * ratio;
    return (ma % 2 == 0) ? v : -v;
  }
  if (m > l) return 0.0;
  // P_m^m = (-1)^m (2m-1)!! (1-x^2)^{m/2}, then raise l.
  double pmm = 1.0;
  if (m > 0) {
    double somx2 = std::sqrt((1.0 - x) * (1.0 + x));
    double fact = 1.0;
    for (int i = 0; i < m; ++i) {
      pmm *= -fact * somx2;
      fact += 2.0;
    }
  }
  if (l == m) return pmm;
  double pmmp1 = x * (2.0 * m + 1.0) * pmm;
  if (l == m + 1) return pmmp1;
  double pll = 0.0;
  for (int ll = m + 2; ll <= l; ++ll) {
    pll = (x * (2.0 * ll - 1.0) * pmmp1 - (ll + m - 1.0) * pmm) / (ll - m);
    pmm = pmmp1;
    pmmp1 = pll;
  }
  return pll;
}

double bose_weight(double omega, double T) {
  if (omega <= 0.0) throw std::domain_error("bose_weight: requires omega > 0");
  if (T < 0.0) throw std::domain_error("bose_weight: requires T >= 0");
  if (T == 0.0) return 0.0;
  double x = hbar * omega / (k_boltzmann * T);
  if (x > 700.0) return 0.0;
  return 1.0 / std::expm1(x);
}

double bose_weight_dT(double omega, double T) {
  if (omega <= 0.0) throw std::domain_error("bose_weight_dT: requires omega > 0");
  if (T < 0.0) throw std::domain_error("bose_weight_dT: requires T >= 0");
  if (T == 0.0) return 0.0;
  double x = hbar * omega / (k_boltzmann * T);
  if (x > 700.0) return 0.0;
  // d/dT [1/(e^x - 1)] = e^x/(e^x-1)^2 * x/T, written via expm1 for stability
  double em = std::expm1(x);
  return (em + 1.0) / (em * em) * x / T;
}

}  // namespace casprop::specfun
