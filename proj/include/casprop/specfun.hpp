#pragma once

#include <complex>

// Special functions used by the wave and scattering machinery: spherical
// Bessel/Hankel functions (complex argument for j_l), Riccati-Bessel
// derivatives, Wigner 3j symbols, associated Legendre functions with the
// Condon-Shortley phase, and Bose-Einstein weights.
//
// All functions are pure and reentrant. The factorial table used by the 3j
// evaluation is built on first use and immutable afterwards.

namespace casprop::specfun {

using cdouble = std::complex<double>;

inline constexpr int l_max_supported = 40;

// j_l(x) for complex x. Series for small |x|, upward recurrence for
// |x| > l + 1, downward (Miller) recurrence otherwise. Relative accuracy
// ~1e-13 for |x| <= 100, l <= l_max_supported.
// Throws std::domain_error for |Im x| > 700 (result would overflow).
cdouble spherical_bessel_j(int l, cdouble x);

// y_l(x), real positive argument; upward recurrence (stable for y).
double spherical_bessel_y(int l, double x);

// h_l^(1)(x) = j_l(x) + i y_l(x), x > 0.
cdouble spherical_hankel1(int l, double x);

enum class RadialKind { Bessel, Hankel };

// d/dx [x z_l(x)] = x z_{l-1}(x) - l z_l(x), z = j or h^(1).
// Hankel kind requires real positive argument (vacuum exterior).
cdouble riccati_derivative(RadialKind kind, int l, cdouble x);

// Wigner 3j symbol by the Racah single-sum formula in log space.
// Inputs violating the selection rules (m1+m2+m3 != 0, triangle rule,
// |m_i| > l_i) return exactly 0.
double wigner3j(int l1, int l2, int l3, int m1, int m2, int m3);

// P_l^m(x), 0 <= m <= l required, |x| <= 1, Condon-Shortley phase.
// Negative m handled via the standard symmetry relation.
double assoc_legendre(int l, int m, double x);

// Bose-Einstein occupation 1/(exp(hbar w / k_B T) - 1). Returns 0 for T = 0
// and underflows to 0 for hbar w / k_B T > 700.
double bose_weight(double omega, double T);

// Temperature derivative of bose_weight, units 1/K.
double bose_weight_dT(double omega, double T);

// log(n!) from the precomputed table (n <= 200).
double log_factorial(int n);

}  // namespace casprop::specfun
