#pragma once

#include <functional>
#include <vector>

#include "casprop/materials.hpp"
#include "casprop/polarizability.hpp"
#include "casprop/quadrature.hpp"
#include "casprop/scattering.hpp"

// Force formulas: isolated self-propulsion (exact partial-wave trace,
// small-object reduction, dilute-janus closed form), the near-field lateral
// force above a plate in its three equivalent representations, the
// two-temperature combination, and gravity normalization.
//
// Sign convention: the particle's symmetry axis points along
// (sin t cos p, sin t sin p, cos t); with the plate below (surface normal +z)
// the lateral force at theta = pi/4, phi = 0 is negative when the spectral
// integral of Im[r^2] Im[a_par a_perp*] is positive. All three lateral
// representations share this convention; only the orientation factor
// sin(2 theta) cos(phi) is observable against the paper's figures.

namespace casprop {

struct ThermalScene {
  double T_particle = 0.0;  // K
  double T_plate = 0.0;     // K
  double d = 0.0;           // separation (center to surface), m
  DielectricModel plate = DielectricModel::constant(1.0);
};

struct NearFieldValidity {
  double r_over_d = 0.0;        // largest particle dimension / separation
  double d_over_lambda_t = 0.0; // separation / thermal wavelength
  bool satisfied = false;       // both ratios < 0.2
};

struct ForceResult {
  double value = 0.0;             // N
  double quadrature_error = 0.0;  // N
  NearFieldValidity validity;     // filled by the near-field routes
};

using TMatrixProvider = std::function<TMatrixBlock(double omega)>;
using PolarizabilityProvider = std::function<Eigen::Matrix3cd(double omega)>;

// ---- isolated particle --------------------------------------------------

// z-component of the self-propulsion force at environment temperature 0:
//   F_z = (2 hbar/pi) Int dw n(w,T) Im Tr{ p_z T T^dagger }.
// A finite environment temperature is the caller's subtraction
// F(T) - F(T_env) (see two_temperature_force).
ForceResult isolated_force_z(const TMatrixProvider& provider, double T,
                             const QuadratureSpec& quad = {},
                             const std::vector<double>& seed_omegas = {});

// Small-object reduction of the trace above (leading order in size, the
// l <= 2 dipole/quadrupole element set):
//   F_z = (4 hbar/(pi c)) Int dw w n(w,T) sum_{m,m'}
//         [ -a(1,m) Re(T^{MN}_{1m,1m'} conj T^{NN}_{1m,1m'})
//           +b(1,m) Im(T^{NN}_{2m,1m'} conj T^{NN}_{1m,1m'}) ].
ForceResult small_object_force_z(const TMatrixProvider& provider, double T,
                                 const QuadratureSpec& quad = {},
                                 const std::vector<double>& seed_omegas = {});

// Dilute (Born-order) janus closed form:
//   F_z = (2 hbar/(pi c^10)) Int dw w^10 n(w,T) (R^9/1620)
//         [ Im eps2 (Re eps1 - 1) - Im eps1 (Re eps2 - 1) ].
ForceResult janus_dilute_force(const DielectricModel& eps_lower, const DielectricModel& eps_upper,
                               double radius, double T, const QuadratureSpec& quad = {});

// ---- particle above a plate, near field ---------------------------------

// From the l=1 N-polarization block (prefactor 27/(128 sqrt 2), weights
// A_m = {1,2,1}, combination Re[T_{0,m} T*_{1,m} - T_{-1,m} T*_{0,m}]).
// Evaluates the self-part F_x(T_particle); scene.T_plate is ignored here.
// r_scale, when positive, feeds the validity ratio R/d.
ForceResult lateral_force_tmatrix(const TMatrixProvider& provider, const ThermalScene& scene,
                                  const QuadratureSpec& quad = {},
                                  const std::vector<double>& seed_omegas = {},
                                  double r_scale = 0.0);

// From the lab-frame polarizability tensor (prefactor 3/32, combination
// Im[a_zx a_xx* + a_zy a_xy* + 2 a_zz a_xz*]).
ForceResult lateral_force_polarizability(const PolarizabilityProvider& provider,
                                         const ThermalScene& scene,
                                         const QuadratureSpec& quad = {},
                                         const std::vector<double>& seed_omegas = {},
                                         double r_scale = 0.0);

// Closed spheroid form, -(3/64) sin(2 theta) cos(phi) (hbar/d^7)
// Int dw n Im[r_nf^2] Im[a_par a_perp*]; resonance seeds are derived from
// the plate and spheroid oscillator models automatically.
ForceResult lateral_force_spheroid(const SpheroidSpec& spec, const Orientation& o,
                                   const ThermalScene& scene, const QuadratureSpec& quad = {});

// F(T_particle) - F(T_plate) for any single-temperature force function.
ForceResult two_temperature_force(const std::function<ForceResult(double)>& force_fn,
                                  double T_particle, double T_plate);

// F / (rho V g) with V the spheroid volume.
double gravity_ratio(double force, const SpheroidSpec& spec, double rho);

// Panel seeds for the thermal quadrature: bulk oscillator resonances
// (w0 and w0 +- 5 gamma), the plate surface mode w0 sqrt(1 + C/2), and the
// depolarization-shifted spheroid modes w0 sqrt(1 + C n_{par/perp}).
std::vector<double> resonance_seeds(const DielectricModel& model);
std::vector<double> surface_mode_seeds(const DielectricModel& plate);
std::vector<double> spheroid_mode_seeds(const SpheroidSpec& spec);

// Validity ratios for the near-field window R << d << lambda_T.
NearFieldValidity near_field_validity(double r_scale, double d, double T);

}  // namespace casprop
