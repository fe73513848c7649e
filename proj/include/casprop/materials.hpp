#pragma once

#include <complex>
#include <string>
#include <vector>

// Dielectric models (constant and Lorentz-oscillator sums), the material
// preset registry, Fresnel reflection of a thick plate, and the near-field
// surface response factor Im[((eps-1)/(eps+1))^2].

namespace casprop {

using cdouble = std::complex<double>;

struct LorentzOscillator {
  double strength = 0.0;   // C, dimensionless
  double omega0 = 0.0;     // resonance, rad/s
  double gamma = 0.0;      // damping, rad/s
};

// eps(w) = eps_const, or 1 + sum_k C_k w0_k^2/(w0_k^2 - w^2 - i g_k w).
// mu is a constant (1 unless overridden).
class DielectricModel {
 public:
  static DielectricModel constant(cdouble eps, cdouble mu = 1.0);
  static DielectricModel lorentz(double strength, double omega0, double gamma);
  static DielectricModel lorentz_sum(std::vector<LorentzOscillator> oscillators);

  cdouble permittivity(double omega) const;
  cdouble permeability() const { return mu_; }
  bool is_constant() const { return oscillators_.empty(); }
  const std::vector<LorentzOscillator>& oscillators() const { return oscillators_; }

 private:
  DielectricModel() = default;
  cdouble eps_const_{1.0, 0.0};
  cdouble mu_{1.0, 0.0};
  std::vector<LorentzOscillator> oscillators_;
};

struct MaterialPreset {
  std::string name;
  DielectricModel model;
};

// Registered presets: "spheroid", "plate1", "plate2" (oscillator parameters
// C = 3 and (w0, gamma) = (1e13, 1e11), (7e12, 7e10), (8.76e12, 8e10)).
const std::vector<MaterialPreset>& material_presets();
const DielectricModel& preset_model(const std::string& name);  // throws if unknown

enum class Polarization { M, N };

// Fresnel reflection coefficient of a half-space with response (eps, mu),
// thick-plate limit. Square roots on the principal branch with Im >= 0
// (fields decay into the medium). r^M follows from r^N by eps <-> mu.
cdouble fresnel_reflection(Polarization pol, double k_perp, double omega, cdouble eps,
                           cdouble mu = 1.0);

// Im[((eps_p-1)/(eps_p+1))^2], the k_perp -> infinity limit of r^N entering
// every near-field force formula. Throws on the surface-mode pole eps_p = -1.
double near_field_response(cdouble eps_p);

}  // namespace casprop
