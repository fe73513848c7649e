#include "casprop/materials.hpp"

#include "casprop/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace casprop {

DielectricModel DielectricModel::constant(cdouble eps, cdouble mu) {
  DielectricModel m;
  m.eps_const_ = eps;
  m.mu_ = mu;
  return m;
}

DielectricModel DielectricModel::lorentz(double strength, double omega0, double gamma) {
  return lorentz_sum({LorentzOscillator{strength, omega0, gamma}});
}

DielectricModel DielectricModel::lorentz_sum(std::vector<LorentzOscillator> oscillators) {
  for (const auto& o : oscillators) {
    if (o.strength < 0.0 || o.omega0 <= 0.0 || o.gamma < 0.0)
      throw std::invalid_argument("lorentz oscillator requires C >= 0, w0 > 0, gamma >= 0");
  }
  DielectricModel m;
  m.oscillators_ = std::move(oscillators);
  return m;
}

cdouble DielectricModel::permittivity(double omega) const {
  if (oscillators_.empty()) return eps_const_;
  cdouble eps = 1.0;
  for (const auto& o : oscillators_) {
    double w02 = o.omega0 * o.omega0;
    eps += o.strength * w02 / (cdouble(w02 - omega * omega, 0.0) - cdouble(0.0, o.gamma * omega));
  }
  return eps;
}

const std::vector<MaterialPreset>& material_presets() {
  static const std::vector<MaterialPreset> presets = {
      {"spheroid", DielectricModel::lorentz(3.0, 1.0e13, 1.0e11)},
      {"plate1", DielectricModel::lorentz(3.0, 7.0e12, 7.0e10)},
      {"plate2", DielectricModel::lorentz(3.0, 8.76e12, 8.0e10)},
  };
  return presets;
}

const DielectricModel& preset_model(const std::string& name) {
  for (const auto& p : material_presets())
    if (p.name == name) return p.model;
  throw std::invalid_argument("unknown material preset: " + name);
}

namespace {

// Principal sqrt with the sign flipped if needed so that Im >= 0 (waves
// decaying away from the interface).
cdouble sqrt_upper(cdouble z) {
  cdouble r = std::sqrt(z);
  if (r.imag() < 0.0) r = -r;
  return r;
}

}  // namespace

cdouble fresnel_reflection(Polarization pol, double k_perp, double omega, cdouble eps, cdouble mu) {
  if (omega <= 0.0) throw std::domain_error("fresnel_reflection: requires omega > 0");
  if (k_perp < 0.0) throw std::domain_error("fresnel_reflection: requires k_perp >= 0");
  if (pol == Polarization::M) std::swap(eps, mu);
  double koc2 = omega * omega / (c_light * c_light);
  cdouble kz0 = sqrt_upper(cdouble(koc2 - k_perp * k_perp, 0.0));
  cdouble kzm = sqrt_upper(eps * mu * koc2 - k_perp * k_perp);
  return (eps * kz0 - kzm) / (eps * kz0 + kzm);
}

double near_field_response(cdouble eps_p) {
  cdouble den = eps_p + 1.0;
  if (std::abs(den) < 1e-300) throw std::domain_error("near_field_response: resonant denominator");
  cdouble r = (eps_p - 1.0) / den;
  return (r * r).imag();
}

}  // namespace casprop
