#pragma once

// Physical constants (SI). Pinned values; do not read from the environment.

namespace casprop {

inline constexpr double hbar = 1.054571817e-34;      // J s
inline constexpr double k_boltzmann = 1.380649e-23;  // J/K
inline constexpr double c_light = 2.99792458e8;      // m/s
inline constexpr double g_standard = 9.80665;        // m/s^2
inline constexpr double pi = 3.14159265358979323846;

// Thermal wavelength hbar*c/(k_B*T), ~7.6 um at 300 K.
inline double thermal_wavelength(double T) {
  return hbar * c_light / (k_boltzmann * T);
}

}  // namespace casprop
