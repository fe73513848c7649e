#pragma once

#include <Eigen/Dense>

#include "casprop/materials.hpp"

// Prolate-spheroid polarizabilities, depolarization factors, and the
// lab-frame tensor obtained by passive rotation of the body-frame tensor.

namespace casprop {

struct SpheroidSpec {
  double r_par = 0.0;   // semi-axis along the symmetry axis, m
  double r_perp = 0.0;  // perpendicular semi-axis, m
  DielectricModel material = DielectricModel::constant(1.0);

  // eccentricity, eta^2 = 1 - (r_perp/r_par)^2 (prolate branch)
  double eccentricity() const;
  double volume() const;
};

struct Orientation {
  double theta = 0.0;  // tilt of the symmetry axis from the surface normal (z), rad
  double phi = 0.0;    // azimuth, rad
};

struct GeometricFactors {
  double n_par;
  double n_perp;  // = (1 - n_par)/2
};

// Depolarization factors for prolate spheroids. Series expansion below
// eta = 1e-4 where the log formula loses digits.
GeometricFactors geometric_factors(double eta);

struct SpheroidPolarizability {
  cdouble par;   // m^3
  cdouble perp;  // m^3
};

// alpha_{par/perp} = (1/3) R_perp^2 R_par (eps-1) / ((eps-1) n_{par/perp} + 1).
// Throws on the plasmon pole (vanishing denominator) and for oblate input.
SpheroidPolarizability spheroid_polarizability(const SpheroidSpec& spec, double omega);

// Lab-frame tensor for a body-frame diag(a_perp, a_perp, a_par) rotated so
// that the symmetry axis points along (sin t cos p, sin t sin p, cos t).
// Composition: passive rotations about y then z, alpha = Oz^T (Oy^T a0 Oy) Oz.
Eigen::Matrix3cd lab_frame_tensor(cdouble alpha_par, cdouble alpha_perp, const Orientation& o);

// Im[alpha_par conj(alpha_perp)] at omega; the spectral overlap driving the
// lateral force (zero for spheres and for lossless materials).
double overlap_factor(const SpheroidSpec& spec, double omega);

}  // namespace casprop
