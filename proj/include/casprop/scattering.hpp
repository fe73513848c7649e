#pragma once

#include <Eigen/Dense>

#include "casprop/waves.hpp"

// T-matrix constructors: Mie coefficients for a homogeneous sphere, the
// dipole-limit block built from a polarizability tensor, and the
// Born-approximation volume quadrature for a janus sphere.

namespace casprop {

struct TMatrixBlock {
  double omega = 0.0;
  Truncation trunc{1};
  Eigen::MatrixXcd entries;  // canonical ordering, trunc.size() square

  cdouble entry(const PartialWaveIndex& mu, const PartialWaveIndex& nu) const {
    return entries(trunc.position(mu), trunc.position(nu));
  }
};

// Diagonal Mie block; entries independent of m. T^M_l per the standard
// closed form, T^N_l by interchanging eps and mu.
TMatrixBlock mie_t_matrix(double radius, cdouble eps, cdouble mu, double omega,
                          const Truncation& trunc);

// Single Mie coefficient (l >= 1).
cdouble mie_coefficient(Polarization pol, int l, double radius, cdouble eps, cdouble mu,
                        double omega);

// l = 1, N-polarization block from a 3x3 polarizability tensor (units m^3):
//   T^{N,N}_{1m,1m'} = i (w/c)^2 Int dOmega E^reg_{N,1,-m}(0) . alpha . E^reg_{N,1,m'}(0).
// Returned block has l_max = 1 with the M part zero.
TMatrixBlock dipole_t_from_polarizability(const Eigen::Matrix3cd& alpha, double omega);

struct JanusSphere {
  double radius = 0.0;  // m
  cdouble eps_lower{1.0, 0.0};  // z < 0 hemisphere
  cdouble eps_upper{1.0, 0.0};  // z > 0 hemisphere
};

struct BornQuadrature {
  int n_radial = 16;
  int n_polar = 32;     // total across both hemispheres (split at the equator)
  int n_azimuthal = 64;
  bool check_convergence = false;
  double rel_tol = 1e-6;  // used when check_convergence is set
};

// First Born order T = V for the janus sphere:
//   T_{mu mu'} = i (w/c)^2 Int d3r (eps(r) - 1) E^reg_{sigma(mu)}(r) . E^reg_{mu'}(r)
// Radial Gauss-Legendre on [0, R], polar Gauss-Legendre in cos(theta) split
// at the equator (the permittivity step must fall on a panel boundary),
// uniform azimuthal trapezoid. Throws if the optional convergence check
// fails ("increase quadrature order").
TMatrixBlock born_t_matrix(const JanusSphere& geometry, double omega, const Truncation& trunc,
                           const BornQuadrature& quad = {});

// Worst violation of T_{mu mu'} = T_{sigma(mu') sigma(mu)}, normalized by the
// largest entry magnitude of the block.
double check_t_symmetry(const TMatrixBlock& T);

}  // namespace casprop
