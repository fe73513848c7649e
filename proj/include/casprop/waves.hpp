#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>

#include "casprop/materials.hpp"  // Polarization

// Partial-wave index bookkeeping, the infinitesimal translation operator p_z,
// the spherical translation matrices U(d)/V(d) along z, and point evaluation
// of regular vector spherical waves.
//
// Canonical index ordering (shared by every matrix in this library):
// polarization-major (M first, then N), l ascending from 1, m ascending from
// -l. Size of the index set is 2 l_max (l_max + 2).

namespace casprop {

struct PartialWaveIndex {
  Polarization P = Polarization::M;
  int l = 1;
  int m = 0;

  PartialWaveIndex sigma() const { return {P, l, -m}; }  // m -> -m involution
  bool operator==(const PartialWaveIndex&) const = default;
};

class Truncation {
 public:
  explicit Truncation(int l_max);

  int l_max() const { return l_max_; }
  int size() const { return 2 * l_max_ * (l_max_ + 2); }

  PartialWaveIndex index(int i) const;          // i in [0, size)
  int position(const PartialWaveIndex& mu) const;  // inverse of index()

 private:
  int l_max_;
};

// p_z in the canonical ordering:
//   p_{z; Plm, P'l'm'} = -(w/c) { i (1-d_{P'P}) d_{l'l} a(l,m)
//                               + d_{P'P} [ -b(l,m) d_{l',l+1} + b(l',m) d_{l'+1,l} ] } d_{m'm}
// with a(l,m) = m/(l(l+1)) and
// b(l,m) = 1/(l+1) sqrt( l(l+2)(l-m+1)(l+m+1) / ((2l+1)(2l+3)) ).
double translation_coef_a(int l, int m);
double translation_coef_b(int l, int m);
Eigen::MatrixXcd p_z_matrix(const Truncation& trunc, double omega);

// Regular translation matrix V(d) along z (spherical Bessel radial part).
// Orientation and direction are fixed by V(d) = 1 - d p_z + O(d^2), i.e.
// p_z = -dV/dd at d = 0; V(0) is the identity.
Eigen::MatrixXcd regular_translation_matrix(double d, double omega, const Truncation& trunc);

// Outgoing variant U(d), spherical Hankel radial part; same index structure
// and phase convention as V. Requires d > 0.
Eigen::MatrixXcd outgoing_translation_matrix(double d, double omega, const Truncation& trunc);

// E^reg_{Plm}(r) with the normalization sqrt((-1)^m w/c); the square root of
// (-1)^m is taken on the principal branch (i for odd m). N waves use the
// analytic curl relation, finite at r = 0.
Eigen::Vector3cd evaluate_regular_wave(const PartialWaveIndex& mu, double omega,
                                       const Eigen::Vector3d& r);

}  // namespace casprop
