#include "casprop/waves.hpp"

#include <cmath>
#include <stdexcept>

#include "casprop/constants.hpp"
#include "casprop/specfun.hpp"

namespace casprop {

using specfun::spherical_bessel_j;
using specfun::spherical_hankel1;
using specfun::wigner3j;

Truncation::Truncation(int l_max) : l_max_(l_max) {
  if (l_max < 1) throw std::invalid_argument("Truncation: l_max >= 1 required");
  if (l_max > specfun::l_max_supported) throw std::invalid_argument("Truncation: l_max too large");
}

PartialWaveIndex Truncation::index(int i) const {
  if (i < 0 || i >= size()) throw std::out_of_range("Truncation::index");
  const int per_pol = l_max_ * (l_max_ + 2);
  Polarization P = i < per_pol ? Polarization::M : Polarization::N;
  int k = i % per_pol;
  // offset of block l within one polarization: sum_{j<l} (2j+1) = l^2 - 1 (starting at l=1)
  int l = 1;
  while (k >= 2 * l + 1) {
    k -= 2 * l + 1;
    ++l;
  }
  return {P, l, k - l};
}

int Truncation::position(const PartialWaveIndex& mu) const {
  if (mu.l < 1 || mu.l > l_max_ || std::abs(mu.m) > mu.l)
    throw std::out_of_range("Truncation::position");
  const int per_pol = l_max_ * (l_max_ + 2);
  int base = mu.P == Polarization::M ? 0 : per_pol;
  return base + (mu.l * mu.l - 1) + (mu.m + mu.l);
}

double translation_coef_a(int l, int m) { return double(m) / (double(l) * (l + 1)); }

double translation_coef_b(int l, int m) {
  double num = double(l) * (l + 2) * (l - m + 1) * (l + m + 1);
  double den = (2.0 * l + 1) * (2.0 * l + 3);
  return std::sqrt(num / den) / (l + 1);
}

Eigen::MatrixXcd p_z_matrix(const Truncation& trunc, double omega) {
  if (omega <= 0.0) throw std::domain_error("p_z_matrix: requires omega > 0");
  const int n = trunc.size();
  Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(n, n);
  const double woc = omega / c_light;
  for (int i = 0; i < n; ++i) {
    const auto mu = trunc.index(i);
    for (int j = 0; j < n; ++j) {
      const auto nu = trunc.index(j);
      if (mu.m != nu.m) continue;
      cdouble v = 0.0;
      if (mu.P != nu.P && mu.l == nu.l) v += cdouble(0.0, 1.0) * translation_coef_a(mu.l, mu.m);
      if (mu.P == nu.P) {
        if (nu.l == mu.l + 1) v -= translation_coef_b(mu.l, mu.m);
        if (nu.l + 1 == mu.l) v += translation_coef_b(nu.l, mu.m);
      }
      if (v != 0.0) P(i, j) = -woc * v;
    }
  }
  return P;
}

namespace {

// Shared kernel for U and V. Matrix element between row (P,l,m) and column
// (P',l',m'), with the translation direction fixed so that the regular
// variant satisfies V(d) = 1 - d p_z + O(d^2):
//   sum_nu [ (l(l+1)+l'(l'+1)-nu(nu+1))/2 d_{PP'} + i m d w/c (1-d_{PP'}) ]
//          * (-1)^m i^{l-l'-nu} (2nu+1)
//          * sqrt( (2l+1)(2l'+1) / (l(l+1)l'(l'+1)) )
//          * 3j(l,l',nu;0,0,0) 3j(l,l',nu;m,-m,0) z_nu(d w/c)
Eigen::MatrixXcd translation_matrix(double d, double omega, const Truncation& trunc,
                                    bool outgoing) {
  if (omega <= 0.0) throw std::domain_error("translation_matrix: requires omega > 0");
  if (outgoing && d <= 0.0)
    throw std::domain_error("outgoing_translation_matrix: requires d > 0 (Hankel singular)");
  if (!outgoing && d < 0.0)
    throw std::domain_error("regular_translation_matrix: requires d >= 0");
  const int n = trunc.size();
  const double x = d * omega / c_light;
  // radial functions for all nu up to 2 l_max
  std::vector<cdouble> z(2 * trunc.l_max() + 1);
  for (int nu = 0; nu <= 2 * trunc.l_max(); ++nu)
    z[nu] = outgoing ? spherical_hankel1(nu, x) : spherical_bessel_j(nu, cdouble(x, 0.0));
  const cdouble iu(0.0, 1.0);
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const auto mu = trunc.index(i);
    const int l = mu.l, m = mu.m;
    for (int j = 0; j < n; ++j) {
      const auto nu_idx = trunc.index(j);
      if (nu_idx.m != m) continue;
      const int lp = nu_idx.l;
      const double norm =
          std::sqrt((2.0 * l + 1) * (2.0 * lp + 1) / (double(l) * (l + 1) * lp * (lp + 1)));
      cdouble sum = 0.0;
      for (int nu = std::abs(l - lp); nu <= l + lp; ++nu) {
        double w3a = wigner3j(l, lp, nu, 0, 0, 0);
        if (w3a == 0.0) continue;
        double w3b = wigner3j(l, lp, nu, m, -m, 0);
        if (w3b == 0.0) continue;
        cdouble weight = mu.P == nu_idx.P
                             ? cdouble((l * (l + 1.0) + lp * (lp + 1.0) - nu * (nu + 1.0)) / 2.0, 0.0)
                             : iu * double(m) * d * omega / c_light;
        // i^{l - l' - nu} on the principal branch
        int e = ((l - lp - nu) % 4 + 4) % 4;
        static const cdouble ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        double sign_m = (m % 2 == 0) ? 1.0 : -1.0;
        sum += weight * sign_m * ipow[e] * (2.0 * nu + 1.0) * w3a * w3b * z[nu];
      }
      M(i, j) = norm * sum;
    }
  }
  return M;
}

}  // namespace

Eigen::MatrixXcd regular_translation_matrix(double d, double omega, const Truncation& trunc) {
  return translation_matrix(d, omega, trunc, false);
}

Eigen::MatrixXcd outgoing_translation_matrix(double d, double omega, const Truncation& trunc) {
  return translation_matrix(d, omega, trunc, true);
}

namespace {

// sqrt((-1)^m) on the principal branch: 1 for even m, i for odd m.
cdouble sqrt_minus_one_pow(int m) {
  return (m % 2 == 0) ? cdouble(1.0, 0.0) : cdouble(0.0, 1.0);
}

struct AngularFunctions {
  cdouble Y;    // Y_l^m(theta, phi)
  cdouble pi;   // m Y / sin(theta)
  cdouble tau;  // dY/dtheta
};

// Y_l^m and the Mie-type angular functions, Condon-Shortley phase,
// Y_{l,-m} = (-1)^m conj(Y_{l,m}).
AngularFunctions angular_functions(int l, int m, double cos_theta, double phi) {
  using specfun::assoc_legendre;
  using specfun::log_factorial;
  const int ma = std::abs(m);
  const double st = std::sqrt(std::max(0.0, 1.0 - cos_theta * cos_theta));
  const double K =
      std::sqrt((2.0 * l + 1) / (4.0 * pi) * std::exp(log_factorial(l - ma) - log_factorial(l + ma)));
  double P, Pos, dPdth;  // P_l^{|m|}, P/sin(theta), dP/dtheta
  if (st < 1e-12) {
    // poles: P_l^0 = (+-1)^l, tangential functions survive only for |m| = 1
    const double par = (cos_theta > 0.0) ? 1.0 : ((l % 2 == 0) ? 1.0 : -1.0);
    if (ma == 0) {
      P = par;
      Pos = 0.0;
      dPdth = 0.0;
    } else if (ma == 1) {
      P = 0.0;
      const double lim = -0.5 * l * (l + 1.0);  // P_l^1/sin at theta=0 (CS phase)
      Pos = (cos_theta > 0.0) ? lim : ((l % 2 == 0) ? -lim : lim);
      dPdth = Pos * cos_theta;  // tau = pi/m * cos at the poles for |m|=1
    } else {
      P = Pos = dPdth = 0.0;
    }
  } else {
    P = assoc_legendre(l, ma, cos_theta);
    Pos = P / st;
    const double Pl1 = (l - 1 >= ma) ? assoc_legendre(l - 1, ma, cos_theta) : 0.0;
    dPdth = (l * cos_theta * P - (l + ma) * Pl1) / st;
  }
  const cdouble eimp = std::polar(1.0, m * phi);
  AngularFunctions f;
  if (m >= 0) {
    f.Y = K * P * eimp;
    f.pi = double(m) * K * Pos * eimp;
    f.tau = K * dPdth * eimp;
  } else {
    const double s = (ma % 2 == 0) ? 1.0 : -1.0;
    f.Y = s * K * P * eimp;
    f.pi = double(m) * s * K * Pos * eimp;
    f.tau = s * K * dPdth * eimp;
  }
  return f;
}

}  // namespace

Eigen::Vector3cd evaluate_regular_wave(const PartialWaveIndex& mu, double omega,
                                       const Eigen::Vector3d& r) {
  if (omega <= 0.0) throw std::domain_error("evaluate_regular_wave: requires omega > 0");
  const double k = omega / c_light;
  const double rr = r.norm();
  const cdouble pref = sqrt_minus_one_pow(mu.m) * std::sqrt(omega / c_light);
  const cdouble iu(0.0, 1.0);

  if (rr == 0.0) {
    // j_l(0) = 0 for l >= 1 kills M waves; N waves survive only at l = 1
    // (j_1(x)/x -> 1/3, [x j_1]'/x -> 2/3).
    if (mu.P == Polarization::N && mu.l == 1) {
      if (mu.m == 0) return pref / std::sqrt(6.0 * pi) * Eigen::Vector3cd(0.0, 0.0, 1.0);
      const double s = mu.m > 0 ? -1.0 : 1.0;
      return pref * s / std::sqrt(12.0 * pi) * Eigen::Vector3cd(1.0, iu * double(mu.m), 0.0);
    }
    return Eigen::Vector3cd::Zero();
  }

  const double ct = r.z() / rr;
  const double phi = std::atan2(r.y(), r.x());
  const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
  const Eigen::Vector3d rhat = r / rr;
  const Eigen::Vector3d that(ct * std::cos(phi), ct * std::sin(phi), -st);
  const Eigen::Vector3d phat(-std::sin(phi), std::cos(phi), 0.0);

  const auto ang = angular_functions(mu.l, mu.m, ct, phi);
  const double x = k * rr;
  const double sq = std::sqrt(double(mu.l) * (mu.l + 1));
  const cdouble jl = spherical_bessel_j(mu.l, cdouble(x, 0.0));

  // X_lm = (-pi that - i tau phat)/sq;  rhat x X_lm = (i tau that - pi phat)/sq
  if (mu.P == Polarization::M) {
    Eigen::Vector3cd X = (-ang.pi * that.cast<cdouble>() - iu * ang.tau * phat.cast<cdouble>()) / sq;
    return pref * (-iu) * jl * X;
  }
  const cdouble psi_prime = specfun::riccati_derivative(specfun::RadialKind::Bessel, mu.l, x);
  Eigen::Vector3cd radial = sq * (jl / x) * ang.Y * rhat.cast<cdouble>();
  Eigen::Vector3cd rxX = (iu * ang.tau * that.cast<cdouble>() - ang.pi * phat.cast<cdouble>()) / sq;
  return pref * (radial - iu * (psi_prime / x) * rxX);
}

}  // namespace casprop
