#include "casprop/scattering.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "casprop/constants.hpp"
#include "casprop/specfun.hpp"

namespace casprop {

using specfun::RadialKind;
using specfun::riccati_derivative;
using specfun::spherical_bessel_j;
using specfun::spherical_hankel1;

cdouble mie_coefficient(Polarization pol, int l, double radius, cdouble eps, cdouble mu,
                        double omega) {
  if (radius <= 0.0 || omega <= 0.0)
    throw std::domain_error("mie_coefficient: requires R > 0 and omega > 0");
  if (l < 1) throw std::domain_error("mie_coefficient: l >= 1");
  if (pol == Polarization::N) std::swap(eps, mu);  // T^N from T^M by eps <-> mu
  const double xs = radius * omega / c_light;
  cdouble n_idx = std::sqrt(eps * mu);
  if (n_idx.imag() < 0.0) n_idx = -n_idx;  // decaying into the absorber
  const cdouble xt = n_idx * xs;
  const cdouble j_out = spherical_bessel_j(l, cdouble(xs, 0.0));
  const cdouble h_out = spherical_hankel1(l, xs);
  const cdouble j_in = spherical_bessel_j(l, xt);
  const cdouble dj_out = riccati_derivative(RadialKind::Bessel, l, cdouble(xs, 0.0));
  const cdouble dh_out = riccati_derivative(RadialKind::Hankel, l, cdouble(xs, 0.0));
  const cdouble dj_in = riccati_derivative(RadialKind::Bessel, l, xt);
  return -(mu * j_in * dj_out - j_out * dj_in) / (mu * j_in * dh_out - h_out * dj_in);
}

TMatrixBlock mie_t_matrix(double radius, cdouble eps, cdouble mu, double omega,
                          const Truncation& trunc) {
  TMatrixBlock T{omega, trunc, Eigen::MatrixXcd::Zero(trunc.size(), trunc.size())};
  for (int l = 1; l <= trunc.l_max(); ++l) {
    const cdouble tM = mie_coefficient(Polarization::M, l, radius, eps, mu, omega);
    const cdouble tN = mie_coefficient(Polarization::N, l, radius, eps, mu, omega);
    for (int m = -l; m <= l; ++m) {
      const int iM = trunc.position({Polarization::M, l, m});
      const int iN = trunc.position({Polarization::N, l, m});
      T.entries(iM, iM) = tM;
      T.entries(iN, iN) = tN;
    }
  }
  return T;
}

TMatrixBlock dipole_t_from_polarizability(const Eigen::Matrix3cd& alpha, double omega) {
  if (omega <= 0.0) throw std::domain_error("dipole_t_from_polarizability: requires omega > 0");
  const Truncation trunc(1);
  TMatrixBlock T{omega, trunc, Eigen::MatrixXcd::Zero(trunc.size(), trunc.size())};
  const double k = omega / c_light;
  const cdouble iu(0.0, 1.0);
  Eigen::Vector3cd base[3];
  for (int m = -1; m <= 1; ++m)
    base[m + 1] = evaluate_regular_wave({Polarization::N, 1, m}, omega, Eigen::Vector3d::Zero());
  for (int m = -1; m <= 1; ++m) {
    for (int mp = -1; mp <= 1; ++mp) {
      // angular integral over constant fields = 4 pi
      cdouble val = iu * k * k * 4.0 * pi *
                    (base[-m + 1].transpose() * alpha * base[mp + 1]).value();
      T.entries(trunc.position({Polarization::N, 1, m}), trunc.position({Polarization::N, 1, mp})) =
          val;
    }
  }
  return T;
}

namespace {

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double xi = std::cos(pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * xi * p1 - j * p2) / (j + 1);
      }
      pp = n * (xi * p0 - p1) / (xi * xi - 1.0);
      double dx = p0 / pp;
      xi -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    x[i] = -xi;
    x[n - 1 - i] = xi;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - xi * xi) * pp * pp);
  }
}

Eigen::MatrixXcd born_entries(const JanusSphere& g, double omega, const Truncation& trunc,
                              int nr, int nth, int nph) {
  const int n = trunc.size();
  const double k = omega / c_light;

  std::vector<double> xr, wr;
  gauss_legendre(nr, xr, wr);
  std::vector<double> xt, wt;
  gauss_legendre(nth / 2, xt, wt);

  // node list: radius x cos(theta) x phi, permittivity step on the equator
  struct Node {
    Eigen::Vector3d r;
    double weight;   // includes r^2 dr dcos dphi
    cdouble deps;    // eps(r) - 1
  };
  std::vector<Node> nodes;
  nodes.reserve(size_t(nr) * nth * nph);
  const double dphi = 2.0 * pi / nph;
  for (int ir = 0; ir < nr; ++ir) {
    const double r = 0.5 * g.radius * (xr[ir] + 1.0);
    const double wrad = 0.5 * g.radius * wr[ir] * r * r;
    for (int hemi = 0; hemi < 2; ++hemi) {
      for (int it = 0; it < nth / 2; ++it) {
        const double ct = hemi == 0 ? 0.5 * (xt[it] - 1.0) : 0.5 * (xt[it] + 1.0);
        const double wct = 0.5 * wt[it];
        const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
        const cdouble deps = (hemi == 0 ? g.eps_lower : g.eps_upper) - 1.0;
        for (int ip = 0; ip < nph; ++ip) {
          const double phi = dphi * ip;
          nodes.push_back({Eigen::Vector3d(r * st * std::cos(phi), r * st * std::sin(phi), r * ct),
                           wrad * wct * dphi, deps});
        }
      }
    }
  }

  // fields at all nodes: F(idx, 3*node); T = i k^2 * F_sigma * diag(w deps) * F^T
  const int nn = int(nodes.size());
  Eigen::MatrixXcd F(n, 3 * nn);
  for (int i = 0; i < n; ++i) {
    const auto mu = trunc.index(i);
    for (int a = 0; a < nn; ++a)
      F.block<1, 3>(i, 3 * a) = evaluate_regular_wave(mu, omega, nodes[a].r).transpose();
  }
  Eigen::MatrixXcd Fw = F;
  for (int a = 0; a < nn; ++a) {
    const cdouble s = nodes[a].weight * nodes[a].deps;
    Fw.middleCols(3 * a, 3) *= s;
  }
  // row permutation sigma: (P,l,m) -> (P,l,-m)
  Eigen::VectorXi perm(n);
  for (int i = 0; i < n; ++i) perm(i) = trunc.position(trunc.index(i).sigma());
  Eigen::MatrixXcd Fsig(n, 3 * nn);
  for (int i = 0; i < n; ++i) Fsig.row(i) = Fw.row(perm(i));
  return cdouble(0.0, 1.0) * k * k * (Fsig * F.transpose());
}

}  // namespace

TMatrixBlock born_t_matrix(const JanusSphere& geometry, double omega, const Truncation& trunc,
                           const BornQuadrature& quad) {
  if (geometry.radius <= 0.0 || omega <= 0.0)
    throw std::domain_error("born_t_matrix: requires R > 0 and omega > 0");
  if (quad.n_radial < 2 || quad.n_polar < 4 || quad.n_azimuthal < 4)
    throw std::invalid_argument("born_t_matrix: quadrature orders too small");
  Eigen::MatrixXcd E =
      born_entries(geometry, omega, trunc, quad.n_radial, quad.n_polar, quad.n_azimuthal);
  if (quad.check_convergence) {
    Eigen::MatrixXcd E2 = born_entries(geometry, omega, trunc, quad.n_radial + 6,
                                       quad.n_polar + 8, quad.n_azimuthal + 16);
    const double scale = E2.cwiseAbs().maxCoeff();
    const double change = (E2 - E).cwiseAbs().maxCoeff();
    if (scale > 0.0 && change > quad.rel_tol * scale)
      throw std::runtime_error("born_t_matrix: increase quadrature order (change " +
                               std::to_string(change / scale) + ")");
    E = std::move(E2);
  }
  return {omega, trunc, std::move(E)};
}

double check_t_symmetry(const TMatrixBlock& T) {
  const int n = T.trunc.size();
  const double scale = T.entries.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto mu = T.trunc.index(i);
    for (int j = 0; j < n; ++j) {
      const auto nu = T.trunc.index(j);
      const int si = T.trunc.position(nu.sigma());
      const int sj = T.trunc.position(mu.sigma());
      worst = std::max(worst, std::abs(T.entries(i, j) - T.entries(si, sj)) / scale);
    }
  }
  return worst;
}

}  // namespace casprop
