#include "casprop/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "casprop/constants.hpp"
#include "casprop/specfun.hpp"

namespace casprop {

namespace {

// 15-point Gauss-Legendre on [-1, 1].
constexpr int kGL = 15;
constexpr double kGLx[kGL] = {
    -0.9879925180204854, -0.9372733924007060, -0.8482065834104272, -0.7244177313601701,
    -0.5709721726085388, -0.3941513470775634, -0.2011940939974345, 0.0,
    0.2011940939974345,  0.3941513470775634,  0.5709721726085388,  0.7244177313601701,
    0.8482065834104272,  0.9372733924007060,  0.9879925180204854};
constexpr double kGLw[kGL] = {
    0.0307532419961173, 0.0703660474881081, 0.1071592204671719, 0.1395706779261543,
    0.1662692058169939, 0.1861610000155622, 0.1984314853271116, 0.2025782419255613,
    0.1984314853271116, 0.1861610000155622, 0.1662692058169939, 0.1395706779261543,
    0.1071592204671719, 0.0703660474881081, 0.0307532419961173};

double gl15(const std::function<double(double)>& g, double a, double b) {
  const double h = 0.5 * (b - a), c = 0.5 * (a + b);
  double s = 0.0;
  for (int i = 0; i < kGL; ++i) s += kGLw[i] * g(c + h * kGLx[i]);
  return h * s;
}

struct Panel {
  double a, b;
  double value;   // gl15 on [a, b]
  double refined; // gl15 on halves
  double error;   // |refined - value|
};

Panel make_panel(const std::function<double(double)>& g, double a, double b) {
  Panel p;
  p.a = a;
  p.b = b;
  p.value = gl15(g, a, b);
  const double mid = 0.5 * (a + b);
  p.refined = gl15(g, a, mid) + gl15(g, mid, b);
  p.error = std::abs(p.refined - p.value);
  return p;
}

}  // namespace

QuadratureResult adaptive_integral(const std::function<double(double)>& g, double a, double b,
                                   double rel_tol, int max_panels,
                                   const std::vector<double>& break_points) {
  if (!(b > a)) throw std::invalid_argument("adaptive_integral: empty interval");
  std::set<double> edges{a, b};
  for (double p : break_points)
    if (p > a && p < b) edges.insert(p);

  // worst-error-first refinement; ties broken by the left endpoint so the
  // refinement path (and thus the result) is deterministic
  auto cmp = [](const Panel& x, const Panel& y) {
    if (x.error != y.error) return x.error > y.error;
    return x.a < y.a;
  };
  std::multiset<Panel, decltype(cmp)> queue(cmp);
  double sum = 0.0, err = 0.0, abssum = 0.0;
  auto insert_panel = [&](Panel p) {
    sum += p.refined;
    err += p.error;
    abssum += std::abs(p.refined);
    queue.insert(std::move(p));
  };
  double prev = a;
  for (auto it = std::next(edges.begin()); it != edges.end(); ++it) {
    insert_panel(make_panel(g, prev, *it));
    prev = *it;
  }

  auto converged = [&] {
    const double scale = std::max(std::abs(sum), 1e-3 * abssum);
    return err <= rel_tol * scale || err == 0.0;
  };

  while (int(queue.size()) < max_panels && !converged()) {
    auto worst = queue.begin();
    if (worst->error <= 0.0) break;
    Panel w = *worst;
    queue.erase(worst);
    sum -= w.refined;
    err -= w.error;
    abssum -= std::abs(w.refined);
    const double mid = 0.5 * (w.a + w.b);
    insert_panel(make_panel(g, w.a, mid));
    insert_panel(make_panel(g, mid, w.b));
  }

  if (!converged()) {
    auto worst = *queue.begin();
    throw QuadratureError("integrand too sharp - narrow resonance detected", worst.a, worst.b);
  }

  // deterministic compensated reduction in ascending interval order
  std::vector<Panel> panels(queue.begin(), queue.end());
  std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  double total = 0.0, comp = 0.0, errsum = 0.0;
  for (const auto& p : panels) {
    const double y = p.refined - comp;
    const double t = total + y;
    comp = (t - total) - y;
    total = t;
    errsum += p.error;
  }
  return {total, errsum, int(panels.size())};
}

QuadratureResult thermal_integral(const std::function<double(double)>& f, double T,
                                  ThermalWeight weight, const QuadratureSpec& spec,
                                  const std::vector<double>& seed_omegas) {
  if (T < 0.0) throw std::domain_error("thermal_integral: T >= 0 required");
  if (T == 0.0) return {0.0, 0.0, 0};
  const double w_of_x = k_boltzmann * T / hbar;  // omega = x * k_B T / hbar

  auto integrand = [&](double x) {
    const double omega = x * w_of_x;
    const double wgt = weight == ThermalWeight::Bose
                           ? specfun::bose_weight(omega, T)
                           : T * specfun::bose_weight_dT(omega, T);
    if (wgt == 0.0) return 0.0;
    return f(omega) * wgt;
  };

  std::vector<double> breaks;
  for (double w0 : seed_omegas) {
    const double x0 = w0 / w_of_x;
    if (x0 <= spec.x_min || x0 >= spec.x_max) continue;
    breaks.push_back(x0);
    // enclose each seeded feature in a narrow window so the first refinement
    // pass already resolves it
    for (double frac : {0.9, 0.95, 0.99, 1.01, 1.05, 1.1}) {
      const double xb = x0 * frac;
      if (xb > spec.x_min && xb < spec.x_max) breaks.push_back(xb);
    }
  }
  // generic scale points of the Bose weight
  for (double xb : {1e-4, 1e-2, 0.1, 1.0, 5.0, 15.0, 30.0})
    if (xb > spec.x_min && xb < spec.x_max) breaks.push_back(xb);

  auto res = adaptive_integral(integrand, spec.x_min, spec.x_max, spec.rel_tol, spec.max_panels,
                               breaks);
  res.value *= w_of_x;  // d omega = (k_B T / hbar) dx
  res.error_estimate *= w_of_x;
  return res;
}

}  // namespace casprop
