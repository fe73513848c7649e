// Command-line front end: scenario configuration via JSON + flags, parameter
// sweeps, and figure-data emission as deterministic CSV.
//
// Exit codes: 0 success, 1 invalid configuration, 2 quadrature failure.
// Validity warnings go to stderr, never into the exit code.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "casprop/constants.hpp"
#include "casprop/forces.hpp"
#include "casprop/thermo.hpp"

using json = nlohmann::json;
using namespace casprop;

namespace {

constexpr const char* kVersion = "casprop 1.0.0";

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

int thread_budget() {
  if (const char* env = std::getenv("CASIMIR_PROPEL_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : int(hw);
}

// ordered parallel map: results land by index, output order is input order
template <typename F>
std::vector<double> parallel_map(int n, int threads, F&& f) {
  std::vector<double> out(n);
  threads = std::min(threads, n);
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) out[i] = f(i);
    });
  for (auto& th : pool) th.join();
  return out;
}

DielectricModel parse_material(const json& j) {
  if (j.is_string()) return preset_model(j.get<std::string>());
  if (j.contains("eps")) {
    auto e = j.at("eps");
    if (e.is_number()) return DielectricModel::constant(e.get<double>());
    return DielectricModel::constant(cdouble(e.at(0).get<double>(), e.at(1).get<double>()));
  }
  if (j.contains("lorentz")) {
    const auto& l = j.at("lorentz");
    if (l.is_array()) {
      std::vector<LorentzOscillator> osc;
      for (const auto& o : l)
        osc.push_back({o.at("C").get<double>(), o.at("omega0").get<double>(),
                       o.at("gamma").get<double>()});
      return DielectricModel::lorentz_sum(osc);
    }
    return DielectricModel::lorentz(l.at("C").get<double>(), l.at("omega0").get<double>(),
                                    l.at("gamma").get<double>());
  }
  throw std::invalid_argument("material must be a preset name or {eps|lorentz} object");
}

QuadratureSpec parse_quadrature(const json& cfg) {
  QuadratureSpec q;
  if (cfg.contains("quadrature")) {
    const auto& j = cfg.at("quadrature");
    q.rel_tol = j.value("rel_tol", q.rel_tol);
    q.x_min = j.value("x_min", q.x_min);
    q.x_max = j.value("x_max", q.x_max);
    q.max_panels = j.value("max_panels", q.max_panels);
  }
  return q;
}

SpheroidSpec parse_spheroid(const json& cfg) {
  const auto& g = cfg.at("geometry");
  return {g.at("r_par").get<double>(), g.at("r_perp").get<double>(),
          parse_material(cfg.at("materials").at("particle"))};
}

ThermalScene parse_scene(const json& cfg) {
  const auto& s = cfg.at("scene");
  return {s.at("t_particle").get<double>(), s.value("t_plate", 0.0), s.at("d").get<double>(),
          parse_material(cfg.at("materials").at("plate"))};
}

Orientation parse_orientation(const json& cfg) {
  if (!cfg.contains("orientation")) return {pi / 4.0, 0.0};
  const auto& o = cfg.at("orientation");
  Orientation out{o.value("theta", pi / 4.0), o.value("phi", 0.0)};
  if (out.theta < 0.0 || out.theta > pi || out.phi < 0.0 || out.phi >= 2.0 * pi)
    throw std::invalid_argument("orientation: theta in [0,pi], phi in [0,2pi) required");
  return out;
}

class CsvWriter {
 public:
  CsvWriter(const json& resolved, const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::invalid_argument("cannot open output path: " + path);
    }
    std::ostream& os = stream();
    os << "# " << kVersion << "\n";
    os << "# config " << resolved.dump() << "\n";
    os << "# constants hbar=" << fmt(hbar) << " k_B=" << fmt(k_boltzmann)
       << " c=" << fmt(c_light) << " g=" << fmt(g_standard) << "\n";
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[64];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    os << "# generated-at " << buf << "\n";
  }

  void header(const std::vector<std::string>& cols) {
    std::ostream& os = stream();
    for (size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
    os << "\n";
  }

  void row(const std::vector<double>& vals) {
    std::ostream& os = stream();
    for (size_t i = 0; i < vals.size(); ++i) os << (i ? "," : "") << fmt(vals[i]);
    os << "\n";
  }

 private:
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  std::ofstream file_;
};

void warn_validity(const NearFieldValidity& v) {
  if (!v.satisfied)
    std::cerr << "warning: outside near-field window (R/d = " << v.r_over_d
              << ", d/lambda_T = " << v.d_over_lambda_t << "; both should be < 0.2)\n";
}

// ---- scenarios -----------------------------------------------------------

ForceResult spheroid_lateral_force(const SpheroidSpec& spec, const Orientation& o,
                                   const ThermalScene& scene, const QuadratureSpec& q) {
  auto fn = [&](double T) {
    ThermalScene s = scene;
    s.T_particle = T;
    return lateral_force_spheroid(spec, o, s, q);
  };
  auto F = two_temperature_force(fn, scene.T_particle, scene.T_plate);
  F.validity = near_field_validity(spec.r_par, scene.d, scene.T_particle);
  return F;
}

int run_spheroid_lateral(const json& cfg) {
  const auto spec = parse_spheroid(cfg);
  const auto scene = parse_scene(cfg);
  const auto o = parse_orientation(cfg);
  const auto q = parse_quadrature(cfg);
  const double rho = cfg.value("density", 3210.0);

  auto F = spheroid_lateral_force(spec, o, scene, q);
  warn_validity(F.validity);
  const double fg = rho * spec.volume() * g_standard;

  CsvWriter out(cfg, cfg.value("output", json::object()).value("path", ""));
  out.header({"force_newton", "force_over_gravity", "quadrature_error_newton", "r_over_d",
              "d_over_lambda_t"});
  out.row({F.value, F.value / fg, F.quadrature_error, F.validity.r_over_d,
           F.validity.d_over_lambda_t});
  return 0;
}

int run_janus_force(const json& cfg) {
  const double R = cfg.at("geometry").at("radius").get<double>();
  const auto e1 = parse_material(cfg.at("materials").at("lower"));
  const auto e2 = parse_material(cfg.at("materials").at("upper"));
  const double T = cfg.at("scene").at("t_particle").get<double>();
  const double Tenv = cfg.at("scene").value("t_env", 0.0);
  const auto q = parse_quadrature(cfg);

  auto fn = [&](double temp) { return janus_dilute_force(e1, e2, R, temp, q); };
  auto F = two_temperature_force(fn, T, Tenv);

  CsvWriter out(cfg, cfg.value("output", json::object()).value("path", ""));
  out.header({"force_newton", "quadrature_error_newton"});
  out.row({F.value, F.quadrature_error});
  return 0;
}

int run_sweep(const json& cfg) {
  const auto& sw = cfg.at("sweep");
  const std::string param = sw.at("param").get<std::string>();
  const double from = sw.at("from").get<double>();
  const double to = sw.at("to").get<double>();
  const int points = sw.at("points").get<int>();
  if (points < 2 || !(to > from)) throw std::invalid_argument("sweep: need points >= 2, to > from");

  const auto base_spec = parse_spheroid(cfg);
  const auto base_scene = parse_scene(cfg);
  const auto base_o = parse_orientation(cfg);
  const auto q = parse_quadrature(cfg);
  const double rho = cfg.value("density", 3210.0);

  std::vector<double> xs(points);
  for (int i = 0; i < points; ++i) xs[i] = from + (to - from) * i / (points - 1);

  auto configure = [&](int i, SpheroidSpec& spec, ThermalScene& scene, Orientation& o) {
    if (param == "r_perp") spec.r_perp = xs[i];
    else if (param == "r_par") spec.r_par = xs[i];
    else if (param == "d") scene.d = xs[i];
    else if (param == "theta") o.theta = xs[i];
    else if (param == "phi") o.phi = xs[i];
    else if (param == "t_particle") scene.T_particle = xs[i];
    else throw std::invalid_argument("sweep: unknown param " + param);
  };
  {  // validate the parameter name before spawning workers
    SpheroidSpec s = base_spec;
    ThermalScene sc = base_scene;
    Orientation o = base_o;
    configure(0, s, sc, o);
  }

  auto values = parallel_map(points, thread_budget(), [&](int i) {
    SpheroidSpec spec = base_spec;
    ThermalScene scene = base_scene;
    Orientation o = base_o;
    configure(i, spec, scene, o);
    return spheroid_lateral_force(spec, o, scene, q).value;
  });

  CsvWriter out(cfg, cfg.value("output", json::object()).value("path", ""));
  out.header({param, "force_newton", "force_over_gravity"});
  for (int i = 0; i < points; ++i) {
    SpheroidSpec spec = base_spec;
    ThermalScene scene = base_scene;
    Orientation o = base_o;
    configure(i, spec, scene, o);
    const double fg = rho * spec.volume() * g_standard;
    out.row({xs[i], values[i], values[i] / fg});
  }
  return 0;
}

int run_overlap(const json& cfg) {
  const auto spec = parse_spheroid(cfg);
  const auto& ax = cfg.at("axis");  // omega/c in rad/um, converted internally
  const double from = ax.at("from_rad_per_um").get<double>();
  const double to = ax.at("to_rad_per_um").get<double>();
  const int points = ax.value("points", 400);

  CsvWriter out(cfg, cfg.value("output", json::object()).value("path", ""));
  out.header({"omega_over_c_rad_per_um", "overlap_m6"});
  for (int i = 0; i < points; ++i) {
    const double woc = from + (to - from) * i / (points - 1);
    out.row({woc, overlap_factor(spec, woc * 1e6 * c_light)});
  }
  return 0;
}

int run_heating(const json& cfg) {
  const auto spec = parse_spheroid(cfg);
  const auto scene = parse_scene(cfg);
  const auto o = parse_orientation(cfg);
  const auto q = parse_quadrature(cfg);

  const double dHdv = heating_derivative_spheroid(spec, o, scene, q);
  warn_validity(near_field_validity(spec.r_par, scene.d, scene.T_particle));

  CsvWriter out(cfg, cfg.value("output", json::object()).value("path", ""));
  if (cfg.contains("friction")) {
    const double k = cfg.at("friction").at("heat_transfer").get<double>();
    const double dg = additional_friction(dHdv, k, scene.T_particle);
    out.header({"heating_derivative_newton", "additional_friction_newton_s_per_m"});
    out.row({dHdv, dg});
  } else {
    out.header({"heating_derivative_newton"});
    out.row({dHdv});
  }
  return 0;
}

int run_friction_curve(const json& cfg) {
  const auto& fr = cfg.at("friction");
  FrictionModel model{fr.at("heat_capacity").get<double>(), fr.at("heat_transfer").get<double>(),
                      fr.value("tau1", 1e-14)};
  const double gs = fr.at("gamma_std").get<double>();
  const double dg = fr.at("delta_gamma").get<double>();
  const auto& tj = fr.at("t_grid");
  const double t0 = tj.at("from").get<double>();
  const double t1 = tj.at("to").get<double>();
  const int points = tj.value("points", 121);
  if (!(t0 > 0.0) || !(t1 > t0)) throw std::invalid_argument("friction: need 0 < from < to");

  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i) grid[i] = t0 * std::pow(t1 / t0, double(i) / (points - 1));
  auto curve = friction_curve(gs, dg, model, grid);

  CsvWriter out(cfg, cfg.value("output", json::object()).value("path", ""));
  out.header({"time_s", "gamma_newton_s_per_m"});
  for (auto& [t, gval] : curve) out.row({t, gval});
  return 0;
}

int run_mie(const json& cfg) {
  const double R = cfg.at("geometry").at("radius").get<double>();
  const auto mat = parse_material(cfg.at("materials").at("particle"));
  const int l_max = cfg.value("l_max", 3);
  const auto& ax = cfg.at("axis");
  const double from = ax.at("from_rad_per_um").get<double>();
  const double to = ax.at("to_rad_per_um").get<double>();
  const int points = ax.value("points", 200);

  CsvWriter out(cfg, cfg.value("output", json::object()).value("path", ""));
  std::vector<std::string> cols{"omega_over_c_rad_per_um"};
  for (int l = 1; l <= l_max; ++l)
    for (const char* p : {"M", "N"}) {
      cols.push_back(std::string("re_T") + p + std::to_string(l));
      cols.push_back(std::string("im_T") + p + std::to_string(l));
    }
  out.header(cols);
  for (int i = 0; i < points; ++i) {
    const double woc = from + (to - from) * i / (points - 1);
    const double omega = woc * 1e6 * c_light;
    std::vector<double> row{woc};
    for (int l = 1; l <= l_max; ++l)
      for (auto pol : {Polarization::M, Polarization::N}) {
        const cdouble t =
            mie_coefficient(pol, l, R, mat.permittivity(omega), mat.permeability(), omega);
        row.push_back(t.real());
        row.push_back(t.imag());
      }
    out.row(row);
  }
  return 0;
}

int run_fresnel(const json& cfg) {
  const auto mat = parse_material(cfg.at("materials").at("plate"));
  const double omega = cfg.at("scene").at("omega").get<double>();
  const auto& ax = cfg.at("axis");  // k_perp in units of omega/c
  const double from = ax.value("from_k_over_k0", 0.0);
  const double to = ax.value("to_k_over_k0", 5.0);
  const int points = ax.value("points", 200);

  const cdouble eps = mat.permittivity(omega);
  const cdouble mu = mat.permeability();
  CsvWriter out(cfg, cfg.value("output", json::object()).value("path", ""));
  out.header({"k_perp_over_k0", "re_rN", "im_rN", "re_rM", "im_rM"});
  for (int i = 0; i < points; ++i) {
    const double frac = from + (to - from) * i / (points - 1);
    const double kp = frac * omega / c_light;
    const cdouble rN = fresnel_reflection(Polarization::N, kp, omega, eps, mu);
    const cdouble rM = fresnel_reflection(Polarization::M, kp, omega, eps, mu);
    out.row({frac, rN.real(), rN.imag(), rM.real(), rM.imag()});
  }
  return 0;
}

// ---- figure data ---------------------------------------------------------

int emit_fig3(const json& cfg) {
  const std::vector<double> ratios{0.2, 0.5, 0.8};
  const double req = 20e-9;  // volume-fixing equivalent radius; output is normalized
  const int points = 1200;
  std::vector<std::vector<double>> curves(ratios.size(), std::vector<double>(points));
  double maxabs = 0.0;
  for (size_t k = 0; k < ratios.size(); ++k) {
    const double r_par = req / std::cbrt(ratios[k] * ratios[k]);
    SpheroidSpec spec{r_par, ratios[k] * r_par, preset_model("spheroid")};
    for (int i = 0; i < points; ++i) {
      const double woc = 0.02 + (0.06 - 0.02) * i / (points - 1);
      curves[k][i] = overlap_factor(spec, woc * 1e6 * c_light);
      maxabs = std::max(maxabs, std::abs(curves[k][i]));
    }
  }
  CsvWriter out(cfg, cfg.value("output", json::object()).value("path", ""));
  out.header({"omega_over_c_rad_per_um", "overlap_ratio_0p2", "overlap_ratio_0p5",
              "overlap_ratio_0p8"});
  for (int i = 0; i < points; ++i) {
    const double woc = 0.02 + (0.06 - 0.02) * i / (points - 1);
    out.row({woc, curves[0][i] / maxabs, curves[1][i] / maxabs, curves[2][i] / maxabs});
  }
  return 0;
}

int emit_fig45(const json& cfg, const std::string& plate_name) {
  const double r_par = 40e-9, d = 400e-9, rho = 3210.0;
  const int points = 80;
  ThermalScene scene{550.0, 300.0, d, preset_model(plate_name)};
  Orientation o{pi / 4.0, 0.0};
  QuadratureSpec q = parse_quadrature(cfg);

  std::vector<double> xs(points);
  for (int i = 0; i < points; ++i) xs[i] = (i + 1) / double(points);  // (0, 1]
  auto values = parallel_map(points, thread_budget(), [&](int i) {
    SpheroidSpec spec{r_par, xs[i] * r_par, preset_model("spheroid")};
    return spheroid_lateral_force(spec, o, scene, q).value;
  });

  CsvWriter out(cfg, cfg.value("output", json::object()).value("path", ""));
  out.header({"r_perp_over_r_par", "force_over_gravity"});
  for (int i = 0; i < points; ++i) {
    SpheroidSpec spec{r_par, xs[i] * r_par, preset_model("spheroid")};
    const double fg = rho * spec.volume() * g_standard;
    out.row({xs[i], values[i] / fg});
  }
  return 0;
}

int emit_fig7(const json& cfg) {
  // schematic two-timescale curve; no claim below tau1/10
  FrictionModel model{1e-17, 1e-12, 1e-14};  // tau2 = 1e-5 s
  const double gs = 1.0, dg = 0.5;           // normalized units
  const int points = 141;
  const double t0 = model.tau1 / 10.0, t1 = 1e-2;
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i) grid[i] = t0 * std::pow(t1 / t0, double(i) / (points - 1));
  auto curve = friction_curve(gs, dg, model, grid);
  CsvWriter out(cfg, cfg.value("output", json::object()).value("path", ""));
  out.header({"time_s", "gamma_normalized"});
  for (auto& [t, gval] : curve) out.row({t, gval});
  return 0;
}

int run_figure(const json& cfg) {
  const std::string id = cfg.at("figure").get<std::string>();
  if (id == "fig3") return emit_fig3(cfg);
  if (id == "fig4") return emit_fig45(cfg, "plate1");
  if (id == "fig5") return emit_fig45(cfg, "plate2");
  if (id == "fig7") return emit_fig7(cfg);
  throw std::invalid_argument("unknown figure id: " + id + " (use fig3|fig4|fig5|fig7)");
}

json load_and_merge_config(const std::string& path, const json& overrides) {
  json cfg = json::object();
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file: " + path);
    in >> cfg;
  }
  cfg.merge_patch(overrides);
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-equilibrium Casimir self-propulsion: forces, heating, friction"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string config_path;
  json over = json::object();

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON config file (flags override file values)");
    sub->add_option_function<std::string>(
        "--output,-o", [&](const std::string& v) { over["output"]["path"] = v; },
        "output CSV path (default stdout)");
    sub->add_option_function<double>(
        "--rel-tol", [&](double v) { over["quadrature"]["rel_tol"] = v; },
        "quadrature relative tolerance");
    sub->add_option_function<double>(
        "--x-max", [&](double v) { over["quadrature"]["x_max"] = v; },
        "dimensionless frequency cutoff");
    sub->add_option_function<int>(
        "--max-panels", [&](int v) { over["quadrature"]["max_panels"] = v; },
        "quadrature panel budget");
  };
  auto add_spheroid_opts = [&](CLI::App* sub) {
    sub->add_option_function<double>(
        "--r-par", [&](double v) { over["geometry"]["r_par"] = v; }, "parallel semi-axis (m)");
    sub->add_option_function<double>(
        "--r-perp", [&](double v) { over["geometry"]["r_perp"] = v; },
        "perpendicular semi-axis (m)");
    sub->add_option_function<std::string>(
        "--material", [&](const std::string& v) { over["materials"]["particle"] = v; },
        "particle material preset");
    sub->add_option_function<std::string>(
        "--plate", [&](const std::string& v) { over["materials"]["plate"] = v; },
        "plate material preset");
    sub->add_option_function<double>(
        "--d", [&](double v) { over["scene"]["d"] = v; }, "separation (m)");
    sub->add_option_function<double>(
        "--t-particle", [&](double v) { over["scene"]["t_particle"] = v; },
        "particle temperature (K)");
    sub->add_option_function<double>(
        "--t-plate", [&](double v) { over["scene"]["t_plate"] = v; }, "plate temperature (K)");
    sub->add_option_function<double>(
        "--theta", [&](double v) { over["orientation"]["theta"] = v; }, "tilt angle (rad)");
    sub->add_option_function<double>(
        "--phi", [&](double v) { over["orientation"]["phi"] = v; }, "azimuth (rad)");
    sub->add_option_function<double>(
        "--density", [&](double v) { over["density"] = v; },
        "mass density for gravity normalization (kg/m^3)");
  };

  auto* lat = app.add_subcommand("spheroid-lateral", "lateral force on a spheroid above a plate");
  add_common(lat);
  add_spheroid_opts(lat);

  auto* jan = app.add_subcommand("janus-force", "self-propulsion of a dilute janus sphere");
  add_common(jan);
  jan->add_option_function<double>(
      "--radius", [&](double v) { over["geometry"]["radius"] = v; }, "sphere radius (m)");
  jan->add_option_function<double>(
      "--t-particle", [&](double v) { over["scene"]["t_particle"] = v; },
      "particle temperature (K)");
  jan->add_option_function<double>(
      "--t-env", [&](double v) { over["scene"]["t_env"] = v; }, "environment temperature (K)");
  jan->add_option_function<std::vector<double>>(
         "--eps-lower",
         [&](const std::vector<double>& v) { over["materials"]["lower"]["eps"] = v; },
         "lower hemisphere permittivity: re im")
      ->expected(2);
  jan->add_option_function<std::vector<double>>(
         "--eps-upper",
         [&](const std::vector<double>& v) { over["materials"]["upper"]["eps"] = v; },
         "upper hemisphere permittivity: re im")
      ->expected(2);

  auto* swp = app.add_subcommand("sweep", "sweep one parameter of the spheroid-lateral scenario");
  add_common(swp);
  add_spheroid_opts(swp);
  swp->add_option_function<std::string>(
      "--param", [&](const std::string& v) { over["sweep"]["param"] = v; },
      "r_perp|r_par|d|theta|phi|t_particle");
  swp->add_option_function<double>(
      "--from", [&](double v) { over["sweep"]["from"] = v; }, "sweep start");
  swp->add_option_function<double>(
      "--to", [&](double v) { over["sweep"]["to"] = v; }, "sweep end");
  swp->add_option_function<int>(
      "--points", [&](int v) { over["sweep"]["points"] = v; }, "sweep points");

  auto* ovl = app.add_subcommand("overlap", "spectral overlap Im[a_par a_perp*] of a spheroid");
  add_common(ovl);
  add_spheroid_opts(ovl);
  ovl->add_option_function<double>(
      "--from-woc", [&](double v) { over["axis"]["from_rad_per_um"] = v; },
      "omega/c axis start (rad/um)");
  ovl->add_option_function<double>(
      "--to-woc", [&](double v) { over["axis"]["to_rad_per_um"] = v; },
      "omega/c axis end (rad/um)");
  ovl->add_option_function<int>(
      "--points", [&](int v) { over["axis"]["points"] = v; }, "axis points");

  auto* het = app.add_subcommand("heating", "Onsager heating derivative d<H>/dv_x");
  add_common(het);
  add_spheroid_opts(het);
  het->add_option_function<double>(
      "--heat-transfer", [&](double v) { over["friction"]["heat_transfer"] = v; },
      "heat transfer coefficient k (W/K); enables the friction column");

  auto* fri = app.add_subcommand("friction-curve", "two-timescale friction build-up");
  add_common(fri);
  fri->add_option_function<double>(
      "--gamma-std", [&](double v) { over["friction"]["gamma_std"] = v; },
      "standard friction coefficient");
  fri->add_option_function<double>(
      "--delta-gamma", [&](double v) { over["friction"]["delta_gamma"] = v; },
      "additional friction increment");
  fri->add_option_function<double>(
      "--heat-capacity", [&](double v) { over["friction"]["heat_capacity"] = v; },
      "heat capacity C (J/K)");
  fri->add_option_function<double>(
      "--heat-transfer", [&](double v) { over["friction"]["heat_transfer"] = v; },
      "heat transfer coefficient k (W/K)");
  fri->add_option_function<double>(
      "--tau1", [&](double v) { over["friction"]["tau1"] = v; }, "electronic timescale (s)");
  fri->add_option_function<double>(
      "--t-from", [&](double v) { over["friction"]["t_grid"]["from"] = v; }, "grid start (s)");
  fri->add_option_function<double>(
      "--t-to", [&](double v) { over["friction"]["t_grid"]["to"] = v; }, "grid end (s)");
  fri->add_option_function<int>(
      "--points", [&](int v) { over["friction"]["t_grid"]["points"] = v; }, "grid points");

  auto* mie = app.add_subcommand("mie", "Mie coefficients of a homogeneous sphere");
  add_common(mie);
  mie->add_option_function<double>(
      "--radius", [&](double v) { over["geometry"]["radius"] = v; }, "sphere radius (m)");
  mie->add_option_function<std::string>(
      "--material", [&](const std::string& v) { over["materials"]["particle"] = v; },
      "material preset");
  mie->add_option_function<int>(
      "--l-max", [&](int v) { over["l_max"] = v; }, "maximum multipole order");
  mie->add_option_function<double>(
      "--from-woc", [&](double v) { over["axis"]["from_rad_per_um"] = v; },
      "omega/c axis start (rad/um)");
  mie->add_option_function<double>(
      "--to-woc", [&](double v) { over["axis"]["to_rad_per_um"] = v; },
      "omega/c axis end (rad/um)");
  mie->add_option_function<int>(
      "--points", [&](int v) { over["axis"]["points"] = v; }, "axis points");

  auto* fre = app.add_subcommand("fresnel", "Fresnel reflection of the plate");
  add_common(fre);
  fre->add_option_function<std::string>(
      "--plate", [&](const std::string& v) { over["materials"]["plate"] = v; },
      "plate material preset");
  fre->add_option_function<double>(
      "--omega", [&](double v) { over["scene"]["omega"] = v; }, "frequency (rad/s)");
  fre->add_option_function<double>(
      "--from-k", [&](double v) { over["axis"]["from_k_over_k0"] = v; },
      "k_perp/(omega/c) start");
  fre->add_option_function<double>(
      "--to-k", [&](double v) { over["axis"]["to_k_over_k0"] = v; }, "k_perp/(omega/c) end");
  fre->add_option_function<int>(
      "--points", [&](int v) { over["axis"]["points"] = v; }, "axis points");

  auto* fig = app.add_subcommand("figure", "emit figure data (fig3|fig4|fig5|fig7)");
  add_common(fig);
  std::string figure_id;
  fig->add_option("id", figure_id, "figure id")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    json cfg = load_and_merge_config(config_path, over);
    std::string scenario;
    if (lat->parsed()) scenario = "spheroid-lateral";
    else if (jan->parsed()) scenario = "janus-force";
    else if (swp->parsed()) scenario = "sweep";
    else if (ovl->parsed()) scenario = "overlap";
    else if (het->parsed()) scenario = "heating";
    else if (fri->parsed()) scenario = "friction-curve";
    else if (mie->parsed()) scenario = "mie";
    else if (fre->parsed()) scenario = "fresnel";
    else if (fig->parsed()) {
      scenario = "figure";
      cfg["figure"] = figure_id;
    }
    if (cfg.contains("scenario") && cfg.at("scenario").get<std::string>() != scenario)
      throw std::invalid_argument("config scenario does not match the subcommand");
    cfg["scenario"] = scenario;

    if (scenario == "spheroid-lateral") return run_spheroid_lateral(cfg);
    if (scenario == "janus-force") return run_janus_force(cfg);
    if (scenario == "sweep") return run_sweep(cfg);
    if (scenario == "overlap") return run_overlap(cfg);
    if (scenario == "heating") return run_heating(cfg);
    if (scenario == "friction-curve") return run_friction_curve(cfg);
    if (scenario == "mie") return run_mie(cfg);
    if (scenario == "fresnel") return run_fresnel(cfg);
    return run_figure(cfg);
  } catch (const QuadratureError& e) {
    std::cerr << "quadrature failure: " << e.what() << " in x-interval [" << e.x_lo << ", "
              << e.x_hi << "]\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
