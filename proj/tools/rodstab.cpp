// rodstab: limit-model coefficients, critical forces, helical stationary
// points and conjugate-point stability scans for intrinsically curved
// Kirchhoff rods under a terminal load.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "rodstab/conjugate.hpp"
#include "rodstab/critical_force.hpp"
#include "rodstab/cross_section.hpp"
#include "rodstab/energy.hpp"
#include "rodstab/helix.hpp"
#include "rodstab/rotation_curve.hpp"
#include "rodstab/so3.hpp"

using json = nlohmann::ordered_json;
using namespace rodstab;

namespace {

int log_level() {
  static int lvl = [] {
    const char* e = std::getenv("RODSTAB_LOG");
    if (!e) return 0;
    const std::string s(e);
    if (s == "debug") return 2;
    if (s == "info") return 1;
    return 0;
  }();
  return lvl;
}

void log_info(const std::string& msg) {
  if (log_level() >= 1) std::cerr << "[info] " << msg << "\n";
}

std::string fmt17(double v) {
  char buf[40];
  auto res =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

struct CommonOpts {
  double lambda = 0.326;
  double mu = 0.654e-3;
  double length = 1.0;
  double wz = 0.6;
  double chi = 6.0;
  double delta = 0.05;
  std::string bc = "weak-clamped";
  int n_grid = 400;
  int n_samples = 512;
  unsigned long seed = 0;
  std::string output;
  std::string format = "json";
  int jobs = 1;
  double force = 0.0;
  double force_frac = 0.0;
  bool has_force = false;
  bool has_frac = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--lambda", o.lambda, "first Lame constant");
  cmd->add_option("--mu", o.mu, "shear modulus");
  cmd->add_option("--length", o.length, "rod length L");
  cmd->add_option("--wz", o.wz, "half-height of the unit-area cross section");
  cmd->add_option("--chi", o.chi, "prestrain strength");
  cmd->add_option("--delta", o.delta, "helical boundary tilt");
  cmd->add_option("--bc", o.bc,
                  "weak-free | clamped | clamped-clamped | weak-clamped");
  cmd->add_option("--n-grid", o.n_grid, "discretization segments");
  cmd->add_option("--n-samples", o.n_samples, "scan sample count");
  cmd->add_option("--seed", o.seed, "RNG seed");
  cmd->add_option("--output", o.output, "output path (basename for scan)");
  cmd->add_option("--format", o.format, "csv | json");
  cmd->add_option("--jobs", o.jobs, "sweep concurrency");
  auto* fo = cmd->add_option("--force", o.force, "terminal load f");
  auto* ff = cmd->add_option("--force-frac", o.force_frac,
                             "f as a fraction of f_crit for the chosen bc");
  fo->excludes(ff);
  cmd->parse_complete_callback([&o, fo, ff] {
    o.has_force = fo->count() > 0;
    o.has_frac = ff->count() > 0;
  });
}

BoundaryCondition parse_bc(const std::string& name) {
  if (name == "weak-free") return BoundaryCondition::weak_free();
  if (name == "clamped") return BoundaryCondition::clamped(Mat3::Identity());
  if (name == "clamped-clamped")
    return BoundaryCondition::clamped_clamped(Mat3::Identity(),
                                              Mat3::Identity());
  if (name == "weak-clamped") return BoundaryCondition::weak_clamped();
  throw std::invalid_argument("unknown boundary condition: " + name);
}

RodCoefficients make_coeffs(const CommonOpts& o) {
  MaterialParams mp;
  mp.lame_lambda = o.lambda;
  mp.lame_mu = o.mu;
  CrossSection cs(o.wz);
  return build_coefficients(mp, cs, o.chi, o.length);
}

json coeffs_json(const RodCoefficients& rc) {
  return json{{"c12", rc.c12}, {"c13", rc.c13},   {"c23", rc.c23},
              {"tau_s", rc.tau_s}, {"k", rc.k},   {"chi", rc.chi},
              {"L", rc.length_L}};
}

json breakdown_json(const CriticalForceBreakdown& b, const std::string& bc) {
  json j{{"f1_crit", b.f1_crit},
         {"f2_crit", b.f2_crit},
         {"f_crit", b.f_crit},
         {"branch", branch_name(b.branch)}};
  if (b.x_star) j["x_star"] = *b.x_star;
  if (std::isfinite(b.a_param)) j["a_param"] = b.a_param;
  j["bc"] = bc;
  return j;
}

/// Resolve the terminal load; fraction mode needs a bc with a critical force.
struct ResolvedForce {
  double f;
  std::optional<double> f_crit;
};

ResolvedForce resolve_force(const CommonOpts& o, const RodCoefficients& rc,
                            double default_frac) {
  if (o.has_force) return {o.force, std::nullopt};
  const double frac = o.has_frac ? o.force_frac : default_frac;
  if (o.bc != "clamped-clamped" && o.bc != "weak-clamped")
    throw std::invalid_argument(
        "force fraction mode needs --bc clamped-clamped or weak-clamped");
  const auto b = f_crit_analytic(rc, parse_bc(o.bc));
  return {frac * b.f_crit, b.f_crit};
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path);
  os << text;
}

int cmd_coeffs(const CommonOpts& o) {
  const json j = coeffs_json(make_coeffs(o));
  const std::string out = j.dump(2) + "\n";
  if (!o.output.empty())
    write_text(o.output, out);
  else
    std::cout << out;
  return 0;
}

int cmd_critical_force(const CommonOpts& o, int numeric_n) {
  const RodCoefficients rc = make_coeffs(o);
  const BoundaryCondition bc = parse_bc(o.bc);
  const auto b = f_crit_analytic(rc, bc);
  json j = breakdown_json(b, o.bc);
  if (numeric_n > 0) {
    const double fn = f_crit_numeric(rc, bc, numeric_n);
    j["N"] = numeric_n;
    j["f_crit_numeric"] = fn;
    j["relative_gap"] =
        std::abs(fn - b.f_crit) / std::max(std::abs(b.f_crit), 1e-300);
  }
  const std::string out = j.dump(2) + "\n";
  if (!o.output.empty())
    write_text(o.output, out);
  else
    std::cout << out;
  return 0;
}

json helix_json(const HelixSpec& h) {
  json j{{"delta", h.delta}, {"theta", h.theta}, {"f", h.f}, {"L", h.length_L}};
  j["r"] = {h.r.x(), h.r.y(), h.r.z()};
  j["omega"] = {h.omega.x(), h.omega.y(), h.omega.z()};
  std::vector<double> r0;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) r0.push_back(h.R0(r, c));
  j["R0"] = r0;
  return j;
}

int cmd_helix(const CommonOpts& o) {
  const RodCoefficients rc = make_coeffs(o);
  const auto rf = resolve_force(o, rc, 0.999);
  const HelixSpec h = build_helix(rc, rf.f, o.delta, o.length);
  const std::string out = helix_json(h).dump(2) + "\n";
  if (!o.output.empty())
    write_text(o.output, out);
  else
    std::cout << out;
  return 0;
}

std::string scan_csv(const StabilityReport& rep) {
  std::string s = "t,delta,det_m,sigma_min\n";
  for (size_t i = 0; i < rep.ts.size(); ++i) {
    s += fmt17(rep.ts[i]) + ',' + fmt17(rep.delta_vals[i]) + ',' +
         fmt17(rep.det_vals[i]) + ',' + fmt17(rep.sigma_min[i]) + '\n';
  }
  return s;
}

json scan_json(const CommonOpts& o, const ResolvedForce& rf,
               const HelixSpec& h, const StabilityReport& rep) {
  json params{{"lambda", o.lambda}, {"mu", o.mu},       {"L", o.length},
              {"wz", o.wz},         {"chi", o.chi},     {"delta", o.delta},
              {"bc", o.bc},         {"n_samples", o.n_samples}};
  json j{{"params", params}, {"f", rf.f}, {"theta", h.theta}};
  if (rf.f_crit) j["f_crit"] = *rf.f_crit;
  j["verdict"] = verdict_name(rep.verdict);
  j["conjugate_points"] = rep.conjugate_points;
  std::vector<std::string> flags = rep.flags;
  if (rf.f_crit &&
      std::abs(rf.f - *rf.f_crit) <= 1e-8 * std::max(1.0, std::abs(*rf.f_crit)))
    flags.push_back("force_at_critical");
  j["flags"] = flags;
  return j;
}

int cmd_scan(const CommonOpts& o) {
  const RodCoefficients rc = make_coeffs(o);
  const auto rf = resolve_force(o, rc, 0.999);
  if (rf.f == 0.0) throw ZeroForce("scan needs a nonzero terminal load");
  const HelixSpec h = build_helix(rc, rf.f, o.delta, o.length);
  const SecondOrderSystem sys = assemble_system(h.omega, h.r, rc, rf.f);
  ScanOptions so;
  so.n_samples = o.n_samples;
  const StabilityReport rep = scan(sys, o.length, so);
  const json j = scan_json(o, rf, h, rep);
  if (!o.output.empty()) {
    write_text(o.output + ".csv", scan_csv(rep));
    write_text(o.output + ".json", j.dump(2) + "\n");
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

struct SweepRow {
  double wz, chi;
  std::string text;
};

int cmd_sweep(const CommonOpts& o, double wz_min, double wz_max, int wz_steps,
              double chi_min, double chi_max, int chi_steps) {
  std::vector<std::pair<double, double>> grid;
  for (int i = 0; i < wz_steps; ++i)
    for (int j = 0; j < chi_steps; ++j) {
      const double w =
          wz_steps == 1 ? wz_min
                        : wz_min + (wz_max - wz_min) * i / (wz_steps - 1);
      const double c =
          chi_steps == 1 ? chi_min
                         : chi_min + (chi_max - chi_min) * j / (chi_steps - 1);
      grid.emplace_back(w, c);
    }

  std::vector<std::string> rows(grid.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const size_t idx = next.fetch_add(1);
      if (idx >= grid.size()) return;
      const auto [w, c] = grid[idx];
      CommonOpts po = o;
      po.wz = w;
      po.chi = c;
      std::string row = fmt17(w) + ',' + fmt17(c) + ',';
      try {
        const RodCoefficients rc = make_coeffs(po);
        const auto rf = resolve_force(po, rc, 0.999);
        const HelixSpec h = build_helix(rc, rf.f, po.delta, po.length);
        const SecondOrderSystem sys = assemble_system(h.omega, h.r, rc, rf.f);
        ScanOptions so;
        so.n_samples = po.n_samples;
        const StabilityReport rep = scan(sys, po.length, so);
        std::string flags;
        for (const auto& fl : rep.flags) {
          if (!flags.empty()) flags += ';';
          flags += fl;
        }
        row += fmt17(rf.f_crit.value_or(rf.f)) + ',' + fmt17(h.theta) + ',' +
               verdict_name(rep.verdict) + ',' + flags + ',';
      } catch (const std::exception& e) {
        row += ",,,,";
        row += e.what();
      }
      rows[idx] = row;
    }
  };
  const int nthreads = std::max(1, std::min<int>(o.jobs, 64));
  std::vector<std::thread> pool;
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::string out = "wz,chi,f_crit,theta,verdict,flags,error\n";
  for (const auto& r : rows) out += r + '\n';
  if (!o.output.empty())
    write_text(o.output, out);
  else
    std::cout << out;
  return 0;
}

int cmd_minimize(const CommonOpts& o, const std::string& init) {
  const RodCoefficients rc = make_coeffs(o);
  const BoundaryCondition bc = parse_bc(o.bc);
  double f = 0.0;
  if (o.has_force || o.has_frac) f = resolve_force(o, rc, 0.999).f;

  const int N = std::max(o.n_grid, 4);
  std::vector<Mat3> frames(N + 1, Mat3::Identity());
  if (init == "curved") {
    for (int i = 0; i <= N; ++i)
      frames[i] = exp_skew(Vec3(0.0, rc.k, 0.0), o.length * i / N);
  } else if (init == "random") {
    std::mt19937_64 rng(o.seed);
    std::normal_distribution<double> gauss(0.0, 0.35);
    Vec3 amp[4];
    for (auto& a : amp) a = Vec3(gauss(rng), gauss(rng), gauss(rng));
    for (int i = 0; i <= N; ++i) {
      const double x = static_cast<double>(i) / N;
      Vec3 eta = Vec3::Zero();
      for (int m = 0; m < 4; ++m)
        eta += amp[m] * std::sin((m + 1) * M_PI * x);
      frames[i] = exp_skew(eta) * frames[i];
    }
  } else if (init != "straight") {
    throw std::invalid_argument("--init must be straight, curved or random");
  }
  RotationCurve curve(std::move(frames), o.length);

  MinimizeOptions mo;
  mo.tol = 1e-7;
  const MinimizeResult res = minimize(curve, rc, f, bc, mo);
  const EnergyParts parts = energy_parts(res.curve, rc, f, bc);

  if (!o.output.empty()) {
    std::ostringstream cs;
    write_curve_csv(cs, res.curve);
    write_text(o.output + ".csv", cs.str());
    std::string trace = "iter,energy\n";
    for (size_t i = 0; i < res.energy_trace.size(); ++i)
      trace += std::to_string(i) + ',' + fmt17(res.energy_trace[i]) + '\n';
    write_text(o.output + "_trace.csv", trace);
  }
  json j{{"converged", res.converged},
         {"iterations", res.iterations},
         {"grad_norm", res.grad_norm},
         {"energy", parts.total()},
         {"elastic", parts.elastic}};
  std::cout << j.dump(2) << "\n";
  return res.converged ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"intrinsically curved Kirchhoff rod stability toolkit"};
  app.require_subcommand(1);

  CommonOpts o;
  int numeric_n = 0;
  std::string init = "straight";
  double wz_min = 0.45, wz_max = 2.1, chi_min = 6.0, chi_max = 20.0;
  int wz_steps = 0, chi_steps = 0;

  auto* c_coeffs = app.add_subcommand("coeffs", "limit-model coefficients");
  add_common(c_coeffs, o);
  auto* c_crit =
      app.add_subcommand("critical-force", "critical force of the straight rod");
  add_common(c_crit, o);
  c_crit->add_option("--numeric", numeric_n,
                     "also compute the discretized value at this N");
  auto* c_scan =
      app.add_subcommand("scan", "conjugate-point scan of the flat helix");
  add_common(c_scan, o);
  auto* c_sweep = app.add_subcommand("sweep", "scan over a (wz, chi) grid");
  add_common(c_sweep, o);
  c_sweep->add_option("--wz-min", wz_min);
  c_sweep->add_option("--wz-max", wz_max);
  c_sweep->add_option("--wz-steps", wz_steps)->required();
  c_sweep->add_option("--chi-min", chi_min);
  c_sweep->add_option("--chi-max", chi_max);
  c_sweep->add_option("--chi-steps", chi_steps)->required();
  auto* c_min = app.add_subcommand("minimize", "gradient-descent minimization");
  add_common(c_min, o);
  c_min->add_option("--init", init, "straight | curved | random");
  auto* c_helix = app.add_subcommand("helix", "flat helical stationary point");
  add_common(c_helix, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (c_coeffs->parsed()) return cmd_coeffs(o);
    if (c_crit->parsed()) return cmd_critical_force(o, numeric_n);
    if (c_scan->parsed()) {
      log_info("scan bc=" + o.bc);
      return cmd_scan(o);
    }
    if (c_sweep->parsed())
      return cmd_sweep(o, wz_min, wz_max, wz_steps, chi_min, chi_max,
                       chi_steps);
    if (c_min->parsed()) return cmd_minimize(o, init);
    if (c_helix->parsed()) return cmd_helix(o);
  } catch (const NoRealRoot& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ZeroForce& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const DegenerateAxis& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
