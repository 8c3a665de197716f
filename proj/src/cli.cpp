#include "blend/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>

#include "blend/acceptance.hpp"
#include "blend/boundsnd.hpp"
#include "blend/energy1d.hpp"
#include "blend/io.hpp"
#include "blend/potential1d.hpp"
#include "blend/radialnd.hpp"
#include "blend/stationary1d.hpp"
#include "blend/sweep.hpp"

namespace blend {

namespace {

using io::format_real;
using io::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string config, params, out, format = "json", pattern, kind = "monolayer", kernel = "bump", suite = "all",
                                    inner = "U";
  int samples = 0, N = 3, n_max = 4, points = 400;
  double mass = 1, torus = 0, m = 1, h = 0, m_min = 0.05, m_max = 100;
  bool potential = false, log_x = false, log_y = false;
  std::uint64_t seed = kDefaultSeed;
  std::vector<double> kappa_grid, a_grid{4, 8, 16, 32};
};

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw Error(ErrorKind::InvalidConfig, "cannot write " + o.out);
  f << text;
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (o.format == a) return;
  throw UsageError("format '" + o.format + "' is not available for this subcommand");
}

std::string dump(std::string_view schema, const json& j) {
  io::validate_schema(schema, j);
  std::string text = j.dump(2) + "\n";
  io::validate_schema(schema, json::parse(text));
  return text;
}

Params load_params(const Options& o) {
  if (o.params.empty()) throw UsageError("--params is required");
  return io::params_from_json(io::read_json_file(o.params));
}

Phase phase_option(const std::string& s) {
  if (s != "U" && s != "V") throw UsageError("phase must be U or V");
  return phase_from_char(s[0]);
}

int cmd_eval(const Options& o, std::ostream& out) {
  if (o.config.empty()) throw UsageError("--config is required");
  BlockConfig c = io::config_from_json(io::read_json_file(o.config));
  require_valid(c);
  if (o.potential) {
    require_format(o, {"csv", "json"});
    io::CsvWriter csv({"x", "phi", "dphi"});
    for (const auto& s : sample_potential(potential(c), o.samples))
      csv.row({format_real(s.x), format_real(s.phi), format_real(s.dphi)});
    emit(o, csv.str(), out);
    return kExitOk;
  }
  EnergyBreakdown e = total_energy(c, load_params(o));
  require_format(o, {"json", "csv"});
  if (o.format == "json") {
    emit(o, dump("energy", io::to_json(e)), out);
  } else {
    io::CsvWriter csv({"count_u0", "count_v0", "count_uv", "interfacial", "nonlocal", "total"});
    csv.row({std::to_string(e.count_u0), std::to_string(e.count_v0), std::to_string(e.count_uv),
             format_real(e.interfacial), format_real(e.nonlocal), format_real(e.total)});
    emit(o, csv.str(), out);
  }
  return kExitOk;
}

int cmd_stationary(const Options& o, std::ostream& out) {
  if (o.pattern.empty()) throw UsageError("--pattern is required");
  require_format(o, {"json", "csv"});
  Params p = load_params(o);
  Domain d = o.torus > 0 ? Domain::torus(o.torus) : Domain::line();
  SolveResult r = solve_stationary(parse_pattern(o.pattern), o.mass, d, p);
  if (o.format == "json") {
    json j{{"config", io::to_json(r.config)},
           {"iterations", r.iterations},
           {"residual", r.residual},
           {"report", io::to_json(stationarity_report(r.config, p))},
           {"energy", io::to_json(total_energy(r.config, p))}};
    emit(o, dump("stationary", j), out);
  } else {
    io::CsvWriter csv({"index", "phase", "width"});
    for (std::size_t i = 0; i < r.config.blocks.size(); ++i)
      csv.row({std::to_string(i), std::string(1, to_char(r.config.blocks[i].phase)),
               format_real(r.config.blocks[i].width)});
    emit(o, csv.str(), out);
  }
  return kExitOk;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  require_format(o, {"csv", "json", "svg"});
  if (o.n_max < 1) throw UsageError("--n-max must be at least 1");
  if (!(o.m_min > 0) || !(o.m_max > o.m_min) || o.points < 2) throw UsageError("bad mass grid");
  Params p = load_params(o);
  Envelope env = global_envelope(p, log_grid(o.m_min, o.m_max, o.points), o.n_max);
  std::vector<std::string> names;
  for (const auto& pat : env.patterns) names.push_back(pattern_string(pat));

  if (o.format == "csv") {
    io::CsvWriter csv({"M", "pattern", "F_over_M", "is_envelope"});
    for (std::size_t i = 0; i < env.points.size(); ++i)
      for (std::size_t k = 0; k < env.patterns.size(); ++k)
        csv.row({format_real(env.points[i].M), names[k], format_real(env.curves[k][i].f_over_m),
                 env.points[i].best == k ? "1" : "0"});
    emit(o, csv.str(), out);
  } else if (o.format == "json") {
    json j{{"patterns", names}, {"envelope", json::array()}, {"crossovers", json::array()}};
    for (const auto& pt : env.points)
      j["envelope"].push_back({{"M", pt.M}, {"pattern", names[pt.best]}, {"F_over_M", pt.f_over_m}});
    for (const auto& c : env.crossovers)
      j["crossovers"].push_back({{"M", c.M}, {"from", names[c.from]}, {"to", names[c.to]}, {"F_over_M", c.f_over_m}});
    emit(o, dump("sweep", j), out);
  } else {
    std::vector<io::SvgSeries> series;
    double lowest = INFINITY;
    for (std::size_t k = 0; k < env.patterns.size(); ++k) {
      io::SvgSeries s{names[k], {}, {}, false};
      for (const auto& pt : env.curves[k]) {
        s.x.push_back(pt.M);
        s.y.push_back(pt.f_over_m);
      }
      series.push_back(std::move(s));
    }
    io::SvgSeries e{"envelope", {}, {}, true};
    for (const auto& pt : env.points) {
      e.x.push_back(pt.M);
      e.y.push_back(pt.f_over_m);
      lowest = std::min(lowest, pt.f_over_m);
    }
    series.push_back(std::move(e));
    io::SvgOptions opt{"Energy per unit mass", "M", "F/M", o.log_x, o.log_y, 4 * lowest};
    emit(o, io::svg_line_chart(series, opt), out);
  }
  return kExitOk;
}

int cmd_radial(const Options& o, std::ostream& out) {
  require_format(o, {"csv", "json"});
  RadialKind kind = radial_kind_from_string(o.kind);
  Phase inner = phase_option(o.inner);
  SurfaceTensions d = load_params(o).tensions();
  if (kind == RadialKind::Micelle) {
    RadialOptimum opt = micelle_optimal(o.N, d, inner);
    double closed = micelle_closed_form(o.N, d, inner);
    if (o.format == "json") {
      json j{{"N", o.N}, {"R1", opt.argument}, {"energy_per_mass", opt.energy_per_mass}, {"closed_form", closed}};
      emit(o, dump("micelle", j), out);
    } else {
      io::CsvWriter csv({"N", "R1", "energy_per_mass", "closed_form"});
      csv.row({std::to_string(o.N), format_real(opt.argument), format_real(opt.energy_per_mass),
               format_real(closed)});
      emit(o, csv.str(), out);
    }
    return kExitOk;
  }
  std::vector<double> grid = o.kappa_grid.empty() ? log_grid(1e-3, 1e-1, 9) : o.kappa_grid;
  io::CsvWriter csv({"kappa", "exact", "expansion", "abs_error"});
  json rows = json::array();
  for (double k : grid) {
    double exact = exact_energy_per_mass(kind, o.m, k, o.N, d, inner);
    double approx = expansion_energy(kind, o.m, k, o.N, d, inner);
    csv.row({format_real(k), format_real(exact), format_real(approx), format_real(std::abs(exact - approx))});
    rows.push_back({{"kappa", k}, {"exact", exact}, {"expansion", approx}, {"abs_error", std::abs(exact - approx)}});
  }
  emit(o, o.format == "csv" ? csv.str() : dump("radial", {{"kind", o.kind}, {"N", o.N}, {"m", o.m}, {"rows", rows}}), out);
  return kExitOk;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  require_format(o, {"json"});
  if (o.kernel != "bump") throw Error(ErrorKind::InvalidConfig, "unknown kernel '" + o.kernel + "'");
  MollifierConstants k = mollifier_constants(bump_mollifier(o.N));
  json j = io::to_json(k);
  if (!o.params.empty()) j["C2"] = k.C2(load_params(o));
  emit(o, dump("constants", j), out);
  return kExitOk;
}

int cmd_cutoff(const Options& o, std::ostream& out) {
  require_format(o, {"csv", "json"});
  Params p = o.params.empty() ? Params::from_d(1.0, 0.4, 0.6) : load_params(o);
  BlockConfig base = o.config.empty() ? build_family_config({Family::VUV_V, 2, 1.0})
                                      : io::config_from_json(io::read_json_file(o.config));
  require_valid(base);
  if (base.domain.is_torus()) throw Error(ErrorKind::InvalidConfig, "the cutoff base must live on the line");
  double planar = total_energy(base, p).total / phase_mass(base, Phase::U);
  io::CsvWriter csv({"a", "F_over_M", "deviation"});
  std::vector<double> dev;
  for (double a : o.a_grid) {
    CutoffEnergy e = cutoff_energy_2d({base, a}, p, o.h > 0 ? o.h : a / 32);
    dev.push_back(std::abs(e.f_over_m - planar));
    csv.row({format_real(a), format_real(e.f_over_m), format_real(dev.back())});
  }
  if (o.format == "csv") {
    emit(o, csv.str(), out);
  } else {
    json j{{"planar", planar}, {"a", o.a_grid}, {"deviation", dev}};
    if (o.a_grid.size() >= 2) j["slope"] = loglog_slope(o.a_grid, dev);
    emit(o, dump("cutoff", j), out);
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::string text;
  bool ok = true;
  for (const auto& r : run_acceptance(o.suite, o.seed)) {
    text += format_result(r) + "\n";
    ok = ok && r.passed;
  }
  emit(o, text, out);
  return ok ? kExitOk : kExitAcceptance;
}

int exit_code(ErrorKind k) {
  switch (k) {
  case ErrorKind::NoConvergence:
  case ErrorKind::QuadratureFailure: return kExitNumerical;
  default: return kExitValidation;
  }
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Energies of sharp-interface copolymer-homopolymer blend structures", "blend"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* s) {
    s->add_option("--out", o.out, "Output file (default: standard output)");
    s->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json", "svg"}));
  };

  auto* eval = app.add_subcommand("eval", "Energy breakdown or potential of a block configuration");
  common(eval);
  eval->add_option("--config", o.config, "Configuration JSON");
  eval->add_option("--params", o.params, "Parameter JSON");
  eval->add_flag("--potential", o.potential, "Dump x, phi, dphi as CSV");
  eval->add_option("--samples", o.samples, "Extra uniform samples for --potential")->check(CLI::NonNegativeNumber);

  auto* stat = app.add_subcommand("stationary", "Stationary widths of an alternating pattern");
  common(stat);
  stat->add_option("--pattern", o.pattern, "Pattern such as UVUVU");
  stat->add_option("--mass", o.mass, "Mass of each phase")->check(CLI::PositiveNumber);
  stat->add_option("--torus", o.torus, "Torus length (default: line)")->check(CLI::PositiveNumber);
  stat->add_option("--params", o.params, "Parameter JSON");

  auto* sweep = app.add_subcommand("sweep", "Energy-per-mass curves and their envelope");
  common(sweep);
  sweep->add_option("--params", o.params, "Parameter JSON");
  sweep->add_option("--n-max", o.n_max, "Largest monolayer count");
  sweep->add_option("--m-min", o.m_min, "Smallest mass");
  sweep->add_option("--m-max", o.m_max, "Largest mass");
  sweep->add_option("--points", o.points, "Log-spaced grid points");
  sweep->add_flag("--log-x", o.log_x, "Logarithmic M axis in SVG output");
  sweep->add_flag("--log-y", o.log_y, "Logarithmic F/M axis in SVG output");

  auto* radial = app.add_subcommand("radial", "Radial structures: exact energy against the curvature expansion");
  common(radial);
  radial->add_option("--kind", o.kind, "monolayer, bilayer or micelle");
  radial->add_option("--N", o.N, "Dimension")->check(CLI::Range(2, 64));
  radial->add_option("--m", o.m, "Mass per unit area")->check(CLI::PositiveNumber);
  radial->add_option("--kappa-grid", o.kappa_grid, "Curvatures")->delimiter(',');
  radial->add_option("--inner", o.inner, "Inner phase U or V");
  radial->add_option("--params", o.params, "Parameter JSON");

  auto* bounds = app.add_subcommand("bounds", "Mollifier constants");
  common(bounds);
  bounds->require_subcommand(0, 1);
  bounds->add_option("--kernel", o.kernel, "Mollifier kernel");
  bounds->add_option("--N", o.N, "Dimension")->check(CLI::Range(1, 64));
  bounds->add_option("--params", o.params, "Parameter JSON (adds C2)");

  auto* cutoff = bounds->add_subcommand("cutoff", "Planar structure cut off at radius a in the plane");
  cutoff->set_help_flag("--help", "Print this help message and exit");
  common(cutoff);
  cutoff->add_option("--a-grid", o.a_grid, "Cutoff radii")->delimiter(',');
  cutoff->add_option("--h", o.h, "Grid spacing (default a/32)")->check(CLI::PositiveNumber);
  cutoff->add_option("--config", o.config, "Planar base configuration JSON");
  cutoff->add_option("--params", o.params, "Parameter JSON");

  auto* verify = app.add_subcommand("verify", "Run the acceptance criteria");
  verify->add_option("--out", o.out, "Output file (default: standard output)");
  verify->add_option("--suite", o.suite, "all, 1d, radial or bounds")
      ->check(CLI::IsMember({"all", "1d", "radial", "bounds"}));
  verify->add_option("--seed", o.seed, "Random corpus seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const bool csv_default = sweep->parsed() || radial->parsed() || cutoff->parsed() || o.potential;
  if (csv_default && sweep->count("--format") + radial->count("--format") + cutoff->count("--format") +
                             eval->count("--format") ==
                         0)
    o.format = "csv";

  try {
    if (eval->parsed()) return cmd_eval(o, out);
    if (stat->parsed()) return cmd_stationary(o, out);
    if (sweep->parsed()) return cmd_sweep(o, out);
    if (radial->parsed()) return cmd_radial(o, out);
    if (cutoff->parsed()) return cmd_cutoff(o, out);
    if (bounds->parsed()) return cmd_bounds(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}

} // namespace blend
