#include "blend/acceptance.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>

#include "blend/boundsnd.hpp"
#include "blend/energy1d.hpp"
#include "blend/potential1d.hpp"
#include "blend/stationary1d.hpp"

namespace blend {

std::vector<Params> acceptance_params() {
  return {Params::from_d(1.0, 0.3, 0.7), Params::from_d(1.0, 0.4, 0.6), Params::from_c(1.0, 1.0, 1.0)};
}

BlockConfig random_line_config(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(2, 9);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int n = count(rng);
  std::vector<Phase> phases{unit(rng) < 0.5 ? Phase::U : Phase::V};
  for (int k = 1; k < n; ++k) {
    Phase prev = phases.back();
    if (k < n - 1 && prev != Phase::H && unit(rng) < 0.15) {
      phases.push_back(Phase::H);
    } else if (prev == Phase::H) {
      phases.push_back(unit(rng) < 0.5 ? Phase::U : Phase::V);
    } else {
      phases.push_back(swapped(prev));
    }
  }
  if (std::find(phases.begin(), phases.end(), Phase::U) == phases.end()) phases.push_back(Phase::U);
  if (std::find(phases.begin(), phases.end(), Phase::V) == phases.end()) phases.push_back(Phase::V);

  BlockConfig c{Domain::line(), {}};
  for (Phase p : phases) c.blocks.push_back({p, 0.05 + 2.95 * unit(rng)});
  double M = std::exp(std::log(0.1) + unit(rng) * std::log(200.0));
  double mu = phase_mass(c, Phase::U), mv = phase_mass(c, Phase::V);
  for (auto& b : c.blocks) {
    if (b.phase == Phase::U) b.width *= M / mu;
    if (b.phase == Phase::V) b.width *= M / mv;
  }
  return c;
}

std::vector<BlockConfig> line_corpus(std::uint64_t seed, int random_count) {
  std::vector<BlockConfig> out;
  for (Family f : {Family::VUV_V, Family::VUV_U, Family::UVU_U})
    for (int n = 1; n <= 12; ++n) {
      try {
        check_parity(f, n);
      } catch (const Error&) {
        continue;
      }
      for (double m : {0.25, 1.0, 3.0}) out.push_back(build_family_config({f, n, m}));
    }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < random_count; ++i) out.push_back(random_line_config(rng));
  return out;
}

std::vector<RadialConfig> radial_corpus(std::uint64_t seed, int per_kind) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> inner(0.1, 5.0), band(0.05, 3.0), unit(0.0, 1.0);
  std::vector<RadialConfig> out;
  for (int N = 2; N <= 5; ++N)
    for (int i = 0; i < per_kind; ++i) {
      Phase p = unit(rng) < 0.5 ? Phase::U : Phase::V;
      double R0 = inner(rng), R1 = R0 + band(rng);
      out.push_back(radial_monolayer(N, R0, R1, p));
      out.push_back(radial_bilayer(N, R0, R1, p));
      out.push_back(radial_micelle(N, inner(rng), p));
    }
  return out;
}

double torus_quadrature_oracle(int n_pairs) {
  using boost::math::quadrature::gauss;
  const int blocks = 2 * n_pairs;
  const double w = 1.0 / blocks;
  // F(x) = int_0^x (u - v), linear on each block.
  std::vector<double> F0(blocks + 1, 0.0);
  for (int k = 0; k < blocks; ++k) F0[k + 1] = F0[k] + (k % 2 == 0 ? w : -w);
  auto F = [&](int k, double t) { return F0[k] + (k % 2 == 0 ? t : -t); };
  double C = 0;
  for (int k = 0; k < blocks; ++k) C += gauss<double, 10>::integrate([&](double t) { return F(k, t); }, 0.0, w);
  double energy = 0;
  for (int k = 0; k < blocks; ++k)
    energy += gauss<double, 10>::integrate(
        [&](double t) {
          double d = C - F(k, t);
          return d * d;
        },
        0.0, w);
  return energy;
}

namespace {

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double rel(double x, double ref) { return std::abs(x - ref) / std::abs(ref); }

CriterionResult criterion_family_parity() {
  double worst = 0;
  int cases = 0;
  for (const Params& p : acceptance_params())
    for (Family f : {Family::VUV_V, Family::VUV_U, Family::UVU_U})
      for (int n = 1; n <= 12; ++n) {
        try {
          check_parity(f, n);
        } catch (const Error&) {
          continue;
        }
        for (double m : {0.25, 1.0, 3.0}) {
          FamilySpec s{f, n, m};
          worst = std::max(worst, rel(total_energy(build_family_config(s), p).total, family_energy(s, p)));
          ++cases;
        }
      }
  return {1, "closed-form family parity", worst < 1e-12,
          fmt("%.0f cases, max rel err %.2e", cases, worst)};
}

CriterionResult criterion_monolayer_bilayer() {
  Params p = Params::from_c(1, 1, 1);
  double worst = 0;
  for (double m : {0.5, 1.0, 2.0}) {
    double mono = total_energy(line_config(parse_pattern("UV"), {m, m}), p).total;
    double uvu = total_energy(line_config(parse_pattern("UVU"), {m, 2 * m, m}), p).total;
    double vuv = total_energy(line_config(parse_pattern("VUV"), {m, 2 * m, m}), p).total;
    double c0 = p.c0(), cu = p.cu(), cv = p.cv();
    worst = std::max({worst, rel(mono, 2 * (c0 + cu + cv) + 2.0 / 3.0 * m * m * m),
                      rel(uvu, 2 * c0 + 4 * cu + 2 * cv + 4.0 / 3.0 * m * m * m),
                      rel(vuv, 2 * c0 + 2 * cu + 4 * cv + 4.0 / 3.0 * m * m * m)});
  }
  return {2, "monolayer and bilayer constants", worst < 1e-12, fmt("max rel err %.2e", worst)};
}

CriterionResult criterion_lower_bound(std::uint64_t seed) {
  int violations = 0, cases = 0;
  double min_slack = INFINITY;
  for (const Params& p : acceptance_params()) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 1000; ++i) {
      BlockConfig c = random_line_config(rng);
      double slack = total_energy(c, p).total - lower_bound(phase_mass(c, Phase::U), p);
      min_slack = std::min(min_slack, slack);
      if (slack < -1e-9) ++violations;
      ++cases;
    }
  }
  return {3, "lower bound on random configurations", violations == 0,
          fmt("%.0f cases, %.0f violations, min slack %.3e", cases, violations, min_slack)};
}

CriterionResult criterion_large_mass() {
  Params p = Params::from_d(1.0, 0.4, 0.6);
  std::vector<double> vals;
  for (double M : {10.0, 30.0, 100.0, 300.0}) vals.push_back(min_energy_per_mass(M, p).energy_per_mass);
  bool decreasing = std::is_sorted(vals.rbegin(), vals.rend(), std::less_equal<>());
  double err = rel(vals.back(), 1.17446);
  return {4, "large-mass limit of the envelope", decreasing && err < 0.02,
          fmt("F/M(300) = %.6f, rel dev %.3e, decreasing %.0f", vals.back(), err, decreasing)};
}

CriterionResult criterion_stationary() {
  Params p = Params::from_d(1.0, 0.3, 0.7);
  SolveResult line = solve_stationary(parse_pattern("UVUVU"), 4.0, Domain::line(), p);
  const double expect[] = {1, 2, 2, 2, 1};
  double worst = 0;
  for (std::size_t i = 0; i < 5; ++i) worst = std::max(worst, rel(line.config.blocks[i].width, expect[i]));
  double eq = stationarity_report(line.config, p).equal_phi_residual;
  double torus = INFINITY;
  try {
    torus = solve_stationary(parse_pattern("UVUVUV"), 6.0, Domain::torus(20.0), p).residual;
  } catch (const Error&) {
  }
  return {5, "stationary widths on line and torus", worst < 1e-9 && eq < 1e-10 && torus < 1e-10,
          fmt("width rel err %.2e, equal-phi residual %.2e, torus residual %.2e", worst, eq, torus)};
}

CriterionResult criterion_split_join(std::uint64_t seed) {
  std::mt19937_64 rng(seed + 6);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = -INFINITY;
  int increases = 0;
  for (int i = 0; i < 500; ++i) {
    BlockConfig left = random_line_config(rng), right = random_line_config(rng);
    BlockConfig c{Domain::line(), {}};
    for (const auto& b : left.blocks) c.blocks.push_back(b);
    std::size_t gap = c.blocks.size();
    double g = 0.1 + 3 * unit(rng);
    c.blocks.push_back({Phase::H, g});
    for (const auto& b : right.blocks) c.blocks.push_back(b);
    double a = unit(rng) < 0.25 ? g : g * (1e-3 + (1 - 1e-3) * unit(rng));
    Params p = acceptance_params()[i % 3];
    SplitJoinResult r = join_gap(c, p, gap, a);
    double scale = std::max(1.0, total_energy(c, p).total);
    worst = std::max(worst, r.delta / scale);
    if (r.delta > 1e-12 * scale) ++increases;
  }
  Params zero = Params::from_d(0.0, 0.5, 0.5);
  double split = 0;
  for (int n : {4, 8, 12})
    for (double m : {0.5, 1.0, 2.0}) {
      BlockConfig c = build_family_config({Family::UVU_U, n, m});
      split = std::max(split, std::abs(split_at(c, zero, total_width(c) / 2, 0.7).delta));
    }
  return {6, "split and join", increases == 0 && split < 1e-12,
          fmt("join: %.0f increases, max rel change %.2e; center split |dF| %.2e", increases, worst, split)};
}

CriterionResult criterion_radial_parity(std::uint64_t seed) {
  double worst = 0;
  int cases = 0;
  SurfaceTensions d = Params::from_d(1.0, 0.4, 0.6).tensions();
  for (const RadialConfig& rc : radial_corpus(seed)) {
    RadialKind kind = rc.radii.size() == 4 ? RadialKind::Bilayer
                      : rc.radii[0] == 0  ? RadialKind::Micelle
                                          : RadialKind::Monolayer;
    double exact = radial_energy(rc, d).total;
    worst = std::max(worst, rel(exact, closed_form_energy(kind, rc.radii, rc.N, d, rc.labels[0])));
    ++cases;
  }
  return {7, "radial closed-form parity", worst < 1e-10, fmt("%.0f cases, max rel err %.2e", cases, worst)};
}

CriterionResult criterion_expansion_order() {
  SurfaceTensions d = Params::from_d(1.0, 0.4, 0.6).tensions();
  std::vector<double> kappa;
  for (int i = 0; i <= 8; ++i) kappa.push_back(std::pow(10.0, -3.0 + 2.0 * i / 8));
  double mono = INFINITY, bi = INFINITY;
  for (int N : {2, 3})
    for (RadialKind kind : {RadialKind::Monolayer, RadialKind::Bilayer}) {
      std::vector<double> err;
      for (double k : kappa)
        err.push_back(std::abs(exact_energy_per_mass(kind, 1.0, k, N, d) - expansion_energy(kind, 1.0, k, N, d)));
      double s = loglog_slope(kappa, err);
      (kind == RadialKind::Monolayer ? mono : bi) = std::min(kind == RadialKind::Monolayer ? mono : bi, s);
    }
  return {8, "curvature expansion orders", mono >= 2.9 && bi >= 3.9,
          fmt("min slope monolayer %.4f, bilayer %.4f", mono, bi)};
}

CriterionResult criterion_micelle() {
  SurfaceTensions d = Params::from_d(1.0, 0.3, 0.7).tensions();
  RadialOptimum opt = micelle_optimal(2, d);
  double formula = 3 * std::pow(d.d_uv + d.d_v0 * std::numbers::sqrt2, 2.0 / 3.0) *
                   std::cbrt(std::numbers::ln2 - 0.5);
  double planar = std::cbrt(4.5) * std::pow(d.d_uv, 2.0 / 3.0);
  double err = rel(opt.energy_per_mass, formula);
  return {9, "micelle optimum", err < 1e-6 && opt.energy_per_mass > planar,
          fmt("optimum %.10f, rel err %.2e, planar bound %.6f", opt.energy_per_mass, err, planar)};
}

CriterionResult criterion_interpolation(std::uint64_t seed) {
  double a2 = sphere_mean_abs_cos(2), a3 = sphere_mean_abs_cos(3);
  double e2 = std::abs(a2 - 2 / std::numbers::pi), e3 = std::abs(a3 - 0.5);
  std::vector<MollifierConstants> k;
  for (int N = 1; N <= 5; ++N) k.push_back(mollifier_constants(bump_mollifier(N)));
  int violations = 0, cases = 0;
  for (const Params& p : acceptance_params()) {
    for (const BlockConfig& c : line_corpus(seed)) {
      violations += check_interpolation(c, p, k[0]).violated;
      ++cases;
    }
    for (const RadialConfig& rc : radial_corpus(seed, 25)) {
      violations += check_interpolation(rc, p, k[rc.N - 1]).violated;
      ++cases;
    }
  }
  return {10, "interpolation constants and inequalities", e2 < 1e-8 && e3 < 1e-8 && violations == 0,
          fmt("|A2 - 2/pi| %.2e, |A3 - 1/2| %.2e, ", e2, e3) +
              fmt("%.0f configurations, %.0f violations", cases, violations)};
}

CriterionResult criterion_cutoff() {
  BlockConfig base = build_family_config({Family::VUV_V, 2, 1.0});
  CutoffRate r = cutoff_rate(base, Params::from_d(1.0, 0.4, 0.6), {4, 8, 16, 32});
  bool ok = !r.skipped && r.slope >= -1.3 && r.slope <= -0.7;
  return {11, "cutoff extension rate", ok,
          fmt("slope %.4f, deviation at a=4 %.4f, at a=32 %.4f", r.slope, r.deviation.front(), r.deviation.back())};
}

CriterionResult criterion_torus_constant() {
  double oracle = torus_quadrature_oracle(1);
  BlockConfig c{Domain::torus(1.0), {{Phase::U, 0.5}, {Phase::V, 0.5}}};
  double computed = total_energy(c, Params::from_c(1, 1, 1)).nonlocal;
  double err = rel(computed, oracle);
  bool is48 = rel(oracle, 1.0 / 48) < 1e-12, is96 = rel(oracle, 1.0 / 96) < 1e-12;
  std::string verdict = is48 ? "1/(48 n^2)" : is96 ? "1/(96 n^2)" : "neither candidate";
  return {12, "torus constant", err < 1e-10,
          fmt("oracle %.17g, total_energy rel err %.2e, ", oracle, err) + "oracle agrees with " + verdict};
}

} // namespace

std::vector<CriterionResult> run_acceptance(const std::string& suite, std::uint64_t seed) {
  std::vector<std::function<CriterionResult()>> all = {
      criterion_family_parity,
      criterion_monolayer_bilayer,
      [seed] { return criterion_lower_bound(seed); },
      criterion_large_mass,
      criterion_stationary,
      [seed] { return criterion_split_join(seed); },
      [seed] { return criterion_radial_parity(seed); },
      criterion_expansion_order,
      criterion_micelle,
      [seed] { return criterion_interpolation(seed); },
      criterion_cutoff,
      criterion_torus_constant,
  };
  std::vector<int> ids;
  if (suite == "all") ids = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  else if (suite == "1d") ids = {1, 2, 3, 4, 5, 6, 12};
  else if (suite == "radial") ids = {7, 8, 9};
  else if (suite == "bounds") ids = {10, 11};
  else throw Error(ErrorKind::InvalidConfig, "unknown suite '" + suite + "'");
  std::vector<CriterionResult> out;
  for (int id : ids) {
    try {
      out.push_back(all[id - 1]());
    } catch (const Error& e) {
      out.push_back({id, "criterion " + std::to_string(id), false, e.what()});
    }
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  char head[64];
  std::snprintf(head, sizeof head, "%s %2d ", r.passed ? "PASS" : "FAIL", r.id);
  return head + r.name + ": " + r.detail;
}

} // namespace blend
