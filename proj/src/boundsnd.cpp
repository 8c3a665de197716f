#include "blend/boundsnd.hpp"

#include <algorithm>
#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>

#include "blend/energy1d.hpp"
#include "blend/potential1d.hpp"

namespace blend {

namespace {

using boost::math::quadrature::gauss_kronrod;
constexpr double kPi = boost::math::constants::pi<double>();

double integrate(const std::function<double(double)>& f, double a, double b, const char* what) {
  double err = 0;
  double v = gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-14, &err);
  if (!std::isfinite(v) || err > 1e-10 * std::max(1.0, std::abs(v)))
    throw Error(ErrorKind::QuadratureFailure, std::string(what) + " did not converge");
  return v;
}

} // namespace

MollifierSpec bump_mollifier(int N) {
  MollifierSpec s;
  s.N = N;
  s.name = "bump";
  s.profile = [](double r) { return r < 1 ? std::exp(-1.0 / (1 - r * r)) : 0.0; };
  s.derivative = [](double r) {
    if (r >= 1) return 0.0;
    double w = 1 - r * r;
    return -2 * r / (w * w) * std::exp(-1.0 / w);
  };
  return s;
}

double sphere_mean_abs_cos(int N) {
  if (N < 1) throw Error(ErrorKind::InvalidConfig, "dimension must be positive");
  if (N == 1) return 1.0;
  auto w = [N](double t) { return std::pow(std::sin(t), N - 2); };
  auto f = [&](double t) { return std::abs(std::cos(t)) * w(t); };
  double num = integrate(f, 0, kPi / 2, "A_N") + integrate(f, kPi / 2, kPi, "A_N");
  double den = integrate(w, 0, kPi / 2, "A_N") + integrate(w, kPi / 2, kPi, "A_N");
  return num / den;
}

MollifierConstants mollifier_constants(const MollifierSpec& spec) {
  if (spec.N < 1 || !spec.profile || !spec.derivative)
    throw Error(ErrorKind::InvalidConfig, "mollifier needs a dimension, profile and derivative");
  const int N = spec.N;
  const double area = unit_sphere_area(N);
  auto radial = [&](auto g) {
    return area * integrate([&](double r) { return g(r) * std::pow(r, N - 1); }, 0, 1, "mollifier integral");
  };
  MollifierConstants k{};
  k.N = N;
  k.A = sphere_mean_abs_cos(N);
  k.mass = radial(spec.profile);
  if (!(k.mass > 0)) throw Error(ErrorKind::QuadratureFailure, "mollifier has no mass");
  k.I_grad = radial([&](double r) { return std::abs(spec.derivative(r)); }) / k.mass;
  k.I_mom = radial([&](double r) { return r * spec.profile(r); }) / k.mass;
  k.C0 = k.A * k.I_mom;
  k.C1 = std::pow(2.0, 4.0 / 3.0) * std::pow(k.A * k.I_grad * k.I_mom, 2.0 / 3.0);
  return k;
}

double MollifierConstants::C2(const Params& params) const {
  return 1.5 / C1 * (std::pow(params.cu(), 2.0 / 3.0) + std::pow(params.cv(), 2.0 / 3.0));
}

namespace {

InterpolationReport finish(InterpolationReport r, const Params& params, const MollifierConstants& k) {
  r.rhs_u = k.C1 * std::cbrt(r.norm_sq) * std::pow(r.perimeter_u, 2.0 / 3.0);
  r.rhs_v = k.C1 * std::cbrt(r.norm_sq) * std::pow(r.perimeter_v, 2.0 / 3.0);
  r.lower = k.C2(params) * r.mass_u;
  r.slack_u = r.rhs_u - r.mass_u;
  r.slack_v = r.rhs_v - r.mass_v;
  r.slack_energy = r.energy - r.lower;
  double tol = 1e-12 * std::max({1.0, r.mass_u, r.energy});
  r.violated = r.slack_u < -tol || r.slack_v < -tol || r.slack_energy < -tol;
  return r;
}

} // namespace

InterpolationReport check_interpolation(const BlockConfig& config, const Params& params,
                                        const MollifierConstants& k) {
  if (k.N != 1) throw Error(ErrorKind::InvalidConfig, "one-dimensional structures need N = 1 constants");
  InterpolationReport r;
  if (config.blocks.empty()) return finish(r, params, k);
  EnergyBreakdown e = total_energy(config, params);
  r.mass_u = phase_mass(config, Phase::U);
  r.mass_v = phase_mass(config, Phase::V);
  r.perimeter_u = e.count_u0 + e.count_uv;
  r.perimeter_v = e.count_v0 + e.count_uv;
  r.norm_sq = e.nonlocal;
  r.energy = e.total;
  return finish(r, params, k);
}

InterpolationReport check_interpolation(const RadialConfig& rc, const Params& params,
                                        const MollifierConstants& k) {
  if (k.N != rc.N) throw Error(ErrorKind::InvalidConfig, "mollifier and structure dimensions differ");
  validate_radial(rc);
  InterpolationReport r;
  EnergyBreakdown e = radial_energy(rc, params.tensions());
  const double area = unit_sphere_area(rc.N);
  auto phase_at = [&](std::size_t j) {
    // Phase on the inside of radius j; the core and exterior are H.
    return j == 0 ? Phase::H : rc.labels[j - 1];
  };
  for (std::size_t j = 0; j < rc.radii.size(); ++j) {
    if (j == 0 && rc.radii[0] == 0) continue;
    Phase in = phase_at(j), out = j < rc.labels.size() ? rc.labels[j] : Phase::H;
    double s = area * std::pow(rc.radii[j], rc.N - 1);
    if (in == Phase::U || out == Phase::U) r.perimeter_u += s;
    if (in == Phase::V || out == Phase::V) r.perimeter_v += s;
  }
  const double ball = unit_ball_volume(rc.N);
  for (std::size_t j = 0; j < rc.labels.size(); ++j) {
    double vol = ball * (std::pow(rc.radii[j + 1], rc.N) - std::pow(rc.radii[j], rc.N));
    if (rc.labels[j] == Phase::U) r.mass_u += vol;
    if (rc.labels[j] == Phase::V) r.mass_v += vol;
  }
  r.norm_sq = e.nonlocal;
  r.energy = e.total;
  return finish(r, params, k);
}

double cutoff_profile(double t) {
  if (t <= 0) return 1.0;
  if (t >= 1) return 0.0;
  return 1.0 - t * t * t * (10 + t * (-15 + 6 * t));
}

double cutoff_profile_integral(double t, double a) {
  if (t < 0) return -cutoff_profile_integral(-t, a);
  if (t <= a) return t;
  double s = std::min(t - a, 1.0);
  return a + s - s * s * s * s * (2.5 + s * (-3 + s));
}

namespace {

// Fourth antiderivative of log r / 4 in both coordinates, up to terms that
// the second differences below annihilate.
long double P4(long double x, long double y) {
  x = std::fabs(x);
  y = std::fabs(y);
  const long double pi = 3.141592653589793238462643383279502884L;
  long double x2 = x * x, y2 = y * y, r2 = x2 + y2;
  long double at = x == 0 ? pi / 2 : std::atan2(y, x);
  long double lg = r2 == 0 ? 0.0L : std::log(r2);
  return pi / 12 * x * y2 * y + (x2 * x * y - x * y2 * y) / 6 * at - 25 * x2 * y2 / 48 +
         (-x2 * x2 / 48 + x2 * y2 / 8 - y2 * y2 / 48) * lg;
}

} // namespace

double log_cell_pair(double dx, double dy, double h) {
  static constexpr int c[3] = {1, -2, 1};
  long double s = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += c[i] * c[j] * P4(dx + (i - 1) * (long double)h, dy + (j - 1) * (long double)h);
  return static_cast<double>(-s / (2 * 3.141592653589793238462643383279502884L));
}

double green_cell_sum(const std::vector<double>& g, const std::vector<double>& c, double h) {
  auto autocorr = [](const std::vector<double>& v) {
    std::vector<double> a(v.size(), 0.0);
    for (std::size_t p = 0; p < v.size(); ++p)
      for (std::size_t i = 0; i + p < v.size(); ++i) a[p] += v[i] * v[i + p];
    return a;
  };
  auto Ag = autocorr(g), Ac = autocorr(c);
  long double s = 0;
  for (std::size_t p = 0; p < Ag.size(); ++p) {
    if (Ag[p] == 0) continue;
    long double row = 0;
    for (std::size_t q = 0; q < Ac.size(); ++q) {
      if (Ac[q] == 0) continue;
      long double w = (q == 0 ? 1 : 2) * Ac[q] * log_cell_pair(p * h, q * h, h);
      row += w;
    }
    s += (p == 0 ? 1 : 2) * Ag[p] * row;
  }
  return static_cast<double>(s);
}

CutoffEnergy cutoff_energy_2d(const CutoffSpec& spec, const Params& params, double h) {
  const BlockConfig& base = spec.base;
  if (base.domain.is_torus()) throw Error(ErrorKind::InvalidConfig, "cutoff bases live on the line");
  require_valid(base);
  if (!(spec.a > 0)) throw Error(ErrorKind::InvalidConfig, "cutoff radius must be positive");
  if (!(h > 0)) throw Error(ErrorKind::InvalidConfig, "grid spacing must be positive");
  if (h > spec.a / 16) throw Error(ErrorKind::GridTooCoarse, "grid spacing exceeds a/16");
  CutoffEnergy out;
  if (base.blocks.empty()) return out;

  auto x = block_edges(base);
  const double width = x.back();
  double moment = 0;
  for (std::size_t i = 0; i < base.blocks.size(); ++i)
    moment += charge(base.blocks[i].phase) * 0.5 * (x[i + 1] * x[i + 1] - x[i] * x[i]);
  if (std::abs(moment) > 1e-12 * width * width)
    throw Error(ErrorKind::InvalidConfig, "base has a nonzero first moment");

  EnergyBreakdown e = total_energy(base, params);
  const double mass = phase_mass(base, Phase::U);
  const double length = 2 * spec.a + 1; // integral of chi_a
  const double jumps = 2;               // integral of |chi_a'|
  double per_u = e.count_u0 + e.count_uv, per_v = e.count_v0 + e.count_uv, per_s = e.count_u0 + e.count_v0;
  out.interfacial = params.c0() * (per_s * length + 2 * mass * jumps) +
                    params.cu() * (per_u * length + mass * jumps) + params.cv() * (per_v * length + mass * jumps);
  out.mass = mass * length;

  // Exact cell averages of the source in each direction.
  auto nx = static_cast<std::size_t>(std::ceil(width / h - 1e-9));
  std::vector<double> g(nx, 0.0);
  for (std::size_t k = 0; k < nx; ++k) {
    double lo = k * h, hi = (k + 1) * h;
    for (std::size_t i = 0; i < base.blocks.size(); ++i) {
      double overlap = std::min(hi, x[i + 1]) - std::max(lo, x[i]);
      if (overlap > 0) g[k] += charge(base.blocks[i].phase) * overlap / h;
    }
  }
  const double half = spec.a + 1;
  auto ny = static_cast<std::size_t>(std::ceil(2 * half / h - 1e-9));
  double y0 = -0.5 * ny * h;
  std::vector<double> c(ny);
  for (std::size_t k = 0; k < ny; ++k)
    c[k] = (cutoff_profile_integral(y0 + (k + 1) * h, spec.a) - cutoff_profile_integral(y0 + k * h, spec.a)) / h;

  out.nonlocal = green_cell_sum(g, c, h);
  out.total = out.interfacial + out.nonlocal;
  out.f_over_m = out.total / out.mass;
  return out;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw Error(ErrorKind::InsufficientPoints, "need two points");
  double n = static_cast<double>(x.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

CutoffRate cutoff_rate(const BlockConfig& base, const Params& params, const std::vector<double>& a_grid,
                       double h_over_a) {
  if (a_grid.size() < 4) throw Error(ErrorKind::InsufficientPoints, "the rate fit needs at least four radii");
  CutoffRate r;
  EnergyBreakdown e = total_energy(base, params);
  r.planar = e.total / phase_mass(base, Phase::U);
  for (double a : a_grid) {
    CutoffEnergy ce = cutoff_energy_2d({base, a}, params, h_over_a * a);
    r.a.push_back(a);
    r.f_over_m.push_back(ce.f_over_m);
    r.deviation.push_back(std::abs(ce.f_over_m - r.planar));
  }
  double worst = *std::max_element(r.deviation.begin(), r.deviation.end());
  if (worst < 1e-10 * std::abs(r.planar)) {
    r.skipped = true;
    r.slope = std::numeric_limits<double>::quiet_NaN();
    return r;
  }
  r.slope = loglog_slope(r.a, r.deviation);
  return r;
}

} // namespace blend
