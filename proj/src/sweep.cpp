#include "blend/sweep.hpp"

#include <cmath>

#include "blend/energy1d.hpp"

namespace blend {

std::vector<std::vector<Phase>> enumerate_patterns(int n_max) {
  if (n_max < 1) throw Error(ErrorKind::InvalidConfig, "n_max must be at least 1");
  std::vector<std::vector<Phase>> out;
  for (int n = 1; n <= n_max; ++n) {
    for (Phase first : {Phase::U, Phase::V}) {
      std::vector<Phase> p;
      for (int i = 0; i <= n; ++i) p.push_back(i % 2 == 0 ? first : swapped(first));
      // For odd n the V-first pattern is the mirror image of the U-first one.
      if (n % 2 == 1 && first == Phase::V) continue;
      out.push_back(std::move(p));
    }
  }
  return out;
}

double pattern_energy_per_mass(const std::vector<Phase>& pattern, const Params& params, double M) {
  if (!(params.d_uv() > 0)) throw Error(ErrorKind::ZeroDuv, "energy curves require d_uv > 0");
  if (!(M > 0)) throw Error(ErrorKind::InvalidConfig, "mass must be positive");
  FamilySpec spec = family_of(pattern);
  spec.m = M / spec.n;
  return family_energy(spec, params) / M;
}

std::vector<CurvePoint> curve_for_pattern(const std::vector<Phase>& pattern, const Params& params,
                                          const std::vector<double>& M_grid) {
  std::vector<CurvePoint> out;
  out.reserve(M_grid.size());
  for (double M : M_grid) out.push_back({M, pattern_energy_per_mass(pattern, params, M)});
  return out;
}

Envelope global_envelope(const Params& params, const std::vector<double>& M_grid, int n_max) {
  Envelope env;
  env.patterns = enumerate_patterns(n_max);
  for (const auto& p : env.patterns) env.curves.push_back(curve_for_pattern(p, params, M_grid));

  for (std::size_t k = 0; k < M_grid.size(); ++k) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < env.patterns.size(); ++j)
      if (env.curves[j][k].f_over_m < env.curves[best][k].f_over_m) best = j;
    env.points.push_back({M_grid[k], best, env.curves[best][k].f_over_m});
  }

  for (std::size_t k = 1; k < env.points.size(); ++k) {
    std::size_t a = env.points[k - 1].best, b = env.points[k].best;
    if (a == b) continue;
    auto diff = [&](double M) {
      return pattern_energy_per_mass(env.patterns[a], params, M) -
             pattern_energy_per_mass(env.patterns[b], params, M);
    };
    double lo = env.points[k - 1].M, hi = env.points[k].M;
    double flo = diff(lo);
    while (hi - lo > 1e-8) {
      double mid = 0.5 * (lo + hi);
      double fm = diff(mid);
      if ((fm <= 0) == (flo <= 0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    double M = 0.5 * (lo + hi);
    env.crossovers.push_back({M, a, b, pattern_energy_per_mass(env.patterns[b], params, M)});
  }
  return env;
}

std::vector<double> log_grid(double lo, double hi, int n) {
  if (n < 2 || !(lo > 0) || !(hi > lo)) throw Error(ErrorKind::InvalidConfig, "bad log grid");
  std::vector<double> g(static_cast<std::size_t>(n));
  double a = std::log(lo), b = std::log(hi);
  for (int i = 0; i < n; ++i) g[i] = std::exp(a + (b - a) * i / (n - 1));
  g.front() = lo;
  g.back() = hi;
  return g;
}

std::vector<double> default_mass_grid() { return log_grid(0.05, 100.0, 400); }

} // namespace blend
