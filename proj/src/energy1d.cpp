#include "blend/energy1d.hpp"

#include <cmath>
#include <limits>

#include "blend/potential1d.hpp"

namespace blend {

EnergyBreakdown total_energy(const BlockConfig& config, const Params& params) {
  require_valid(config, true);
  EnergyBreakdown e;
  InterfaceCounts c = count_interfaces(config);
  e.count_u0 = c.u0;
  e.count_v0 = c.v0;
  e.count_uv = c.uv;
  e.interfacial = params.d_u0() * c.u0 + params.d_v0() * c.v0 + params.d_uv() * c.uv;
  e.nonlocal = hminus_norm_sq(config);
  e.total = e.interfacial + e.nonlocal;
  return e;
}

std::string_view to_string(Family f) noexcept {
  switch (f) {
  case Family::VUV_V: return "VUV..V";
  case Family::VUV_U: return "VUV..U";
  case Family::UVU_U: return "UVU..U";
  }
  return "?";
}

FamilySpec family_of(const std::vector<Phase>& pattern, double m) {
  if (pattern.size() < 2)
    throw Error(ErrorKind::InvalidConfig, "a family pattern needs at least two blocks");
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (pattern[i] == Phase::H)
      throw Error(ErrorKind::InvalidConfig, "family patterns contain only U and V");
    if (i > 0 && pattern[i] == pattern[i - 1])
      throw Error(ErrorKind::InvalidConfig, "family patterns alternate");
  }
  int n = static_cast<int>(pattern.size()) - 1;
  Family f = Family::VUV_U;
  if (pattern.front() == pattern.back())
    f = pattern.front() == Phase::V ? Family::VUV_V : Family::UVU_U;
  return {f, n, m};
}

std::vector<Phase> family_pattern(Family f, int n) {
  check_parity(f, n);
  Phase first = f == Family::UVU_U ? Phase::U : Phase::V;
  std::vector<Phase> p;
  for (int i = 0; i <= n; ++i) p.push_back(i % 2 == 0 ? first : swapped(first));
  return p;
}

void check_parity(Family f, int n) {
  if (n < 1) throw Error(ErrorKind::ParityMismatch, "monolayer count must be positive");
  bool even = n % 2 == 0;
  if ((f == Family::VUV_U) == even)
    throw Error(ErrorKind::ParityMismatch, std::string(to_string(f)) + " with n = " +
                                               std::to_string(n) + " has the wrong parity");
}

double family_offset(Family f, const Params& params) {
  switch (f) {
  case Family::VUV_V: return 2 * params.d_v0();
  case Family::VUV_U: return params.d_u0() + params.d_v0();
  case Family::UVU_U: return 2 * params.d_u0();
  }
  return 0.0;
}

double family_energy(const FamilySpec& spec, const Params& params) {
  check_parity(spec.family, spec.n);
  if (!(spec.m > 0)) throw Error(ErrorKind::InvalidConfig, "outer width must be positive");
  double n = spec.n, m = spec.m;
  return family_offset(spec.family, params) + n * params.d_uv() + (2.0 * n / 3.0) * m * m * m;
}

BlockConfig build_family_config(const FamilySpec& spec) {
  auto pattern = family_pattern(spec.family, spec.n);
  if (!(spec.m > 0)) throw Error(ErrorKind::InvalidConfig, "outer width must be positive");
  std::vector<double> widths(pattern.size(), 2 * spec.m);
  widths.front() = widths.back() = spec.m;
  return line_config(pattern, widths);
}

double lower_bound(double M, const Params& params) {
  return 2 * (params.c0() + std::min(params.cu(), params.cv())) +
         std::cbrt(4.5) * std::pow(params.d_uv(), 2.0 / 3.0) * M;
}

double optimal_count(double M, const Params& params) {
  if (!(params.d_uv() > 0)) throw Error(ErrorKind::ZeroDuv, "n_0 requires d_uv > 0");
  return M * std::cbrt(4.0 / (3.0 * params.d_uv()));
}

double optimal_width(Family f, int n, const Params& params) {
  check_parity(f, n);
  if (!(params.d_uv() > 0)) throw Error(ErrorKind::ZeroDuv, "m_0 requires d_uv > 0");
  return std::cbrt(3.0 * (family_offset(f, params) + n * params.d_uv()) / (4.0 * n));
}

namespace {

double energy_at(Family f, int n, double M, const Params& params) {
  double m = M / n;
  return family_offset(f, params) + n * params.d_uv() + (2.0 * n / 3.0) * m * m * m;
}

int smallest_admissible(Family f) { return f == Family::VUV_U ? 1 : 2; }

} // namespace

int best_family_n(Family f, double M, const Params& params) {
  if (!(M > 0)) throw Error(ErrorKind::InvalidConfig, "mass must be positive");
  double n0 = optimal_count(M, params);
  int parity = f == Family::VUV_U ? 1 : 0;
  int lo = static_cast<int>(std::floor(n0));
  if ((lo % 2 + 2) % 2 != parity) --lo;
  lo = std::max(lo, smallest_admissible(f));
  int hi = lo >= n0 ? lo : lo + 2;
  // energy_at is convex in n, so the admissible neighbours of n_0 suffice.
  return energy_at(f, hi, M, params) < energy_at(f, lo, M, params) ? hi : lo;
}

MinimalEnergy min_energy_per_mass(double M, const Params& params) {
  MinimalEnergy best{{Family::VUV_U, 1, M}, std::numeric_limits<double>::infinity(), 0.0};
  for (Family f : {Family::VUV_U, Family::UVU_U, Family::VUV_V}) {
    int n = best_family_n(f, M, params);
    double e = energy_at(f, n, M, params);
    if (e < best.energy) best = {{f, n, M / n}, e, e / M};
  }
  return best;
}

} // namespace blend
