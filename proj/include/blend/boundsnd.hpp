#pragma once

#include <functional>
#include <string>
#include <vector>

#include "blend/core.hpp"
#include "blend/radialnd.hpp"

namespace blend {

/// Radial mollifier profile on [0, 1), not necessarily normalised; the
/// derivative is needed for the gradient integral.
struct MollifierSpec {
  int N = 2;
  std::string name = "bump";
  std::function<double(double)> profile;
  std::function<double(double)> derivative;
};

/// exp(-1 / (1 - r^2)) on the unit ball.
MollifierSpec bump_mollifier(int N);

struct MollifierConstants {
  int N;
  double A;         // mean of |e . w| over the unit sphere
  double mass;      // integral of the unnormalised profile
  double I_grad;    // integral of |grad kappa|
  double I_mom;     // integral of |y| kappa(y)
  double C0;
  double C1;
  double C2(const Params& params) const;
};

/// A_N by quadrature over the polar angle; A_1 = 1.
double sphere_mean_abs_cos(int N);

MollifierConstants mollifier_constants(const MollifierSpec& spec);

struct InterpolationReport {
  double mass_u = 0, mass_v = 0;
  double perimeter_u = 0, perimeter_v = 0;
  double norm_sq = 0;
  double energy = 0;
  double rhs_u = 0, rhs_v = 0; // C1 (norm^2)^{1/3} P^{2/3}
  double lower = 0;            // C2 times the mass
  double slack_u = 0, slack_v = 0, slack_energy = 0;
  bool violated = false;
};

/// Both sides of the mass interpolation inequality (for u and for v) and the
/// lower mass bound on F_1. The constants must be for the matching dimension
/// (N = 1 on the line).
InterpolationReport check_interpolation(const BlockConfig& config, const Params& params,
                                        const MollifierConstants& k);
InterpolationReport check_interpolation(const RadialConfig& rc, const Params& params,
                                        const MollifierConstants& k);

/// A planar structure on the line extended to the plane as base(xi) chi_a(eta)
/// with chi_a(eta) = chi(|eta| - a) and chi the mirrored smoothstep.
struct CutoffSpec {
  BlockConfig base;
  double a;
};

double cutoff_profile(double t);

/// Integral of chi_a over (0, t), extended as an odd function.
double cutoff_profile_integral(double t, double a);

/// Integral over two h-squares, offset by (dx, dy), of -log|x - y| / (2 pi).
double log_cell_pair(double dx, double dy, double h);

/// Sum over cell pairs of a separable density g_i c_k on an h-grid.
double green_cell_sum(const std::vector<double>& g, const std::vector<double>& c, double h);

struct CutoffEnergy {
  double mass = 0;
  double interfacial = 0;
  double nonlocal = 0;
  double total = 0;
  double f_over_m = 0;
};

/// Interfacial terms and mass exactly; the H^{-1} term by cell quadrature of
/// the logarithmic kernel on a grid of spacing h.
CutoffEnergy cutoff_energy_2d(const CutoffSpec& spec, const Params& params, double h);

struct CutoffRate {
  std::vector<double> a;
  std::vector<double> f_over_m;
  std::vector<double> deviation;
  double planar = 0;
  double slope = 0;
  bool skipped = false;
};

/// Least-squares slope of log |F/M(a) - planar| against log a, with grid
/// spacing h = h_over_a * a.
CutoffRate cutoff_rate(const BlockConfig& base, const Params& params, const std::vector<double>& a_grid,
                       double h_over_a = 1.0 / 32.0);

/// Least-squares slope of log y against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

} // namespace blend
