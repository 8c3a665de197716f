#pragma once

#include <string>
#include <vector>

#include "blend/core.hpp"

namespace blend {

/// Alternating U/V patterns with 1..n_max monolayers, one representative per
/// mirror pair, ordered by length and then U-first.
std::vector<std::vector<Phase>> enumerate_patterns(int n_max);

struct CurvePoint {
  double M;
  double f_over_m;
};

/// Energy per mass of a pattern at the family widths m = M/n.
std::vector<CurvePoint> curve_for_pattern(const std::vector<Phase>& pattern, const Params& params,
                                          const std::vector<double>& M_grid);

double pattern_energy_per_mass(const std::vector<Phase>& pattern, const Params& params, double M);

struct EnvelopePoint {
  double M;
  std::size_t best; // index into Envelope::patterns
  double f_over_m;
};

struct Crossover {
  double M;
  std::size_t from;
  std::size_t to;
  double f_over_m;
};

struct Envelope {
  std::vector<std::vector<Phase>> patterns;
  std::vector<std::vector<CurvePoint>> curves;
  std::vector<EnvelopePoint> points;
  std::vector<Crossover> crossovers;
};

/// Pointwise minimum over the enumerated patterns; switches of the best
/// pattern between neighbouring grid points are refined by bisection.
Envelope global_envelope(const Params& params, const std::vector<double>& M_grid, int n_max);

/// n points spaced evenly in log M over [lo, hi].
std::vector<double> log_grid(double lo, double hi, int n);

/// 400 points over [0.05, 100].
std::vector<double> default_mass_grid();

} // namespace blend
