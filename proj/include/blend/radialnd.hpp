#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <functional>
#include <vector>

#include "blend/core.hpp"
#include "blend/energy1d.hpp"

namespace blend {

using HighReal = boost::multiprecision::cpp_bin_float_50;

enum class RadialKind { Monolayer, Bilayer, Micelle };

std::string_view to_string(RadialKind k) noexcept;
RadialKind radial_kind_from_string(std::string_view s);

/// Concentric layers in dimension N: layer j occupies R_j < r < R_{j+1} with
/// phase labels[j]. The ball r < R_0 and the exterior r > R_k are H.
struct RadialConfig {
  int N = 3;
  std::vector<double> radii;
  std::vector<Phase> labels;
};

/// Volume of the unit ball and area of the unit sphere in dimension N.
double unit_ball_volume(int N);
double unit_sphere_area(int N);

/// Throws InvalidRadial unless radii increase, labels alternate, and the U and
/// V volumes agree.
void validate_radial(const RadialConfig& rc);

/// Monolayer with given inner band; R_2 follows from equal masses.
RadialConfig radial_monolayer(int N, double R0, double R1, Phase inner = Phase::U);
/// Bilayer with outer bands of phase `outer` and equal inner and outer band
/// masses; R_2, R_3 follow from R_0, R_1.
RadialConfig radial_bilayer(int N, double R0, double R1, Phase outer = Phase::U);
/// Solid core of radius R_1 wrapped in a shell of equal mass.
RadialConfig radial_micelle(int N, double R1, Phase core = Phase::U);

/// Radii from curvature kappa and mass per area m (monolayer or bilayer).
template <class Real>
std::vector<Real> curvature_radii(RadialKind kind, int N, const Real& m, const Real& kappa);
RadialConfig radial_from_curvature(RadialKind kind, int N, double m, double kappa,
                                   Phase inner = Phase::U);

template <class Real>
struct RadialTerms {
  Real interfacial;
  Real nonlocal;
  Real mass; // U volume
};

/// Exact interfacial energy, H^{-1} energy and U mass by closed-form
/// antiderivatives per annulus. Inputs are not validated.
template <class Real>
RadialTerms<Real> radial_terms(int N, const std::vector<Real>& radii, const std::vector<Phase>& labels,
                               const SurfaceTensions& d);

/// Evaluated in 50-digit arithmetic and rounded.
EnergyBreakdown radial_energy(const RadialConfig& rc, const SurfaceTensions& d);
double radial_mass(const RadialConfig& rc);

/// phi with phi = 0 on the inner ball, constant outside R_k.
class RadialPotential {
public:
  explicit RadialPotential(const RadialConfig& rc);
  double value(double r) const;
  double slope(double r) const;

private:
  struct Layer {
    double a, b, q, K, c;
  };
  double lambda(double r) const;
  int N_;
  std::vector<Layer> layers_;
};

RadialPotential radial_potential(const RadialConfig& rc);

/// The appendix formulas for monolayers (micelles are R_0 = 0) and UVU
/// bilayers; `inner` = V exchanges d_u0 and d_v0.
double closed_form_energy(RadialKind kind, const std::vector<double>& radii, int N,
                          const SurfaceTensions& d, Phase inner = Phase::U);

/// Small-curvature expansions of energy per mass.
double expansion_energy(RadialKind kind, double m, double kappa, int N, const SurfaceTensions& d,
                        Phase inner = Phase::U);

/// Exact energy per mass on the curvature parametrisation, 50-digit internally.
double exact_energy_per_mass(RadialKind kind, double m, double kappa, int N, const SurfaceTensions& d,
                             Phase inner = Phase::U);

struct Minimum {
  double x;
  double value;
};

/// Golden-section search for a unimodal f on [a, b].
Minimum golden_section(const std::function<double(double)>& f, double a, double b, double tol = 1e-12);

struct RadialOptimum {
  double argument; // R_1 for micelles, m for shells
  double energy_per_mass;
};

RadialOptimum micelle_optimal(int N, const SurfaceTensions& d, Phase core = Phase::U);
double micelle_closed_form(int N, const SurfaceTensions& d, Phase core = Phase::U);

/// Monolayer of curvature kappa optimised over the layer thickness m.
RadialOptimum shell_optimal(int N, double kappa, const SurfaceTensions& d, Phase inner = Phase::U);

} // namespace blend
