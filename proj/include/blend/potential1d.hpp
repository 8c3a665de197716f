#pragma once

#include <vector>

#include "blend/core.hpp"

namespace blend {

/// Exact Poisson potential of u - v for a block configuration: one quadratic
/// per block. Coefficients are kept about each interval's left end,
///   phi(x) = c + b (x - x_l) + a (x - x_l)^2,
/// which avoids cancellation far from the origin; global() converts.
class PiecewisePotential {
public:
  struct Piece {
    double a, b, c;
  };
  struct Coefficients {
    double a, b, c; // phi(x) = a x^2 + b x + c
  };

  PiecewisePotential(Domain domain, std::vector<double> breakpoints, std::vector<Piece> pieces);

  const Domain& domain() const noexcept { return domain_; }
  const std::vector<double>& breakpoints() const noexcept { return x_; }
  const std::vector<Piece>& pieces() const noexcept { return pieces_; }
  Coefficients global(std::size_t i) const noexcept;

  /// On the line phi is constant outside the support; on the torus x is
  /// reduced modulo L. A breakpoint belongs to its left interval.
  double value(double x) const noexcept;
  double slope(double x) const noexcept;

  /// Integral of phi' squared over the whole domain.
  double dirichlet_energy() const noexcept;

private:
  std::size_t locate(double& x) const noexcept;

  Domain domain_;
  std::vector<double> x_;
  std::vector<Piece> pieces_;
};

/// Potential on the line with phi' = -int_{-inf}^x (u - v) and phi(x_0) = 0.
/// `origin` places the left end of block 0.
PiecewisePotential potential_line(const BlockConfig& config, double origin = 0.0);

/// Periodic potential on the torus with zero mean.
PiecewisePotential potential_torus(const BlockConfig& config);

/// Dispatches on the domain.
PiecewisePotential potential(const BlockConfig& config);

/// Squared H^{-1} norm of u - v, the exact integral of phi'^2.
double hminus_norm_sq(const BlockConfig& config);

struct PotentialSample {
  double x, phi, dphi;
};

/// Values at the breakpoints, merged with `samples` uniform points across the
/// block range when samples > 0. Sorted by x.
std::vector<PotentialSample> sample_potential(const PiecewisePotential& pot, int samples = 0);

} // namespace blend
