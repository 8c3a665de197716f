#include "blend/potential1d.hpp"

#include <algorithm>
#include <cmath>

namespace blend {

PiecewisePotential::PiecewisePotential(Domain domain, std::vector<double> breakpoints,
                                       std::vector<Piece> pieces)
    : domain_(domain), x_(std::move(breakpoints)), pieces_(std::move(pieces)) {}

PiecewisePotential::Coefficients PiecewisePotential::global(std::size_t i) const noexcept {
  const Piece& p = pieces_[i];
  double xl = x_[i];
  return {p.a, p.b - 2 * p.a * xl, p.c - p.b * xl + p.a * xl * xl};
}

std::size_t PiecewisePotential::locate(double& x) const noexcept {
  if (domain_.is_torus()) {
    double L = domain_.length;
    x = std::fmod(x, L);
    if (x < 0) x += L;
    if (x == 0) x = L; // seam belongs to the last interval
  }
  auto it = std::lower_bound(x_.begin() + 1, x_.end(), x);
  if (it == x_.end()) return pieces_.size() - 1;
  return static_cast<std::size_t>(it - x_.begin()) - 1;
}

double PiecewisePotential::value(double x) const noexcept {
  if (pieces_.empty()) return 0.0;
  if (!domain_.is_torus()) {
    if (x <= x_.front()) return pieces_.front().c;
    if (x > x_.back()) x = x_.back();
  }
  std::size_t i = locate(x);
  const Piece& p = pieces_[i];
  double t = x - x_[i];
  return p.c + t * (p.b + t * p.a);
}

double PiecewisePotential::slope(double x) const noexcept {
  if (pieces_.empty()) return 0.0;
  if (!domain_.is_torus() && (x <= x_.front() || x > x_.back())) return 0.0;
  std::size_t i = locate(x);
  const Piece& p = pieces_[i];
  return p.b + 2 * p.a * (x - x_[i]);
}

double PiecewisePotential::dirichlet_energy() const noexcept {
  double s = 0;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    double w = x_[i + 1] - x_[i];
    double g0 = pieces_[i].b;
    double g1 = g0 + 2 * pieces_[i].a * w;
    s += w * (g0 * g0 + g0 * g1 + g1 * g1) / 3.0;
  }
  return s;
}

namespace {

// Integrates phi' = g - q t block by block from slope g0 and value 0.
std::vector<PiecewisePotential::Piece> integrate(const BlockConfig& config, double g0) {
  std::vector<PiecewisePotential::Piece> pieces;
  pieces.reserve(config.blocks.size());
  double g = g0, c = 0;
  for (const auto& b : config.blocks) {
    double q = charge(b.phase);
    double a = -0.5 * q;
    pieces.push_back({a, g, c});
    c += b.width * (g + a * b.width);
    g -= q * b.width;
  }
  return pieces;
}

} // namespace

PiecewisePotential potential_line(const BlockConfig& config, double origin) {
  if (config.domain.is_torus())
    throw Error(ErrorKind::InvalidConfig, "potential_line needs a line configuration");
  require_valid(config, true);
  auto x = block_edges(config);
  for (double& xi : x) xi += origin;
  return PiecewisePotential(config.domain, std::move(x), integrate(config, 0.0));
}

PiecewisePotential potential_torus(const BlockConfig& config) {
  if (!config.domain.is_torus())
    throw Error(ErrorKind::InvalidConfig, "potential_torus needs a torus configuration");
  require_valid(config, true);
  const double L = config.domain.length;

  // F(x) = int_0^x (u - v); phi' = C - F with C the mean of F.
  double F = 0, intF = 0;
  for (const auto& b : config.blocks) {
    double q = charge(b.phase);
    intF += b.width * (F + 0.5 * q * b.width);
    F += q * b.width;
  }
  double C = intF / L;

  auto pieces = integrate(config, C);
  auto x = block_edges(config);
  double mean = 0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    double w = x[i + 1] - x[i];
    mean += w * (pieces[i].c + w * (pieces[i].b / 2 + w * pieces[i].a / 3));
  }
  mean /= L;
  for (auto& p : pieces) p.c -= mean;
  x.back() = L;
  return PiecewisePotential(config.domain, std::move(x), std::move(pieces));
}

PiecewisePotential potential(const BlockConfig& config) {
  return config.domain.is_torus() ? potential_torus(config) : potential_line(config);
}

double hminus_norm_sq(const BlockConfig& config) { return potential(config).dirichlet_energy(); }

std::vector<PotentialSample> sample_potential(const PiecewisePotential& pot, int samples) {
  std::vector<double> xs = pot.breakpoints();
  if (samples > 0 && xs.size() > 1) {
    double lo = xs.front(), hi = xs.back();
    for (int k = 0; k < samples; ++k)
      xs.push_back(samples == 1 ? lo : lo + (hi - lo) * k / (samples - 1));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  }
  std::vector<PotentialSample> out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back({x, pot.value(x), pot.slope(x)});
  return out;
}

} // namespace blend
