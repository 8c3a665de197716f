#include "blend/stationary1d.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>

#include "blend/energy1d.hpp"
#include "blend/potential1d.hpp"

namespace blend {

namespace {

double u_of(Phase p) { return p == Phase::U ? 1.0 : 0.0; }
double v_of(Phase p) { return p == Phase::V ? 1.0 : 0.0; }

std::vector<double> gradient_from(const PiecewisePotential& pot, const std::vector<Interface>& ifs) {
  std::vector<double> g;
  g.reserve(ifs.size());
  for (const auto& i : ifs) g.push_back(2.0 * pot.value(i.position) * (charge(i.left) - charge(i.right)));
  return g;
}

} // namespace

std::vector<double> interface_gradient(const BlockConfig& config) {
  return gradient_from(potential(config), interfaces(config));
}

StationarityReport stationarity_report(const BlockConfig& config, const Params& params) {
  (void)params; // interfacial terms do not move under interior shifts
  require_valid(config, true);
  StationarityReport rep;
  auto pot = potential(config);
  auto ifs = interfaces(config);

  std::map<InterfaceType, std::pair<double, double>> range;
  for (const auto& i : ifs) {
    double phi = pot.value(i.position);
    rep.phi_at_interfaces.push_back({i.position, i.type, phi});
    auto [it, fresh] = range.try_emplace(i.type, phi, phi);
    if (!fresh) {
      it->second.first = std::min(it->second.first, phi);
      it->second.second = std::max(it->second.second, phi);
    }
  }
  for (const auto& [type, r] : range)
    rep.equal_phi_residual = std::max(rep.equal_phi_residual, r.second - r.first);

  const auto n = static_cast<Eigen::Index>(ifs.size());
  if (n == 0) return rep;
  Eigen::VectorXd g(n);
  Eigen::MatrixXd A(n, 2);
  auto grad = gradient_from(pot, ifs);
  for (Eigen::Index i = 0; i < n; ++i) {
    g(i) = grad[i];
    A(i, 0) = u_of(ifs[i].left) - u_of(ifs[i].right);
    A(i, 1) = v_of(ifs[i].left) - v_of(ifs[i].right);
  }
  Eigen::VectorXd coef = A.completeOrthogonalDecomposition().solve(g);
  rep.projected_gradient_norm = (g - A * coef).norm();
  return rep;
}

namespace {

struct WidthProblem {
  std::vector<Phase> pattern;
  double M;
  Domain domain;
  std::vector<int> free;
  int dep_u = -1, dep_v = -1;

  std::vector<double> widths(const Eigen::VectorXd& z) const {
    std::vector<double> w(pattern.size(), 0.0);
    double su = 0, sv = 0;
    for (Eigen::Index k = 0; k < z.size(); ++k) {
      int i = free[k];
      w[i] = z(k);
      (pattern[i] == Phase::U ? su : sv) += z(k);
    }
    w[dep_u] = M - su;
    w[dep_v] = M - sv;
    return w;
  }

  BlockConfig config(const std::vector<double>& w) const {
    BlockConfig c{domain, {}};
    for (std::size_t i = 0; i < w.size(); ++i) c.blocks.push_back({pattern[i], w[i]});
    if (domain.is_torus()) {
      double gap = domain.length - 2 * M;
      if (gap > kRelTol * domain.length) c.blocks.push_back({Phase::H, gap});
    }
    return c;
  }

  int dependent(int k) const { return pattern[k] == Phase::U ? dep_u : dep_v; }

  // Derivative of F_1 along each free width with its dependent block
  // absorbing the change; interface j sits at the left edge of block j.
  Eigen::VectorXd residual(const std::vector<double>& w) const {
    BlockConfig c = config(w);
    auto g = interface_gradient(c);
    Eigen::VectorXd r(static_cast<Eigen::Index>(free.size()));
    for (std::size_t k = 0; k < free.size(); ++k) {
      int i = free[k], d = dependent(i);
      double s = 0;
      if (d > i)
        for (int j = i + 1; j <= d; ++j) s += g[j];
      else
        for (int j = d + 1; j <= i; ++j) s -= g[j];
      r(static_cast<Eigen::Index>(k)) = s;
    }
    return r;
  }
};

double min_width(const std::vector<double>& w) { return *std::min_element(w.begin(), w.end()); }

} // namespace

SolveResult solve_stationary(const std::vector<Phase>& pattern, double M, const Domain& domain,
                             const Params& params, const std::optional<std::vector<double>>& initial_widths) {
  if (pattern.size() < 2) throw Error(ErrorKind::InvalidConfig, "pattern needs at least two blocks");
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (pattern[i] == Phase::H) throw Error(ErrorKind::InvalidConfig, "pattern must consist of U and V");
    if (i > 0 && pattern[i] == pattern[i - 1])
      throw Error(ErrorKind::InvalidConfig, "pattern must alternate");
  }
  if (!(M > 0) || !std::isfinite(M)) throw Error(ErrorKind::InvalidConfig, "mass must be positive");
  if (domain.is_torus()) {
    double L = domain.length;
    if (!(L > 0)) throw Error(ErrorKind::InvalidConfig, "torus length must be positive");
    double gap = L - 2 * M;
    if (gap < -kRelTol * L) throw Error(ErrorKind::Infeasible, "2M exceeds the torus length");
    if (gap <= kRelTol * L && pattern.front() == pattern.back())
      throw Error(ErrorKind::Infeasible, "pattern closes on itself without an H gap");
  }

  WidthProblem P{pattern, M, domain, {}};
  for (int i = static_cast<int>(pattern.size()) - 1; i >= 0; --i) {
    if (pattern[i] == Phase::U && P.dep_u < 0) P.dep_u = i;
    if (pattern[i] == Phase::V && P.dep_v < 0) P.dep_v = i;
  }
  for (int i = 0; i < static_cast<int>(pattern.size()); ++i)
    if (i != P.dep_u && i != P.dep_v) P.free.push_back(i);

  std::vector<double> w0;
  if (initial_widths) {
    w0 = *initial_widths;
    if (w0.size() != pattern.size())
      throw Error(ErrorKind::InvalidConfig, "initial widths do not match the pattern");
    require_valid(P.config(w0));
  } else {
    double n = static_cast<double>(pattern.size() - 1);
    w0.assign(pattern.size(), 2 * M / n);
    w0.front() = w0.back() = M / n;
  }

  Eigen::VectorXd z(static_cast<Eigen::Index>(P.free.size()));
  for (std::size_t k = 0; k < P.free.size(); ++k) z(static_cast<Eigen::Index>(k)) = w0[P.free[k]];

  SolveResult out;
  const double scale = std::max(1.0, M * M);
  std::vector<double> w = P.widths(z);
  Eigen::VectorXd r = P.residual(w);
  int it = 0;
  for (; it < 100 && z.size() > 0; ++it) {
    if (r.lpNorm<Eigen::Infinity>() <= 1e-14 * scale) break;
    // r is quadratic in the widths, so central differences are exact up to
    // rounding for any step that keeps the blocks positive.
    double h = 0.1 * min_width(w);
    Eigen::MatrixXd J(z.size(), z.size());
    for (Eigen::Index k = 0; k < z.size(); ++k) {
      Eigen::VectorXd zp = z, zm = z;
      zp(k) += h;
      zm(k) -= h;
      J.col(k) = (P.residual(P.widths(zp)) - P.residual(P.widths(zm))) / (2 * h);
    }
    Eigen::VectorXd step = J.fullPivLu().solve(-r);
    if (!step.allFinite()) break;
    double t = 1.0;
    bool accepted = false;
    for (int ls = 0; ls < 40; ++ls, t *= 0.5) {
      Eigen::VectorXd zt = z + t * step;
      auto wt = P.widths(zt);
      if (min_width(wt) <= 0) continue;
      Eigen::VectorXd rt = P.residual(wt);
      if (rt.norm() < r.norm() || t * step.norm() < 1e-15 * std::max(1.0, z.norm())) {
        z = zt;
        w = std::move(wt);
        r = rt;
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
  }

  out.config = P.config(w);
  out.iterations = it;
  auto rep = stationarity_report(out.config, params);
  out.residual = std::max(rep.equal_phi_residual, rep.projected_gradient_norm);
  if (!(out.residual < 1e-10) || !validate_config(out.config).ok())
    throw Error(ErrorKind::NoConvergence, "Newton iteration stalled with residual " +
                                              std::to_string(out.residual));
  return out;
}

SplitJoinResult split_at(const BlockConfig& config, const Params& params, double x, double gap) {
  if (config.domain.is_torus()) throw Error(ErrorKind::InvalidConfig, "split is defined on the line");
  require_valid(config);
  if (!(gap > 0)) throw Error(ErrorKind::InvalidConfig, "gap width must be positive");
  auto edges = block_edges(config);
  std::size_t k = config.blocks.size();
  for (std::size_t i = 0; i < config.blocks.size(); ++i)
    if (x > edges[i] && x < edges[i + 1]) k = i;
  if (k == config.blocks.size())
    throw Error(ErrorKind::InvalidConfig, "split point is not inside a block");
  Phase p = config.blocks[k].phase;
  if (p == Phase::H) throw Error(ErrorKind::InvalidConfig, "split point lies in an H block");
  double slope = potential_line(config).slope(x);
  if (std::abs(slope) >= 1e-10)
    throw Error(ErrorKind::SlopeNotZero, "phi' = " + std::to_string(slope) + " at the split point");

  BlockConfig out{config.domain, {}};
  for (std::size_t i = 0; i < config.blocks.size(); ++i) {
    if (i != k) {
      out.blocks.push_back(config.blocks[i]);
      continue;
    }
    out.blocks.push_back({p, x - edges[i]});
    out.blocks.push_back({Phase::H, gap});
    out.blocks.push_back({p, edges[i + 1] - x});
  }
  double delta = total_energy(out, params).total - total_energy(config, params).total;
  return {out, delta};
}

SplitJoinResult join_gap(const BlockConfig& config, const Params& params, std::size_t gap_block,
                         double a) {
  require_valid(config);
  const auto& b = config.blocks;
  if (gap_block >= b.size() || b[gap_block].phase != Phase::H)
    throw Error(ErrorKind::NotAGap, "block " + std::to_string(gap_block) + " is not an H gap");
  double width = b[gap_block].width;
  if (!(a > 0) || a > width * (1 + kRelTol))
    throw Error(ErrorKind::InvalidConfig, "join distance must lie in (0, gap width]");
  bool closes = a >= width * (1 - kRelTol);

  BlockConfig out = config;
  out.blocks[gap_block].width = closes ? 0.0 : width - a;
  if (config.domain.is_torus()) {
    std::size_t j = gap_block;
    for (std::size_t s = 1; s < b.size(); ++s) {
      std::size_t c = (gap_block + s) % b.size();
      if (b[c].phase == Phase::H) {
        j = c;
        break;
      }
    }
    if (j == gap_block) throw Error(ErrorKind::NotAGap, "torus join needs a second H gap to grow");
    out.blocks[j].width += closes ? width : a;
  }
  out = normalize(out);
  double delta = total_energy(out, params).total - total_energy(config, params).total;
  return {out, delta};
}

} // namespace blend
