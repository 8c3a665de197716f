#include "blend/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace blend {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::NegativeCoefficient: return "NegativeCoefficient";
  case ErrorKind::AllZero: return "AllZero";
  case ErrorKind::TriangleViolation: return "TriangleViolation";
  case ErrorKind::InvalidParams: return "InvalidParams";
  case ErrorKind::InvalidConfig: return "InvalidConfig";
  case ErrorKind::ParityMismatch: return "ParityMismatch";
  case ErrorKind::ZeroDuv: return "ZeroDuv";
  case ErrorKind::NoConvergence: return "NoConvergence";
  case ErrorKind::Infeasible: return "Infeasible";
  case ErrorKind::NotAGap: return "NotAGap";
  case ErrorKind::SlopeNotZero: return "SlopeNotZero";
  case ErrorKind::InvalidRadial: return "InvalidRadial";
  case ErrorKind::RelationViolated: return "RelationViolated";
  case ErrorKind::RadiiCollapse: return "RadiiCollapse";
  case ErrorKind::QuadratureFailure: return "QuadratureFailure";
  case ErrorKind::GridTooCoarse: return "GridTooCoarse";
  case ErrorKind::InsufficientPoints: return "InsufficientPoints";
  }
  return "Unknown";
}

char to_char(Phase p) noexcept {
  switch (p) {
  case Phase::U: return 'U';
  case Phase::V: return 'V';
  case Phase::H: return 'H';
  }
  return '?';
}

Phase phase_from_char(char c) {
  switch (c) {
  case 'U': case 'u': return Phase::U;
  case 'V': case 'v': return Phase::V;
  case 'H': case 'h': case '0': return Phase::H;
  default: break;
  }
  throw Error(ErrorKind::InvalidConfig, std::string("unknown phase '") + c + "'");
}

Phase swapped(Phase p) noexcept {
  if (p == Phase::U) return Phase::V;
  if (p == Phase::V) return Phase::U;
  return Phase::H;
}

std::vector<Phase> parse_pattern(std::string_view text) {
  std::vector<Phase> out;
  out.reserve(text.size());
  for (char c : text) out.push_back(phase_from_char(c));
  return out;
}

std::string pattern_string(const std::vector<Phase>& pattern) {
  std::string s;
  for (Phase p : pattern) s.push_back(to_char(p));
  return s;
}

std::string_view to_string(InterfaceType t) noexcept {
  switch (t) {
  case InterfaceType::U0: return "u0";
  case InterfaceType::V0: return "v0";
  case InterfaceType::UV: return "uv";
  }
  return "?";
}

std::optional<InterfaceType> interface_type(Phase a, Phase b) noexcept {
  if (a == b) return std::nullopt;
  if (a == Phase::H) std::swap(a, b);
  if (b == Phase::H) return a == Phase::U ? InterfaceType::U0 : InterfaceType::V0;
  return InterfaceType::UV;
}

Params Params::from_c(double c0, double cu, double cv) {
  if (!std::isfinite(c0) || !std::isfinite(cu) || !std::isfinite(cv))
    throw Error(ErrorKind::InvalidParams, "coefficients must be finite");
  if (c0 < 0 || cu < 0 || cv < 0)
    throw Error(ErrorKind::NegativeCoefficient, "c0, cu, cv must be nonnegative");
  if (c0 == 0 && cu == 0 && cv == 0)
    throw Error(ErrorKind::AllZero, "at least one coefficient must be positive");
  return Params(c0, cu, cv);
}

Params Params::from_d(double d_u0, double d_v0, double d_uv) {
  if (!std::isfinite(d_u0) || !std::isfinite(d_v0) || !std::isfinite(d_uv))
    throw Error(ErrorKind::InvalidParams, "surface tensions must be finite");
  double c0 = 0.5 * (d_u0 + d_v0 - d_uv);
  double cu = 0.5 * (d_u0 + d_uv - d_v0);
  double cv = 0.5 * (d_v0 + d_uv - d_u0);
  double scale = std::max({std::abs(d_u0), std::abs(d_v0), std::abs(d_uv)});
  double slack = kRelTol * scale;
  if (c0 < -slack || cu < -slack || cv < -slack) {
    std::ostringstream os;
    os << "d = (" << d_u0 << ", " << d_v0 << ", " << d_uv << ") violates the triangle conditions";
    throw Error(ErrorKind::TriangleViolation, os.str());
  }
  return from_c(std::max(c0, 0.0), std::max(cu, 0.0), std::max(cv, 0.0));
}

bool Params::satisfies_triangle_conditions() const noexcept {
  double a = d_u0(), b = d_v0(), c = d_uv();
  double slack = kRelTol * std::max({a, b, c});
  return a >= 0 && b >= 0 && c >= 0 && a <= b + c + slack && b <= a + c + slack &&
         c <= a + b + slack;
}

bool ValidationReport::has(Violation::Kind k) const noexcept {
  return std::any_of(violations.begin(), violations.end(),
                     [k](const Violation& v) { return v.kind == k; });
}

ValidationReport validate_config(const BlockConfig& config) {
  ValidationReport rep;
  auto add = [&](Violation::Kind k, std::string msg) { rep.violations.push_back({k, std::move(msg)}); };
  const auto& b = config.blocks;
  const bool torus = config.domain.is_torus();

  if (torus && !(std::isfinite(config.domain.length) && config.domain.length > 0))
    add(Violation::Kind::BadDomain, "torus length must be positive");

  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!(std::isfinite(b[i].width) && b[i].width > 0))
      add(Violation::Kind::NonPositiveWidth, "block " + std::to_string(i) + " has non-positive width");
  }

  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    if (b[i].phase == b[i + 1].phase)
      add(Violation::Kind::EqualNeighbours,
          "blocks " + std::to_string(i) + " and " + std::to_string(i + 1) + " share a phase");
  }
  if (!b.empty()) {
    if (torus) {
      if (b.size() > 1 && b.front().phase == b.back().phase)
        add(Violation::Kind::EqualNeighbours, "first and last block share a phase across the seam");
    } else {
      if (b.front().phase == Phase::H)
        add(Violation::Kind::EqualNeighbours, "leading H block merges with the exterior");
      if (b.back().phase == Phase::H)
        add(Violation::Kind::EqualNeighbours, "trailing H block merges with the exterior");
    }
  }

  double mu = phase_mass(config, Phase::U);
  double mv = phase_mass(config, Phase::V);
  if (std::abs(mu - mv) > kRelTol * std::max({mu, mv, 1.0})) {
    std::ostringstream os;
    os << "U mass " << mu << " differs from V mass " << mv;
    add(Violation::Kind::MassImbalance, os.str());
  }

  if (torus && config.domain.length > 0) {
    double w = total_width(config);
    if (std::abs(w - config.domain.length) > kRelTol * config.domain.length) {
      std::ostringstream os;
      os << "widths sum to " << w << " but the torus has length " << config.domain.length;
      add(Violation::Kind::TorusLength, os.str());
    }
    if (b.empty()) add(Violation::Kind::TorusLength, "torus configuration has no blocks");
  }
  return rep;
}

void require_valid(const BlockConfig& config, bool allow_equal_neighbours) {
  for (const auto& v : validate_config(config).violations) {
    if (allow_equal_neighbours && v.kind == Violation::Kind::EqualNeighbours) continue;
    throw Error(ErrorKind::InvalidConfig, v.message);
  }
}

double total_width(const BlockConfig& config) noexcept {
  double s = 0;
  for (const auto& b : config.blocks) s += b.width;
  return s;
}

double phase_mass(const BlockConfig& config, Phase p) noexcept {
  double s = 0;
  for (const auto& b : config.blocks)
    if (b.phase == p) s += b.width;
  return s;
}

std::vector<double> block_edges(const BlockConfig& config) {
  std::vector<double> x(config.blocks.size() + 1, 0.0);
  for (std::size_t i = 0; i < config.blocks.size(); ++i) x[i + 1] = x[i] + config.blocks[i].width;
  return x;
}

std::vector<Interface> interfaces(const BlockConfig& config) {
  std::vector<Interface> out;
  const auto& b = config.blocks;
  if (b.empty()) return out;
  auto x = block_edges(config);
  auto push = [&](double pos, Phase l, Phase r) {
    if (auto t = interface_type(l, r)) out.push_back({pos, l, r, *t});
  };
  if (config.domain.is_torus()) {
    push(0.0, b.back().phase, b.front().phase);
  } else {
    push(0.0, Phase::H, b.front().phase);
  }
  for (std::size_t i = 0; i + 1 < b.size(); ++i) push(x[i + 1], b[i].phase, b[i + 1].phase);
  if (!config.domain.is_torus()) push(x.back(), b.back().phase, Phase::H);
  return out;
}

InterfaceCounts count_interfaces(const BlockConfig& config) {
  InterfaceCounts c;
  for (const auto& i : interfaces(config)) {
    switch (i.type) {
    case InterfaceType::U0: ++c.u0; break;
    case InterfaceType::V0: ++c.v0; break;
    case InterfaceType::UV: ++c.uv; break;
    }
  }
  return c;
}

BlockConfig mirror(const BlockConfig& config) {
  BlockConfig out = config;
  std::reverse(out.blocks.begin(), out.blocks.end());
  return out;
}

BlockConfig swap_phases(const BlockConfig& config) {
  BlockConfig out = config;
  for (auto& b : out.blocks) b.phase = swapped(b.phase);
  return out;
}

BlockConfig dilate(const BlockConfig& config, double factor) {
  BlockConfig out = config;
  for (auto& b : out.blocks) b.width *= factor;
  if (out.domain.is_torus()) out.domain.length *= factor;
  return out;
}

BlockConfig normalize(const BlockConfig& config) {
  BlockConfig out{config.domain, {}};
  for (const auto& b : config.blocks) {
    if (!(b.width > 0)) continue;
    if (!out.blocks.empty() && out.blocks.back().phase == b.phase)
      out.blocks.back().width += b.width;
    else
      out.blocks.push_back(b);
  }
  auto& v = out.blocks;
  if (config.domain.is_torus()) {
    if (v.size() > 1 && v.front().phase == v.back().phase) {
      // The merged block straddles the seam; it becomes block 0, which
      // rotates the content right by the tail width.
      double tail = v.back().width;
      v.pop_back();
      v.front().width += tail;
    }
  } else {
    while (!v.empty() && v.front().phase == Phase::H) v.erase(v.begin());
    while (!v.empty() && v.back().phase == Phase::H) v.pop_back();
  }
  return out;
}

BlockConfig rotate(const BlockConfig& config, double shift) {
  if (!config.domain.is_torus())
    throw Error(ErrorKind::InvalidConfig, "rotate requires a torus configuration");
  const double L = config.domain.length;
  double s = std::fmod(shift, L);
  if (s < 0) s += L;
  if (s == 0 || config.blocks.empty()) return config;
  // New coordinate y = x + s; the seam (y = 0) sits at old x = L - s.
  double cut = L - s;
  auto x = block_edges(config);
  BlockConfig out{config.domain, {}};
  std::vector<Block> head, tail;
  for (std::size_t i = 0; i < config.blocks.size(); ++i) {
    double a = x[i], b = x[i + 1];
    Phase p = config.blocks[i].phase;
    if (b <= cut) {
      tail.push_back({p, b - a});
    } else if (a >= cut) {
      head.push_back({p, b - a});
    } else {
      tail.push_back({p, cut - a});
      head.push_back({p, b - cut});
    }
  }
  out.blocks = head;
  out.blocks.insert(out.blocks.end(), tail.begin(), tail.end());
  return out;
}

BlockConfig line_config(const std::vector<Phase>& pattern, const std::vector<double>& widths) {
  if (pattern.size() != widths.size())
    throw Error(ErrorKind::InvalidConfig, "pattern and widths differ in length");
  BlockConfig c{Domain::line(), {}};
  for (std::size_t i = 0; i < pattern.size(); ++i) c.blocks.push_back({pattern[i], widths[i]});
  return c;
}

} // namespace blend
