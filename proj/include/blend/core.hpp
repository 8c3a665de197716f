#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "blend/error.hpp"

namespace blend {

/// Relative tolerance used for equality checks on stored reals.
inline constexpr double kRelTol = 1e-12;

enum class Phase { U, V, H };

/// Charge of a phase in the source term u - v.
constexpr int charge(Phase p) noexcept {
  switch (p) {
  case Phase::U: return 1;
  case Phase::V: return -1;
  case Phase::H: return 0;
  }
  return 0;
}

char to_char(Phase p) noexcept;
Phase phase_from_char(char c);
Phase swapped(Phase p) noexcept;

std::vector<Phase> parse_pattern(std::string_view text);
std::string pattern_string(const std::vector<Phase>& pattern);

enum class InterfaceType { U0, V0, UV };

std::string_view to_string(InterfaceType t) noexcept;

/// Type of the interface between two phases, or nothing for equal phases.
std::optional<InterfaceType> interface_type(Phase a, Phase b) noexcept;

/// Raw surface tensions. Kept separate from Params so that the radial formulas
/// can be evaluated at triples outside the admissible cone.
struct SurfaceTensions {
  double d_u0 = 0.0;
  double d_v0 = 0.0;
  double d_uv = 0.0;

  double of(InterfaceType t) const noexcept {
    switch (t) {
    case InterfaceType::U0: return d_u0;
    case InterfaceType::V0: return d_v0;
    case InterfaceType::UV: return d_uv;
    }
    return 0.0;
  }
  SurfaceTensions swapped() const noexcept { return {d_v0, d_u0, d_uv}; }
};

/// Interface coefficients (c0, cu, cv) together with the surface tensions they
/// induce. Only admissible triples can be constructed.
class Params {
public:
  static Params from_c(double c0, double cu, double cv);
  static Params from_d(double d_u0, double d_v0, double d_uv);

  double c0() const noexcept { return c0_; }
  double cu() const noexcept { return cu_; }
  double cv() const noexcept { return cv_; }
  double d_u0() const noexcept { return cu_ + c0_; }
  double d_v0() const noexcept { return cv_ + c0_; }
  double d_uv() const noexcept { return cu_ + cv_; }
  SurfaceTensions tensions() const noexcept { return {d_u0(), d_v0(), d_uv()}; }

  /// U and V exchanged: (c0, cv, cu).
  Params swapped() const noexcept { return Params(c0_, cv_, cu_); }

  /// Checks 0 <= d_kl <= d_kj + d_jl for every pair k != l.
  bool satisfies_triangle_conditions() const noexcept;

private:
  Params(double c0, double cu, double cv) : c0_(c0), cu_(cu), cv_(cv) {}
  double c0_, cu_, cv_;
};

struct Domain {
  enum class Kind { Line, Torus };
  Kind kind = Kind::Line;
  double length = 0.0; // torus only

  static Domain line() { return {Kind::Line, 0.0}; }
  static Domain torus(double L) { return {Kind::Torus, L}; }
  bool is_torus() const noexcept { return kind == Kind::Torus; }
};

struct Block {
  Phase phase;
  double width;
};

/// Ordered phase-labelled intervals. On the line block 0 starts at 0 and the
/// H phase extends to +-infinity on both sides; on the torus block 0 starts at
/// 0 and the widths fill [0, L).
struct BlockConfig {
  Domain domain;
  std::vector<Block> blocks;
};

struct Violation {
  enum class Kind { NonPositiveWidth, EqualNeighbours, MassImbalance, TorusLength, BadDomain };
  Kind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
  bool has(Violation::Kind k) const noexcept;
};

ValidationReport validate_config(const BlockConfig& config);

/// Throws InvalidConfig with the report's first message unless valid. Equal
/// neighbours can be tolerated: they describe the same set as the merged block.
void require_valid(const BlockConfig& config, bool allow_equal_neighbours = false);

double total_width(const BlockConfig& config) noexcept;
double phase_mass(const BlockConfig& config, Phase p) noexcept;

/// Start coordinate of every block; size blocks+1 with the right end last.
std::vector<double> block_edges(const BlockConfig& config);

struct Interface {
  double position;
  Phase left;
  Phase right;
  InterfaceType type;
};

/// All phase transitions. On the line this includes the two support edges
/// against the implicit H phase; on the torus it includes the seam at 0.
std::vector<Interface> interfaces(const BlockConfig& config);

/// Interface counts (u0, v0, uv).
struct InterfaceCounts {
  int u0 = 0, v0 = 0, uv = 0;
};
InterfaceCounts count_interfaces(const BlockConfig& config);

BlockConfig mirror(const BlockConfig& config);
BlockConfig swap_phases(const BlockConfig& config);
BlockConfig dilate(const BlockConfig& config, double factor);

/// Merges adjacent equal phases (cyclically on the torus) and drops
/// zero-width blocks. Used after constructions that may create either.
BlockConfig normalize(const BlockConfig& config);

/// Torus only: content shifted right by `shift`; the block straddling the seam
/// is cut in two, so first and last block may share a phase.
BlockConfig rotate(const BlockConfig& config, double shift);

/// Alternating U/V macrodomain on the line with the given widths.
BlockConfig line_config(const std::vector<Phase>& pattern, const std::vector<double>& widths);

} // namespace blend
