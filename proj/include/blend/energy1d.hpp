#pragma once

#include <vector>

#include "blend/core.hpp"

namespace blend {

struct EnergyBreakdown {
  int count_u0 = 0;
  int count_v0 = 0;
  int count_uv = 0;
  double interfacial = 0.0;
  double nonlocal = 0.0;
  double total = 0.0;
};

EnergyBreakdown total_energy(const BlockConfig& config, const Params& params);

/// The three n-monolayer families. n counts monolayers, so a member has n+1
/// blocks: end blocks of width m and interior blocks of width 2m.
enum class Family { VUV_V, VUV_U, UVU_U };

struct FamilySpec {
  Family family;
  int n;
  double m;
};

std::string_view to_string(Family f) noexcept;

/// Family and monolayer count of an alternating U/V pattern, up to mirroring.
FamilySpec family_of(const std::vector<Phase>& pattern, double m = 1.0);

std::vector<Phase> family_pattern(Family f, int n);

/// Throws ParityMismatch unless n has the family's parity.
void check_parity(Family f, int n);

/// Closed-form energy of a family member.
double family_energy(const FamilySpec& spec, const Params& params);

BlockConfig build_family_config(const FamilySpec& spec);

/// Mass-independent interfacial offset of the family: k1 d_u0 + k2 d_v0.
double family_offset(Family f, const Params& params);

/// Lower bound on F_1 for any structure of mass M.
double lower_bound(double M, const Params& params);

/// Real minimiser n_0 of n d_uv + (2/3) M^3 / n^2.
double optimal_count(double M, const Params& params);

/// Outer width m_0 minimising energy per mass at fixed n.
double optimal_width(Family f, int n, const Params& params);

/// Best monolayer count of a family at mass M (parity-admissible floor or
/// ceiling around n_0, whichever is lower).
int best_family_n(Family f, double M, const Params& params);

struct MinimalEnergy {
  FamilySpec spec;
  double energy;
  double energy_per_mass;
};

/// Minimum over all families and counts at mass M.
MinimalEnergy min_energy_per_mass(double M, const Params& params);

} // namespace blend
