#pragma once

#include <optional>
#include <vector>

#include "blend/core.hpp"

namespace blend {

struct InterfacePhi {
  double position;
  InterfaceType type;
  double phi;
};

struct StationarityReport {
  std::vector<InterfacePhi> phi_at_interfaces;
  double equal_phi_residual = 0.0;
  double projected_gradient_norm = 0.0;
};

/// Derivative of F_1 with respect to the position of each interface, in the
/// order of interfaces(config): 2 phi(x_i) (f_left - f_right) with f = u - v.
std::vector<double> interface_gradient(const BlockConfig& config);

StationarityReport stationarity_report(const BlockConfig& config, const Params& params);

struct SolveResult {
  BlockConfig config;
  int iterations = 0;
  double residual = 0.0; // max of the two report residuals
};

/// Newton iteration on the block widths of an alternating U/V pattern with U
/// and V mass M each. On the torus an H block fills the rest of [0, L).
SolveResult solve_stationary(const std::vector<Phase>& pattern, double M, const Domain& domain,
                             const Params& params,
                             const std::optional<std::vector<double>>& initial_widths = std::nullopt);

struct SplitJoinResult {
  BlockConfig config;
  double delta = 0.0; // total energy after minus before
};

/// Line only: opens an H gap of width `gap` at x, which must lie inside a U or
/// V block where phi' vanishes.
SplitJoinResult split_at(const BlockConfig& config, const Params& params, double x, double gap);

/// Shrinks the interior H block `gap_block` by a in (0, width]. On the line the
/// part to the right moves left; on the torus the next H gap grows by a.
SplitJoinResult join_gap(const BlockConfig& config, const Params& params, std::size_t gap_block,
                         double a);

} // namespace blend
