#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "blend/core.hpp"
#include "blend/radialnd.hpp"

namespace blend {

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;
};

/// The three parameter sets used throughout the suite: d = (1, 0.3, 0.7),
/// d = (1, 0.4, 0.6) and c = (1, 1, 1).
std::vector<Params> acceptance_params();

/// Random alternating line configuration with equal U and V mass and
/// occasional interior H gaps.
BlockConfig random_line_config(std::mt19937_64& rng);

/// Family members, monolayers, bilayers and `random_count` random
/// configurations.
std::vector<BlockConfig> line_corpus(std::uint64_t seed, int random_count = 1000);

/// Random monolayers, bilayers and micelles in dimensions 2 to 5.
std::vector<RadialConfig> radial_corpus(std::uint64_t seed, int per_kind = 100);

/// Nonlocal energy of the unit-torus U/V configuration with equal widths by
/// Gauss-Legendre quadrature of the directly integrated field.
double torus_quadrature_oracle(int n_pairs = 1);

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Suites: "all", "1d" (criteria 1-6, 12), "radial" (7-9), "bounds" (10-11).
std::vector<CriterionResult> run_acceptance(const std::string& suite = "all",
                                            std::uint64_t seed = kDefaultSeed);

std::string format_result(const CriterionResult& r);

} // namespace blend
