#pragma once

#include <doctest.h>

#include <cmath>
#include <random>

#include "blend/acceptance.hpp"
#include "blend/core.hpp"

namespace blend::test {

inline bool close(double x, double y, double rel, double abs = 0.0) {
  return std::abs(x - y) <= std::max(abs, rel * std::max(std::abs(x), std::abs(y)));
}

#define CHECK_CLOSE(x, y, rel) CHECK_MESSAGE(::blend::test::close((x), (y), (rel)), (x), " vs ", (y))
#define CHECK_ERROR_KIND(expr, k)                                                                  \
  do {                                                                                             \
    bool thrown_ = false;                                                                          \
    try {                                                                                          \
      (void)(expr);                                                                                \
    } catch (const ::blend::Error& e_) {                                                           \
      thrown_ = true;                                                                              \
      CHECK_MESSAGE(e_.kind() == (k), e_.what());                                                  \
    }                                                                                              \
    CHECK_MESSAGE(thrown_, #expr " did not throw");                                                \
  } while (0)

/// Alternating U/V blocks filling a torus, with equal U and V mass.
inline BlockConfig random_torus_config(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pairs(1, 4);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  BlockConfig c{Domain::torus(1.0), {}};
  int k = pairs(rng);
  bool gap = unit(rng) < 0.4;
  Phase p = unit(rng) < 0.5 ? Phase::U : Phase::V;
  for (int i = 0; i < 2 * k; ++i, p = swapped(p)) c.blocks.push_back({p, 0.1 + unit(rng)});
  if (gap) c.blocks.push_back({Phase::H, 0.1 + unit(rng)});
  double mu = phase_mass(c, Phase::U), mv = phase_mass(c, Phase::V);
  for (auto& b : c.blocks) {
    if (b.phase == Phase::U) b.width /= mu;
    if (b.phase == Phase::V) b.width /= mv;
  }
  c.domain.length = total_width(c);
  return c;
}

} // namespace blend::test
