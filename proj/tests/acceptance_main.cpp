#include <cmath>
#include <cstdio>

#include "blend/acceptance.hpp"
#include "blend/io.hpp"

using namespace blend;

int main() {
  bool ok = true;
  for (const CriterionResult& r : run_acceptance("all", kDefaultSeed)) {
    std::printf("%s\n", format_result(r).c_str());
    ok = ok && r.passed;
  }

  // The frozen torus value must still match a fresh quadrature.
  io::json fx = io::read_json_file(std::string(BLEND_FIXTURE_DIR) + "/torus_constant.json");
  double frozen = fx.at("oracle").get<double>();
  double fresh = torus_quadrature_oracle(1);
  double expected = fx.at("candidates").at(fx.at("verdict").get<std::string>()).get<double>();
  bool fixture_ok = std::abs(frozen - fresh) <= 1e-14 * fresh && std::abs(fresh - expected) <= 1e-12 * expected;
  std::printf("%s torus fixture: frozen %.17g, fresh %.17g\n", fixture_ok ? "PASS" : "FAIL", frozen, fresh);
  ok = ok && fixture_ok;

  std::printf("%s\n", ok ? "all criteria passed" : "some criteria failed");
  return ok ? 0 : 4;
}
