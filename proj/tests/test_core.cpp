#include "support.hpp"

using namespace blend;
using blend::test::random_torus_config;

TEST_CASE("params from coefficients") {
  Params p = Params::from_c(1, 1, 1);
  CHECK(p.d_u0() == 2);
  CHECK(p.d_v0() == 2);
  CHECK(p.d_uv() == 2);

  Params q = Params::from_c(0.3, 0.7, 0);
  CHECK(q.d_u0() == doctest::Approx(1).epsilon(1e-15));
  CHECK(q.d_v0() == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(q.d_uv() == doctest::Approx(0.7).epsilon(1e-15));

  CHECK_ERROR_KIND(Params::from_c(0, -1, 1), ErrorKind::NegativeCoefficient);
  CHECK_ERROR_KIND(Params::from_c(0, 0, 0), ErrorKind::AllZero);
  CHECK_ERROR_KIND(Params::from_c(NAN, 1, 1), ErrorKind::InvalidParams);
}

TEST_CASE("params from surface tensions") {
  Params p = Params::from_d(1, 0.4, 0.6);
  CHECK(p.c0() == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(p.cu() == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(std::abs(p.cv()) < 1e-16);

  Params s = Params::from_d(2, 2, 2);
  CHECK(s.c0() == 1);
  CHECK(s.cu() == 1);
  CHECK(s.cv() == 1);

  CHECK_ERROR_KIND(Params::from_d(1, 1, 3), ErrorKind::TriangleViolation);
  CHECK_ERROR_KIND(Params::from_d(3, 1, 1), ErrorKind::TriangleViolation);
  CHECK_ERROR_KIND(Params::from_d(1, 3, 1), ErrorKind::TriangleViolation);
}

TEST_CASE("round trip and triangle conditions on random triples") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 2.0);
  int violations = 0;
  for (int i = 0; i < 2000; ++i) {
    double c0 = unit(rng), cu = unit(rng), cv = unit(rng);
    if (i % 7 == 0) cv = 0;
    Params p = Params::from_c(c0, cu, cv);
    CHECK(p.satisfies_triangle_conditions());
    Params q = Params::from_d(p.d_u0(), p.d_v0(), p.d_uv());
    CHECK(std::abs(q.c0() - c0) <= 4e-16 * (c0 + cu + cv));
    CHECK(std::abs(q.cu() - cu) <= 4e-16 * (c0 + cu + cv));
    CHECK(std::abs(q.cv() - cv) <= 4e-16 * (c0 + cu + cv));

    double du0 = unit(rng), dv0 = unit(rng), duv = unit(rng);
    try {
      Params r = Params::from_d(du0, dv0, duv);
      CHECK(r.satisfies_triangle_conditions());
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::TriangleViolation);
      double m = std::min({du0 + dv0 - duv, du0 + duv - dv0, dv0 + duv - du0});
      CHECK(m < 0);
      ++violations;
    }
  }
  CHECK(violations > 0);
}

TEST_CASE("swapped params exchange u and v tensions") {
  Params p = Params::from_d(1, 0.3, 0.7).swapped();
  CHECK(p.d_u0() == doctest::Approx(0.3));
  CHECK(p.d_v0() == doctest::Approx(1));
  CHECK(p.d_uv() == doctest::Approx(0.7));
}

TEST_CASE("phases and patterns") {
  CHECK(charge(Phase::U) == 1);
  CHECK(charge(Phase::V) == -1);
  CHECK(charge(Phase::H) == 0);
  CHECK(pattern_string(parse_pattern("UVUH")) == "UVUH");
  CHECK_ERROR_KIND(parse_pattern("UXV"), ErrorKind::InvalidConfig);
  CHECK(!interface_type(Phase::U, Phase::U));
  CHECK(*interface_type(Phase::V, Phase::H) == InterfaceType::V0);
  CHECK(*interface_type(Phase::V, Phase::U) == InterfaceType::UV);
}

TEST_CASE("validate_config") {
  BlockConfig mono{Domain::line(), {{Phase::U, 1}, {Phase::V, 1}}};
  CHECK(validate_config(mono).ok());

  BlockConfig unbalanced{Domain::line(), {{Phase::U, 1}, {Phase::V, 2}}};
  auto r = validate_config(unbalanced);
  CHECK(r.has(Violation::Kind::MassImbalance));
  CHECK(r.violations.size() == 1);

  BlockConfig torus{Domain::torus(1), {{Phase::U, 0.5}, {Phase::V, 0.5}}};
  CHECK(validate_config(torus).ok());

  BlockConfig short_torus{Domain::torus(2), {{Phase::U, 0.5}, {Phase::V, 0.5}}};
  CHECK(validate_config(short_torus).has(Violation::Kind::TorusLength));

  BlockConfig seam{Domain::torus(2), {{Phase::U, 0.5}, {Phase::V, 1}, {Phase::U, 0.5}}};
  CHECK(validate_config(seam).has(Violation::Kind::EqualNeighbours));

  BlockConfig repeated{Domain::line(), {{Phase::U, 1}, {Phase::U, 1}, {Phase::V, 2}}};
  CHECK(validate_config(repeated).has(Violation::Kind::EqualNeighbours));

  BlockConfig zero{Domain::line(), {{Phase::U, 1}, {Phase::V, 0}, {Phase::V, 1}}};
  CHECK(validate_config(zero).has(Violation::Kind::NonPositiveWidth));

  BlockConfig inner_gap{Domain::line(), {{Phase::U, 1}, {Phase::H, 3}, {Phase::V, 1}}};
  CHECK(validate_config(inner_gap).ok());

  BlockConfig outer_gap{Domain::line(), {{Phase::H, 1}, {Phase::U, 1}, {Phase::V, 1}}};
  CHECK(!validate_config(outer_gap).ok());

  BlockConfig bad{Domain::torus(-1), {}};
  CHECK(validate_config(bad).has(Violation::Kind::BadDomain));

  CHECK_ERROR_KIND(require_valid(unbalanced), ErrorKind::InvalidConfig);
  CHECK(validate_config(BlockConfig{}).ok());
}

TEST_CASE("mirror and swap preserve validity") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    BlockConfig c = i % 2 ? random_line_config(rng) : random_torus_config(rng);
    REQUIRE(validate_config(c).ok());
    CHECK(validate_config(mirror(c)).ok());
    CHECK(validate_config(swap_phases(c)).ok());
    CHECK(validate_config(dilate(c, 2.5)).ok());
  }
}

TEST_CASE("interfaces and counts") {
  BlockConfig c{Domain::line(), {{Phase::U, 1}, {Phase::V, 2}, {Phase::U, 1}}};
  auto in = interfaces(c);
  REQUIRE(in.size() == 4);
  CHECK(in[0].type == InterfaceType::U0);
  CHECK(in[1].type == InterfaceType::UV);
  CHECK(in[1].position == 1);
  CHECK(in[3].position == 4);
  auto n = count_interfaces(c);
  CHECK(n.u0 == 2);
  CHECK(n.v0 == 0);
  CHECK(n.uv == 2);

  auto tn = count_interfaces(BlockConfig{Domain::torus(1), {{Phase::U, 0.5}, {Phase::V, 0.5}}});
  CHECK(tn.uv == 2);
  CHECK(tn.u0 + tn.v0 == 0);
}

TEST_CASE("normalize merges equal neighbours and drops empty blocks") {
  BlockConfig c{Domain::line(), {{Phase::U, 1}, {Phase::U, 0.5}, {Phase::H, 0}, {Phase::V, 1.5}}};
  BlockConfig n = normalize(c);
  REQUIRE(n.blocks.size() == 2);
  CHECK(n.blocks[0].width == 1.5);

  BlockConfig t{Domain::torus(3), {{Phase::U, 0.5}, {Phase::V, 1.5}, {Phase::U, 1}}};
  BlockConfig tn = normalize(t);
  REQUIRE(tn.blocks.size() == 2);
  CHECK(tn.blocks[0].phase == Phase::U);
  CHECK(tn.blocks[0].width == 1.5);
  CHECK(validate_config(tn).ok());
}

TEST_CASE("rotate on the torus") {
  BlockConfig t{Domain::torus(2), {{Phase::U, 1}, {Phase::V, 1}}};
  BlockConfig r = rotate(t, 0.25);
  REQUIRE(r.blocks.size() == 3);
  CHECK(r.blocks[0].phase == Phase::V);
  CHECK(r.blocks[0].width == doctest::Approx(0.25));
  CHECK(total_width(r) == doctest::Approx(2));
  CHECK(validate_config(normalize(rotate(t, 0.7))).ok());
  CHECK_ERROR_KIND(rotate(BlockConfig{Domain::line(), {{Phase::U, 1}, {Phase::V, 1}}}, 1), ErrorKind::InvalidConfig);
}

TEST_CASE("line_config") {
  BlockConfig c = line_config(parse_pattern("UVU"), {1, 2, 1});
  CHECK(c.blocks.size() == 3);
  CHECK(phase_mass(c, Phase::V) == 2);
  CHECK_ERROR_KIND(line_config(parse_pattern("UV"), {1}), ErrorKind::InvalidConfig);
}
