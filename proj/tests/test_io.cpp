#include "support.hpp"

#include <regex>

#include "blend/io.hpp"

using namespace blend;
using namespace blend::io;

namespace {

std::string fixture(const std::string& name) { return std::string(BLEND_FIXTURE_DIR) + "/" + name; }

int count(const std::string& s, const std::string& needle) {
  int n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

} // namespace

TEST_CASE("format_real round-trips doubles") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    double x = u(rng) * std::pow(10.0, static_cast<int>(rng() % 20) - 10);
    CHECK(std::stod(format_real(x)) == x);
  }
  CHECK(format_real(0.5) == "0.5");
  CHECK(format_real(1.0 / 3) == "0.33333333333333331");
  CHECK(format_real(2) == "2");
}

TEST_CASE("config json round trip") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    BlockConfig c = i % 2 ? random_line_config(rng) : blend::test::random_torus_config(rng);
    json j = to_json(c);
    validate_schema("config", j);
    BlockConfig back = config_from_json(json::parse(j.dump()));
    CHECK(back.domain.is_torus() == c.domain.is_torus());
    CHECK(back.domain.length == c.domain.length);
    REQUIRE(back.blocks.size() == c.blocks.size());
    for (std::size_t k = 0; k < c.blocks.size(); ++k) {
      CHECK(back.blocks[k].phase == c.blocks[k].phase);
      CHECK(back.blocks[k].width == c.blocks[k].width);
    }
  }
}

TEST_CASE("fixtures load") {
  BlockConfig mono = config_from_json(read_json_file(fixture("mono.json")));
  CHECK(mono.blocks.size() == 2);
  CHECK(!mono.domain.is_torus());
  BlockConfig torus = config_from_json(read_json_file(fixture("torus_pair.json")));
  CHECK(torus.domain.is_torus());
  CHECK(torus.domain.length == 1);
  Params fig2 = params_from_json(read_json_file(fixture("fig2_params.json")));
  CHECK(fig2.d_v0() == doctest::Approx(0.3).epsilon(1e-15));
  Params sym = params_from_json(read_json_file(fixture("sym_params.json")));
  CHECK(sym.d_uv() == 2);
  CHECK_ERROR_KIND(read_json_file(fixture("missing.json")), ErrorKind::InvalidConfig);
}

TEST_CASE("malformed configs") {
  CHECK_ERROR_KIND(config_from_json(json::parse(R"({"blocks": []})")), ErrorKind::InvalidConfig);
  CHECK_ERROR_KIND(config_from_json(json::parse(R"({"domain": {"type": "disc"}, "blocks": []})")),
                   ErrorKind::InvalidConfig);
  CHECK_ERROR_KIND(config_from_json(json::parse(R"({"domain": {"type": "torus"}, "blocks": []})")),
                   ErrorKind::InvalidConfig);
  CHECK_ERROR_KIND(
      config_from_json(json::parse(R"({"domain": {"type": "line"}, "blocks": [{"phase": "X", "width": 1}]})")),
      ErrorKind::InvalidConfig);
  CHECK_ERROR_KIND(
      config_from_json(json::parse(R"({"domain": {"type": "line"}, "blocks": [{"phase": "U", "width": "1"}]})")),
      ErrorKind::InvalidConfig);
}

TEST_CASE("params need exactly one form") {
  Params c = params_from_json(json::parse(R"({"c0": 1, "cu": 1, "cv": 1})"));
  CHECK(c.d_u0() == 2);
  Params d = params_from_json(json::parse(R"({"d_u0": 1, "d_v0": 0.4, "d_uv": 0.6})"));
  CHECK(d.cu() == doctest::Approx(0.6).epsilon(1e-15));
  CHECK_ERROR_KIND(params_from_json(json::parse(R"({"c0": 1, "cu": 1, "cv": 1, "d_uv": 1})")),
                   ErrorKind::InvalidParams);
  CHECK_ERROR_KIND(params_from_json(json::parse(R"({})")), ErrorKind::InvalidParams);
  CHECK_ERROR_KIND(params_from_json(json::parse(R"({"c0": 1, "cu": 1})")), ErrorKind::InvalidParams);
  CHECK_ERROR_KIND(params_from_json(json::parse(R"([1, 2, 3])")), ErrorKind::InvalidParams);
  CHECK_ERROR_KIND(params_from_json(json::parse(R"({"d_u0": 1, "d_v0": 1, "d_uv": 3})")),
                   ErrorKind::TriangleViolation);
  CHECK_ERROR_KIND(params_from_json(json::parse(R"({"c0": -1, "cu": 1, "cv": 1})")),
                   ErrorKind::NegativeCoefficient);

  Params p = Params::from_d(1, 0.3, 0.7);
  json j = to_json(p);
  json only_d = {{"d_u0", j["d_u0"]}, {"d_v0", j["d_v0"]}, {"d_uv", j["d_uv"]}};
  CHECK(params_from_json(only_d).c0() == doctest::Approx(p.c0()).epsilon(1e-15));
}

TEST_CASE("schemas") {
  EnergyBreakdown e = total_energy(line_config(parse_pattern("UV"), {1, 1}), Params::from_c(1, 1, 1));
  json je = to_json(e);
  validate_schema("energy", je);
  je["total"] = 1.0;
  CHECK_ERROR_KIND(validate_schema("energy", je), ErrorKind::InvalidConfig);
  je.erase("total");
  CHECK_ERROR_KIND(validate_schema("energy", je), ErrorKind::InvalidConfig);

  json k = to_json(mollifier_constants(bump_mollifier(2)));
  validate_schema("constants", k);
  k["N"] = 2.5;
  CHECK_ERROR_KIND(validate_schema("constants", k), ErrorKind::InvalidConfig);

  json sweep = {{"patterns", json::array({"UV"})},
                {"envelope", json::array({{{"M", 1.0}, {"pattern", "UV"}, {"F_over_M", 2.0}}})},
                {"crossovers", json::array()}};
  validate_schema("sweep", sweep);
  sweep["envelope"][0].erase("pattern");
  CHECK_ERROR_KIND(validate_schema("sweep", sweep), ErrorKind::InvalidConfig);

  CHECK_ERROR_KIND(validate_schema("cutoff", json::array()), ErrorKind::InvalidConfig);
  CHECK_ERROR_KIND(validate_schema("nonsense", json::object()), ErrorKind::InvalidConfig);
}

TEST_CASE("csv writer") {
  CsvWriter w({"a", "b"});
  w.row({format_real(0.1), "UV"}).row({"2", "VUV"});
  CHECK(w.str() == "a,b\n0.10000000000000001,UV\n2,VUV\n");
  CHECK(w.str().find('\r') == std::string::npos);
  CHECK_ERROR_KIND(w.row({"1"}), ErrorKind::InvalidConfig);
}

TEST_CASE("svg chart") {
  SvgSeries a{"UV", {0.1, 1, 10}, {5, 2, 3}, false};
  SvgSeries b{"a<b & c", {0.1, 1, 10}, {4, 1.5, 1e9}, true};
  SvgOptions o{"F/M against M", "M", "F/M", true, false, 10};
  std::string svg = svg_line_chart({a, b}, o);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.size() > 7);
  CHECK(svg.substr(svg.size() - 7) == "</svg>\n");
  CHECK(count(svg, "<svg") == 1);
  CHECK(count(svg, "<text") == count(svg, "</text>"));
  CHECK(count(svg, "<polyline") >= 2);
  CHECK(svg.find("a&lt;b &amp; c") != std::string::npos);
  CHECK(svg.find("a<b") == std::string::npos);
  CHECK(svg.find("nan") == std::string::npos);
  CHECK(svg.find("inf") == std::string::npos);
  // Every coordinate stays within the canvas.
  std::regex coord(R"(points="([^"]*)\")");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), coord); it != std::sregex_iterator(); ++it) {
    std::istringstream in((*it)[1].str());
    double x, y;
    char comma;
    while (in >> x >> comma >> y) {
      CHECK(x >= 0);
      CHECK(y >= 0);
    }
  }
  CHECK(svg_line_chart({a, b}, o) == svg);
}
