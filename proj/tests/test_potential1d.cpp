#include "support.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include "blend/energy1d.hpp"
#include "blend/potential1d.hpp"

using namespace blend;
using blend::test::random_torus_config;
using boost::math::quadrature::gauss;

namespace {

// Field phi' obtained by integrating the source directly, block by block.
struct DirectField {
  std::vector<double> x, F; // block edges and int_0^x f at the edges
  std::vector<int> q;
  double C = 0;

  explicit DirectField(const BlockConfig& c) {
    x = {0.0};
    F = {0.0};
    for (const auto& b : c.blocks) {
      q.push_back(charge(b.phase));
      x.push_back(x.back() + b.width);
      F.push_back(F.back() + q.back() * b.width);
    }
    if (c.domain.is_torus()) {
      double L = x.back();
      for (std::size_t k = 0; k < q.size(); ++k)
        C += gauss<double, 7>::integrate([&](double s) { return F[k] + q[k] * (s - x[k]); }, x[k], x[k + 1]);
      C /= L;
    }
  }
  double slope(std::size_t k, double s) const { return C - (F[k] + q[k] * (s - x[k])); }

  double energy() const {
    double e = 0;
    for (std::size_t k = 0; k < q.size(); ++k)
      e += gauss<double, 7>::integrate(
          [&](double s) {
            double d = slope(k, s);
            return d * d;
          },
          x[k], x[k + 1]);
    return e;
  }
};

// -1/2 int int f(x) f(y) |x - y| on the line; the torus kernel adds x^2 / (2L).
double green_energy(const BlockConfig& c) {
  auto edges = block_edges(c);
  const bool torus = c.domain.is_torus();
  const double L = edges.back();
  auto G = [&](double d) {
    double g = -std::abs(d) / 2;
    if (torus) g += d * d / (2 * L) + L / 12;
    return g;
  };
  double e = 0;
  for (std::size_t i = 0; i < c.blocks.size(); ++i)
    for (std::size_t j = 0; j < c.blocks.size(); ++j) {
      int qi = charge(c.blocks[i].phase), qj = charge(c.blocks[j].phase);
      if (qi == 0 || qj == 0) continue;
      auto inner = [&](double x) {
        auto g = [&](double y) { return G(x - y); };
        double a = edges[j], b = edges[j + 1];
        if (x > a && x < b) return gauss<double, 7>::integrate(g, a, x) + gauss<double, 7>::integrate(g, x, b);
        return gauss<double, 7>::integrate(g, a, b);
      };
      double a = edges[i], b = edges[i + 1];
      e += qi * qj * gauss<double, 20>::integrate(inner, a, b);
    }
  return e;
}

} // namespace

TEST_CASE("line monolayer potential") {
  BlockConfig c{Domain::line(), {{Phase::U, 1}, {Phase::V, 1}}};
  PiecewisePotential p = potential_line(c);
  for (double x : {0.0, 0.25, 0.5, 1.0, 1.5, 2.0}) CHECK(p.slope(x) == doctest::Approx(std::abs(x - 1) - 1));
  CHECK(p.slope(-3) == 0);
  CHECK(p.slope(5) == 0);
  CHECK(p.value(0) == 0);
  CHECK(p.value(-2) == 0);
  CHECK(p.value(7) == doctest::Approx(p.value(2)));
  CHECK(p.pieces()[0].a == -0.5);
  CHECK(p.pieces()[1].a == 0.5);
  CHECK(hminus_norm_sq(c) == doctest::Approx(2.0 / 3).epsilon(1e-14));
}

TEST_CASE("line bilayer potential") {
  BlockConfig c{Domain::line(), {{Phase::U, 1}, {Phase::V, 2}, {Phase::U, 1}}};
  PiecewisePotential p = potential_line(c);
  for (double x : {0.3, 0.9}) CHECK(p.slope(x) == doctest::Approx(-x));
  for (double x : {1.2, 2.0, 2.8}) CHECK(p.slope(x) == doctest::Approx(x - 2));
  for (double x : {3.1, 3.9}) CHECK(p.slope(x) == doctest::Approx(4 - x));
  CHECK(hminus_norm_sq(c) == doctest::Approx(4.0 / 3).epsilon(1e-14));
  CHECK(hminus_norm_sq(swap_phases(c)) == doctest::Approx(4.0 / 3).epsilon(1e-14));
}

TEST_CASE("empty and all-H configurations") {
  BlockConfig e{Domain::line(), {}};
  CHECK(hminus_norm_sq(e) == 0);
  CHECK(potential(e).value(1.0) == 0);
  BlockConfig h{Domain::torus(1), {{Phase::H, 1}}};
  PiecewisePotential p = potential(h);
  CHECK(p.value(0.3) == 0);
  CHECK(p.slope(0.3) == 0);
  CHECK(hminus_norm_sq(h) == 0);
}

TEST_CASE("torus two-block potential") {
  BlockConfig c{Domain::torus(1), {{Phase::U, 0.5}, {Phase::V, 0.5}}};
  PiecewisePotential p = potential_torus(c);
  for (double x : {0.1, 0.3, 0.5}) CHECK(p.slope(x) == doctest::Approx(0.25 - x).epsilon(1e-14));
  for (double x : {0.6, 0.9, 1.0}) CHECK(p.slope(x) == doctest::Approx(x - 0.75).epsilon(1e-14));
  double mean = gauss<double, 7>::integrate([&](double x) { return p.value(x); }, 0.0, 0.5) +
                gauss<double, 7>::integrate([&](double x) { return p.value(x); }, 0.5, 1.0);
  CHECK(std::abs(mean) < 1e-15);
  CHECK(hminus_norm_sq(c) == doctest::Approx(1.0 / 48).epsilon(1e-14));
}

TEST_CASE("torus four-block potential is periodic and C1") {
  BlockConfig c{Domain::torus(1), {{Phase::U, 0.25}, {Phase::V, 0.25}, {Phase::U, 0.25}, {Phase::V, 0.25}}};
  PiecewisePotential p = potential_torus(c);
  REQUIRE(p.pieces().size() == 4);
  const double eps = 1e-9;
  CHECK(p.value(eps) == doctest::Approx(p.value(1 - eps)).epsilon(1e-8));
  CHECK(p.slope(eps) == doctest::Approx(p.slope(1 - eps)).epsilon(1e-8));
  for (double x : {0.25, 0.5, 0.75}) {
    CHECK(p.value(x - eps) == doctest::Approx(p.value(x + eps)).epsilon(1e-8));
    CHECK(p.slope(x - eps) == doctest::Approx(p.slope(x + eps)).epsilon(1e-8));
  }
  CHECK(hminus_norm_sq(c) == doctest::Approx(1.0 / (48 * 4)).epsilon(1e-14));
}

TEST_CASE("torus constant matches 1/(48 n^2)") {
  for (int n = 1; n <= 6; ++n) {
    BlockConfig c{Domain::torus(1), {}};
    for (int k = 0; k < 2 * n; ++k) c.blocks.push_back({k % 2 ? Phase::V : Phase::U, 0.5 / n});
    CHECK(hminus_norm_sq(c) == doctest::Approx(1.0 / (48.0 * n * n)).epsilon(1e-13));
    CHECK(torus_quadrature_oracle(n) == doctest::Approx(1.0 / (48.0 * n * n)).epsilon(1e-13));
  }
}

TEST_CASE("oracle agreement on random configurations") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 400; ++i) {
    BlockConfig c = i % 2 ? random_line_config(rng) : random_torus_config(rng);
    double exact = hminus_norm_sq(c);
    CHECK_CLOSE(exact, DirectField(c).energy(), 1e-10);
    CHECK_CLOSE(exact, green_energy(c), 1e-10);

    PiecewisePotential p = potential(c);
    auto edges = block_edges(c);
    double fphi = 0;
    for (std::size_t k = 0; k < c.blocks.size(); ++k)
      fphi += charge(c.blocks[k].phase) *
              gauss<double, 7>::integrate([&](double x) { return p.value(x); }, edges[k], edges[k + 1]);
    CHECK_CLOSE(exact, fphi, 1e-10);
  }
}

TEST_CASE("scaling, translation, rotation and swap") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    BlockConfig c = i % 2 ? random_line_config(rng) : random_torus_config(rng);
    double e = hminus_norm_sq(c);
    for (double s : {0.5, 2.0, 10.0}) CHECK_CLOSE(hminus_norm_sq(dilate(c, s)), s * s * s * e, 1e-12);
    CHECK_CLOSE(hminus_norm_sq(swap_phases(c)), e, 1e-12);
    CHECK_CLOSE(hminus_norm_sq(mirror(c)), e, 1e-12);
    if (c.domain.is_torus()) {
      double L = c.domain.length;
      for (double f : {0.1, 0.37, 0.8}) CHECK_CLOSE(hminus_norm_sq(rotate(c, f * L)), e, 1e-12);
    } else {
      for (double origin : {-7.5, 3.25, 1000.0}) {
        PiecewisePotential p = potential_line(c, origin);
        // Breakpoints far from 0 lose digits in their differences.
        double scale = std::max(1.0, std::abs(origin) / total_width(c));
        CHECK_CLOSE(p.dirichlet_energy(), e, 1e-12 * scale);
        PiecewisePotential q = potential_line(c);
        double w = total_width(c);
        for (double t : {0.1, 0.5, 0.9}) CHECK(std::abs(p.value(origin + t * w) - q.value(t * w)) < 1e-9 * (1 + e));
      }
    }
  }
}

TEST_CASE("VUV family nonlocal energy") {
  for (int n : {2, 4, 6})
    for (double m : {0.5, 1.0, 2.0}) {
      BlockConfig c = build_family_config({Family::VUV_V, n, m});
      CHECK(hminus_norm_sq(c) == doctest::Approx(2.0 * n / 3 * m * m * m).epsilon(1e-12));
    }
}

TEST_CASE("global coefficients agree with the local form") {
  BlockConfig c{Domain::line(), {{Phase::U, 1}, {Phase::V, 2}, {Phase::U, 1}}};
  PiecewisePotential p = potential_line(c);
  for (std::size_t i = 0; i < p.pieces().size(); ++i) {
    auto g = p.global(i);
    double x = 0.5 * (p.breakpoints()[i] + p.breakpoints()[i + 1]);
    CHECK(g.a * x * x + g.b * x + g.c == doctest::Approx(p.value(x)).epsilon(1e-13));
  }
}

TEST_CASE("potential samples") {
  BlockConfig c{Domain::line(), {{Phase::U, 1}, {Phase::V, 1}}};
  auto s = sample_potential(potential(c), 4);
  CHECK(s.size() == 5);
  CHECK(std::is_sorted(s.begin(), s.end(), [](const auto& a, const auto& b) { return a.x < b.x; }));
  CHECK(s.front().x == 0);
  CHECK(s.back().x == 2);
  CHECK(sample_potential(potential(c)).size() == 3);
}
