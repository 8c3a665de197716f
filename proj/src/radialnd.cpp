#include "blend/radialnd.hpp"

#include <boost/math/constants/constants.hpp>
#include <cmath>

namespace blend {

std::string_view to_string(RadialKind k) noexcept {
  switch (k) {
  case RadialKind::Monolayer: return "monolayer";
  case RadialKind::Bilayer: return "bilayer";
  case RadialKind::Micelle: return "micelle";
  }
  return "?";
}

RadialKind radial_kind_from_string(std::string_view s) {
  if (s == "monolayer") return RadialKind::Monolayer;
  if (s == "bilayer") return RadialKind::Bilayer;
  if (s == "micelle") return RadialKind::Micelle;
  throw Error(ErrorKind::InvalidRadial, "unknown radial kind '" + std::string(s) + "'");
}

namespace {

// 2 pi^{N/2} / Gamma(N/2) via the half-integer recursion.
template <class Real>
Real sphere_area(int N) {
  const Real pi = boost::math::constants::pi<Real>();
  using std::sqrt;
  Real gamma = N % 2 == 0 ? Real(1) : sqrt(pi); // Gamma(1) or Gamma(1/2)
  Real x = N % 2 == 0 ? Real(1) : Real(0.5);
  while (x < Real(N) / 2) {
    gamma *= x;
    x += 1;
  }
  using std::pow;
  return 2 * pow(pi, Real(N) / 2) / gamma;
}

} // namespace

double unit_sphere_area(int N) { return sphere_area<double>(N); }
double unit_ball_volume(int N) { return sphere_area<double>(N) / N; }

namespace {

double volume_term(double a, double b, int N) { return std::pow(b, N) - std::pow(a, N); }

} // namespace

void validate_radial(const RadialConfig& rc) {
  auto fail = [](const std::string& m) { throw Error(ErrorKind::InvalidRadial, m); };
  if (rc.N < 2) fail("dimension must be at least 2");
  if (rc.labels.empty() || rc.radii.size() != rc.labels.size() + 1)
    fail("need one more radius than layer labels");
  for (double r : rc.radii)
    if (!std::isfinite(r)) fail("radii must be finite");
  if (rc.radii.front() < 0) fail("radii must be nonnegative");
  for (std::size_t i = 1; i < rc.radii.size(); ++i)
    if (!(rc.radii[i] > rc.radii[i - 1])) fail("radii must increase strictly");
  for (std::size_t i = 1; i < rc.labels.size(); ++i)
    if (rc.labels[i] == rc.labels[i - 1]) fail("neighbouring layers share a phase");
  if (rc.labels.back() == Phase::H) fail("outermost layer merges with the exterior");
  if (rc.radii.front() > 0 && rc.labels.front() == Phase::H) fail("innermost layer merges with the core");
  double mu = 0, mv = 0;
  for (std::size_t j = 0; j < rc.labels.size(); ++j) {
    double vol = volume_term(rc.radii[j], rc.radii[j + 1], rc.N);
    if (rc.labels[j] == Phase::U) mu += vol;
    if (rc.labels[j] == Phase::V) mv += vol;
  }
  if (std::abs(mu - mv) > 1e-9 * std::max(mu, mv)) fail("U and V volumes differ");
}

RadialConfig radial_monolayer(int N, double R0, double R1, Phase inner) {
  double R2 = std::pow(2 * std::pow(R1, N) - std::pow(R0, N), 1.0 / N);
  RadialConfig rc{N, {R0, R1, R2}, {inner, swapped(inner)}};
  validate_radial(rc);
  return rc;
}

RadialConfig radial_bilayer(int N, double R0, double R1, Phase outer) {
  double band = std::pow(R1, N) - std::pow(R0, N);
  double R2 = std::pow(std::pow(R1, N) + 2 * band, 1.0 / N);
  double R3 = std::pow(std::pow(R1, N) + 3 * band, 1.0 / N);
  RadialConfig rc{N, {R0, R1, R2, R3}, {outer, swapped(outer), outer}};
  validate_radial(rc);
  return rc;
}

RadialConfig radial_micelle(int N, double R1, Phase core) { return radial_monolayer(N, 0.0, R1, core); }

template <class Real>
std::vector<Real> curvature_radii(RadialKind kind, int N, const Real& m, const Real& kappa) {
  using std::pow;
  if (!(m > 0) || !(kappa > 0)) throw Error(ErrorKind::RadiiCollapse, "m and kappa must be positive");
  Real nmk = Real(N) * m * kappa;
  if (!(1 - nmk > 0)) throw Error(ErrorKind::RadiiCollapse, "1 - N m kappa must be positive");
  Real inv = 1 / kappa, e = Real(1) / N;
  switch (kind) {
  case RadialKind::Monolayer:
    return {inv * pow(1 - nmk, e), inv, inv * pow(1 + nmk, e)};
  case RadialKind::Bilayer:
    return {inv * pow(1 - nmk, e), inv * pow(1 - nmk / 2, e), inv * pow(1 + nmk / 2, e),
            inv * pow(1 + nmk, e)};
  case RadialKind::Micelle: break;
  }
  throw Error(ErrorKind::InvalidRadial, "micelles have no curvature parametrisation");
}

template std::vector<double> curvature_radii(RadialKind, int, const double&, const double&);
template std::vector<HighReal> curvature_radii(RadialKind, int, const HighReal&, const HighReal&);

namespace {

std::vector<Phase> curvature_labels(RadialKind kind, Phase inner) {
  if (kind == RadialKind::Bilayer) return {inner, swapped(inner), inner};
  return {inner, swapped(inner)};
}

} // namespace

RadialConfig radial_from_curvature(RadialKind kind, int N, double m, double kappa, Phase inner) {
  auto r = curvature_radii<double>(kind, N, m, kappa);
  RadialConfig rc{N, r, curvature_labels(kind, inner)};
  validate_radial(rc);
  return rc;
}

template <class Real>
RadialTerms<Real> radial_terms(int N, const std::vector<Real>& radii, const std::vector<Phase>& labels,
                               const SurfaceTensions& d) {
  using std::log;
  using std::pow;
  RadialTerms<Real> t{Real(0), Real(0), Real(0)};
  const Real area = sphere_area<Real>(N);
  const std::size_t k = labels.size();

  auto add_interface = [&](const Real& R, Phase l, Phase r) {
    if (auto type = interface_type(l, r)) t.interfacial += d.of(*type) * area * pow(R, N - 1);
  };
  if (radii.front() > 0) add_interface(radii.front(), Phase::H, labels.front());
  for (std::size_t j = 1; j < k; ++j) add_interface(radii[j], labels[j - 1], labels[j]);
  add_interface(radii[k], labels[k - 1], Phase::H);

  // phi'(r) = -q r / N - K r^{1-N} on each annulus, K fixed by the charge
  // enclosed at its inner radius.
  Real enclosed(0);
  Real s(0);
  for (std::size_t j = 0; j < k; ++j) {
    const Real& a = radii[j];
    const Real& b = radii[j + 1];
    Real q = charge(labels[j]);
    Real aN = pow(a, N), bN = pow(b, N);
    Real K = enclosed - q * aN / N;
    s += q * q / (Real(N) * N * (N + 2)) * (bN * b * b - aN * a * a);
    s += q * K / N * (b * b - a * a);
    if (K != 0) {
      if (N == 2)
        s += K * K * (log(b) - log(a));
      else
        s += K * K * (pow(b, 2 - N) - pow(a, 2 - N)) / (2 - N);
    }
    enclosed += q * (bN - aN) / N;
    if (labels[j] == Phase::U) t.mass += bN - aN;
  }
  t.nonlocal = area * s;
  t.mass *= area / N;
  return t;
}

template RadialTerms<double> radial_terms(int, const std::vector<double>&, const std::vector<Phase>&,
                                          const SurfaceTensions&);
template RadialTerms<HighReal> radial_terms(int, const std::vector<HighReal>&, const std::vector<Phase>&,
                                            const SurfaceTensions&);

EnergyBreakdown radial_energy(const RadialConfig& rc, const SurfaceTensions& d) {
  validate_radial(rc);
  std::vector<HighReal> r(rc.radii.begin(), rc.radii.end());
  auto t = radial_terms<HighReal>(rc.N, r, rc.labels, d);
  EnergyBreakdown e;
  auto count = [&](Phase l, Phase rr) {
    if (auto type = interface_type(l, rr)) {
      if (*type == InterfaceType::U0) ++e.count_u0;
      if (*type == InterfaceType::V0) ++e.count_v0;
      if (*type == InterfaceType::UV) ++e.count_uv;
    }
  };
  if (rc.radii.front() > 0) count(Phase::H, rc.labels.front());
  for (std::size_t j = 1; j < rc.labels.size(); ++j) count(rc.labels[j - 1], rc.labels[j]);
  count(rc.labels.back(), Phase::H);
  e.interfacial = static_cast<double>(t.interfacial);
  e.nonlocal = static_cast<double>(t.nonlocal);
  e.total = static_cast<double>(t.interfacial + t.nonlocal);
  return e;
}

double radial_mass(const RadialConfig& rc) {
  validate_radial(rc);
  std::vector<HighReal> r(rc.radii.begin(), rc.radii.end());
  return static_cast<double>(radial_terms<HighReal>(rc.N, r, rc.labels, {}).mass);
}

RadialPotential::RadialPotential(const RadialConfig& rc) : N_(rc.N) {
  validate_radial(rc);
  double enclosed = 0, phi = 0;
  for (std::size_t j = 0; j < rc.labels.size(); ++j) {
    double a = rc.radii[j], b = rc.radii[j + 1];
    double q = charge(rc.labels[j]);
    double K = enclosed - q * std::pow(a, N_) / N_;
    Layer L{a, b, q, K, 0.0};
    // c makes the layer meet the running value phi at r = a.
    double base = -q * a * a / (2.0 * N_) - (K != 0 ? K * lambda(a) : 0.0);
    L.c = phi - base;
    layers_.push_back(L);
    phi = L.c - q * b * b / (2.0 * N_) - (K != 0 ? K * lambda(b) : 0.0);
    enclosed += q * (std::pow(b, N_) - std::pow(a, N_)) / N_;
  }
}

double RadialPotential::lambda(double r) const {
  return N_ == 2 ? std::log(r) : std::pow(r, 2 - N_) / (2 - N_);
}

double RadialPotential::value(double r) const {
  if (r <= layers_.front().a) return 0.0;
  const Layer* L = &layers_.back();
  for (const auto& l : layers_)
    if (r <= l.b) {
      L = &l;
      break;
    }
  double x = std::min(r, L->b);
  return L->c - L->q * x * x / (2.0 * N_) - (L->K != 0 ? L->K * lambda(x) : 0.0);
}

double RadialPotential::slope(double r) const {
  if (r <= layers_.front().a || r > layers_.back().b) return 0.0;
  for (const auto& l : layers_)
    if (r <= l.b) return -l.q * r / N_ - (l.K != 0 ? l.K * std::pow(r, 1 - N_) : 0.0);
  return 0.0;
}

RadialPotential radial_potential(const RadialConfig& rc) { return RadialPotential(rc); }

namespace {

void check_relation(const std::vector<HighReal>& R, int N, bool bilayer) {
  using std::pow;
  auto p = [&](std::size_t i) { return pow(R[i], N); };
  HighReal scale = p(R.size() - 1);
  HighReal tol = HighReal(1e-10) * scale;
  bool ok;
  if (!bilayer) {
    ok = abs((p(2) - p(1)) - (p(1) - p(0))) <= tol;
  } else {
    HighReal inner = p(1) - p(0), mid = p(2) - p(1), outer = p(3) - p(2);
    ok = abs(outer - inner) <= tol && abs(mid / 2 - inner) <= tol;
  }
  if (!ok) throw Error(ErrorKind::RelationViolated, "radii do not satisfy the equal-mass relation");
}

// Appendix formulas as written, with two corrections: the outer interfacial
// term of the planar-disc monolayer is R_2 d_v0, and the log R_0 coefficient
// of the planar-disc bilayer carries -R_0^2 R_1^2 / 2.
HighReal closed_form(RadialKind kind, const std::vector<HighReal>& R, int N, const SurfaceTensions& d) {
  using std::log;
  using std::pow;
  const HighReal area = sphere_area<HighReal>(N);
  const HighReal du0 = d.d_u0, dv0 = d.d_v0, duv = d.d_uv;
  auto xlogx = [](const HighReal& coef, const HighReal& r) { return r > 0 ? coef * log(r) : HighReal(0); };
  if (kind != RadialKind::Bilayer) {
    const HighReal &R0 = R[0], &R1 = R[1], &R2 = R[2];
    if (N == 2) {
      HighReal R02 = R0 * R0, R12 = R1 * R1, S = 2 * R12 - R02;
      HighReal v = R0 * du0 + R1 * duv + R2 * dv0 - R12 * R12 / 4 + R02 * R12 / 4 -
                   xlogx(R02 * R02 / 4, R0) - R12 * (R12 - R02) * log(R1) + S * S / 8 * log(S);
      return area * v;
    }
    HighReal v = pow(R0, N - 1) * du0 + pow(R1, N - 1) * duv + pow(R2, N - 1) * dv0 +
                 (pow(R0, N + 2) - pow(R2, N + 2)) / (N * N - 4) +
                 HighReal(2) / (N * (N - 2)) * R1 * R1 * (pow(R1, N) - pow(R0, N));
    return area * v;
  }
  const HighReal &R0 = R[0], &R1 = R[1], &R2 = R[2], &R3 = R[3];
  if (N == 2) {
    HighReal a = R0 * R0, b = R1 * R1, c = R2 * R2, e = R3 * R3;
    HighReal v = (R0 + R3) * du0 + (R1 + R2) * duv + (a * a - e * e) / 16 +
                 xlogx(-a * b / 2 + a * c / 2 - a * e / 4, R0) + (a * b / 2 - b * c + b * e / 2) * log(R1) +
                 (-a * c / 2 + b * c - c * e / 2) * log(R2) + (a * e / 4 - b * e / 2 + c * e / 2) * log(R3);
    return area * v;
  }
  auto P = [&](const HighReal& r, int k) { return pow(r, k); };
  HighReal v = (P(R0, N - 1) + P(R3, N - 1)) * du0 + (P(R1, N - 1) + P(R2, N - 1)) * duv +
               (P(R0, N + 2) - P(R3, N + 2)) / (2 * N * (N + 2)) +
               (-4 * P(R0, N) * R1 * R1 + 4 * P(R0, N) * R2 * R2 - 8 * P(R1, N) * R2 * R2 + P(R0, N + 2) +
                4 * P(R1, N + 2) + 4 * P(R2, N + 2) - P(R3, N + 2)) /
                   (2 * N * (N - 2));
  return area * v;
}

SurfaceTensions oriented(const SurfaceTensions& d, Phase inner) {
  return inner == Phase::V ? d.swapped() : d;
}

} // namespace

double closed_form_energy(RadialKind kind, const std::vector<double>& radii, int N, const SurfaceTensions& d,
                          Phase inner) {
  if (N < 2) throw Error(ErrorKind::InvalidRadial, "dimension must be at least 2");
  std::size_t need = kind == RadialKind::Bilayer ? 4 : 3;
  if (radii.size() != need) throw Error(ErrorKind::InvalidRadial, "wrong number of radii");
  if (kind == RadialKind::Micelle && radii[0] != 0)
    throw Error(ErrorKind::InvalidRadial, "a micelle has R_0 = 0");
  if (kind == RadialKind::Bilayer && !(radii[0] > 0))
    throw Error(ErrorKind::InvalidRadial, "the bilayer formula needs R_0 > 0");
  std::vector<HighReal> R(radii.begin(), radii.end());
  check_relation(R, N, kind == RadialKind::Bilayer);
  return static_cast<double>(closed_form(kind, R, N, oriented(d, inner)));
}

double expansion_energy(RadialKind kind, double m, double kappa, int N, const SurfaceTensions& d,
                        Phase inner) {
  if (!(m > 0) || kappa < 0) throw Error(ErrorKind::RadiiCollapse, "need m > 0 and kappa >= 0");
  if (!(1 - N * m * kappa > 0)) throw Error(ErrorKind::RadiiCollapse, "1 - N m kappa must be positive");
  SurfaceTensions t = oriented(d, inner);
  double k2 = kappa * kappa;
  if (kind == RadialKind::Monolayer) {
    return (t.d_u0 + t.d_uv + t.d_v0) / m + 2.0 / 3.0 * m * m + (N - 1) * (t.d_v0 - t.d_u0) * kappa +
           (N - 1) * m * (-0.5 * (t.d_u0 + t.d_v0) + (3 * N - 2) * m * m * m / 15.0) * k2;
  }
  if (kind == RadialKind::Bilayer) {
    return 2 * (t.d_u0 + t.d_uv) / m + m * m / 6.0 +
           (N - 1) * m * (-(t.d_u0 + 0.25 * t.d_uv) + 11.0 / 240.0 * (3 * N - 2) * m * m * m) * k2;
  }
  throw Error(ErrorKind::InvalidRadial, "micelles have no curvature expansion");
}

double exact_energy_per_mass(RadialKind kind, double m, double kappa, int N, const SurfaceTensions& d,
                             Phase inner) {
  if (N < 2) throw Error(ErrorKind::InvalidRadial, "dimension must be at least 2");
  auto R = curvature_radii<HighReal>(kind, N, HighReal(m), HighReal(kappa));
  auto t = radial_terms<HighReal>(N, R, curvature_labels(kind, inner), d);
  return static_cast<double>((t.interfacial + t.nonlocal) / t.mass);
}

Minimum golden_section(const std::function<double(double)>& f, double a, double b, double tol) {
  const double invphi = (std::sqrt(5.0) - 1) / 2;
  double c = b - invphi * (b - a), e = a + invphi * (b - a);
  double fc = f(c), fe = f(e);
  while (std::abs(b - a) > tol * std::max(1.0, std::abs(a) + std::abs(b))) {
    if (fc < fe) {
      b = e;
      e = c;
      fe = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = e;
      fc = fe;
      e = a + invphi * (b - a);
      fe = f(e);
    }
  }
  double x = 0.5 * (a + b);
  return {x, f(x)};
}

namespace {

// Brackets the minimum of f on a uniform grid over [lo, hi], then refines.
Minimum bracket_and_refine(const std::function<double(double)>& f, double lo, double hi, int steps) {
  double h = (hi - lo) / steps;
  int best = 0;
  double fbest = f(lo);
  for (int i = 1; i <= steps; ++i) {
    double v = f(lo + i * h);
    if (v < fbest) {
      fbest = v;
      best = i;
    }
  }
  double a = lo + std::max(best - 1, 0) * h, b = lo + std::min(best + 1, steps) * h;
  return golden_section(f, a, b, 1e-13);
}

} // namespace

RadialOptimum micelle_optimal(int N, const SurfaceTensions& d, Phase core) {
  if (N < 2) throw Error(ErrorKind::InvalidRadial, "dimension must be at least 2");
  auto per_mass = [&](double t) {
    RadialConfig rc = radial_micelle(N, std::exp(t), core);
    return radial_energy(rc, d).total / radial_mass(rc);
  };
  Minimum best = bracket_and_refine(per_mass, std::log(1e-4), std::log(1e4), 160);
  return {std::exp(best.x), best.value};
}

double micelle_closed_form(int N, const SurfaceTensions& d, Phase core) {
  double shell = core == Phase::U ? d.d_v0 : d.d_u0;
  if (N == 2)
    return 3 * std::pow(d.d_uv + shell * std::sqrt(2.0), 2.0 / 3.0) * std::cbrt(std::log(2.0) - 0.5);
  double geom = (N + 2 - N * std::pow(2.0, 2.0 / N)) / (N * (double(N) * N - 4));
  return std::pow(2.0, -1.0 / 3.0) * 3 * N * std::pow(d.d_uv + shell * std::pow(2.0, 1.0 - 1.0 / N), 2.0 / 3.0) *
         std::cbrt(geom);
}

RadialOptimum shell_optimal(int N, double kappa, const SurfaceTensions& d, Phase inner) {
  if (!(kappa > 0)) throw Error(ErrorKind::RadiiCollapse, "kappa must be positive");
  double mmax = (1 - 1e-9) / (N * kappa);
  auto per_mass = [&](double t) {
    return exact_energy_per_mass(RadialKind::Monolayer, std::exp(t), kappa, N, d, inner);
  };
  Minimum best = bracket_and_refine(per_mass, std::log(1e-4 * mmax), std::log(mmax), 200);
  return {std::exp(best.x), best.value};
}

} // namespace blend
