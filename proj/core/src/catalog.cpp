#include "bih/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bih/errors.hpp"
#include "bih/geometry.hpp"

namespace bih {

namespace {

constexpr double kPi = 3.14159265358979323846;
const double kInvSqrt2 = std::sqrt(0.5);

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

// Round sphere chart of the unit S^m, m in 1..3.  Polar angles first,
// azimuthal angle last; the metric is diag(1, sin^2 u0, sin^2 u0 sin^2 u1).
std::vector<Jet> unit_sphere_chart(std::span<const Jet> u, int m) {
  switch (m) {
    case 1:
      return {cos(u[0]), sin(u[0])};
    case 2:
      return {sin(u[0]) * cos(u[1]), sin(u[0]) * sin(u[1]), cos(u[0])};
    case 3:
      return {sin(u[0]) * sin(u[1]) * cos(u[2]), sin(u[0]) * sin(u[1]) * sin(u[2]),
              sin(u[0]) * cos(u[1]), cos(u[0])};
    default:
      throw_error(ErrorKind::Config, "sphere chart supports dimensions 1 to 3");
  }
}

// Appends the domain walls of the S^m chart above: polar angles kept away
// from the poles, azimuthal angle periodic.
void append_sphere_axes(int m, Box& domain, std::vector<double>& period, Box& sample) {
  for (int i = 0; i + 1 < m; ++i) {
    domain.lo.push_back(0.2);
    domain.hi.push_back(kPi - 0.2);
    period.push_back(0.0);
    sample.lo.push_back(0.25);
    sample.hi.push_back(kPi - 0.25);
  }
  domain.lo.push_back(0.0);
  domain.hi.push_back(2.0 * kPi);
  period.push_back(2.0 * kPi);
  sample.lo.push_back(0.0);
  sample.hi.push_back(2.0 * kPi);
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw_error(ErrorKind::Config, msg);
}

}  // namespace

ImmersionPatch small_hypersphere(int m, double a) {
  require(m >= 1 && m <= 3, "small_hypersphere: m must be 1, 2 or 3");
  require(a > 0.0 && a <= 1.0, "small_hypersphere: radius a must lie in (0, 1]");
  const double b = std::sqrt(1.0 - a * a);

  ImmersionPatch p;
  p.name = "small_hypersphere(m=" + std::to_string(m) + ",a=" + fmt(a) + ")";
  p.map.domain_dim = m;
  p.map.ambient_dim = m + 2;
  p.map.eval = [m, a, b](std::span<const Jet> u) {
    std::vector<Jet> out = unit_sphere_chart(u, m);
    for (auto& j : out) j *= a;
    out.push_back(Jet::constant(u[0].space(), b));
    return out;
  };
  append_sphere_axes(m, p.domain, p.period, p.sample_box);

  const double kappa = b / a;
  auto& e = p.expected;
  if (std::abs(a - kInvSqrt2) < 1e-12)
    e.verdict = Verdict::ProperBiharmonic;
  else if (std::abs(a - 1.0) < 1e-12)
    e.verdict = Verdict::Harmonic;
  else
    e.verdict = Verdict::NotBiharmonic;
  e.mean_curvature_norm = kappa;
  e.tension_norm = m * kappa;
  if (e.verdict != Verdict::NotBiharmonic) e.bitension_norm = 0.0;
  e.scalar_curvature = m * (m - 1.0) * (1.0 + kappa * kappa);
  e.second_fundamental_norm2 = m * kappa * kappa;
  e.shape_eigenvalues.assign(m, kappa);
  e.mean_shape_eigenvalues.assign(m, kappa * kappa);
  if (m == 1) {
    e.chen_type = 1;
    e.chen_eigenvalues = {1.0 / (a * a)};
  }
  return p;
}

ImmersionPatch clifford_product(int m1, int m2, double r1, double r2) {
  require(m1 >= 1 && m1 <= 3 && m2 >= 1 && m2 <= 3, "clifford_product: factors must have dimension 1 to 3");
  require(m1 + m2 <= kMaxJetVars, "clifford_product: total dimension too large");
  require(r1 > 0.0 && r2 > 0.0, "clifford_product: radii must be positive");
  require(std::abs(r1 * r1 + r2 * r2 - 1.0) <= 1e-12,
          "clifford_product: radii must satisfy r1^2 + r2^2 = 1");
  const int m = m1 + m2;

  ImmersionPatch p;
  p.name = "clifford_product(m1=" + std::to_string(m1) + ",m2=" + std::to_string(m2) +
           ",r1=" + fmt(r1) + ",r2=" + fmt(r2) + ")";
  p.map.domain_dim = m;
  p.map.ambient_dim = m + 2;
  p.map.eval = [m1, m2, r1, r2](std::span<const Jet> u) {
    std::vector<Jet> out = unit_sphere_chart(u.subspan(0, m1), m1);
    for (auto& j : out) j *= r1;
    std::vector<Jet> tail = unit_sphere_chart(u.subspan(m1), m2);
    for (auto& j : tail) out.push_back(j * r2);
    return out;
  };
  append_sphere_axes(m1, p.domain, p.period, p.sample_box);
  append_sphere_axes(m2, p.domain, p.period, p.sample_box);

  double k1 = r2 / r1, k2 = -r1 / r2;
  double trace = m1 * k1 + m2 * k2;
  if (trace < 0.0) {
    k1 = -k1;
    k2 = -k2;
    trace = -trace;
  }
  const double h = trace / m;

  auto& e = p.expected;
  const bool equal_radii = std::abs(r1 - r2) <= 1e-12;
  if (equal_radii && m1 == m2)
    e.verdict = Verdict::Harmonic;
  else if (equal_radii)
    e.verdict = Verdict::ProperBiharmonic;
  else
    e.verdict = Verdict::NotBiharmonic;
  e.mean_curvature_norm = h;
  e.tension_norm = m * h;
  if (e.verdict != Verdict::NotBiharmonic) e.bitension_norm = 0.0;
  e.second_fundamental_norm2 = m1 * k1 * k1 + m2 * k2 * k2;
  e.scalar_curvature = m * (m - 1.0) + m * m * h * h - *e.second_fundamental_norm2;
  e.shape_eigenvalues.assign(m1, k1);
  e.shape_eigenvalues.insert(e.shape_eigenvalues.end(), m2, k2);
  std::sort(e.shape_eigenvalues.begin(), e.shape_eigenvalues.end());
  e.mean_shape_eigenvalues.assign(m1, h * k1);
  e.mean_shape_eigenvalues.insert(e.mean_shape_eigenvalues.end(), m2, h * k2);
  std::sort(e.mean_shape_eigenvalues.begin(), e.mean_shape_eigenvalues.end());
  if (m1 == 1 && m2 == 1) {
    if (equal_radii) {
      e.chen_type = 1;
      e.chen_eigenvalues = {2.0};
    } else {
      e.chen_type = 2;
      e.chen_eigenvalues = {1.0 / (r1 * r1), 1.0 / (r2 * r2)};
      std::sort(e.chen_eigenvalues.begin(), e.chen_eigenvalues.end());
    }
  }
  return p;
}

ImmersionPatch biharmonic_circle(double a) {
  require(a > 0.0 && a <= 1.0, "biharmonic_circle: radius a must lie in (0, 1]");
  const double b = std::sqrt(1.0 - a * a);

  ImmersionPatch p;
  p.name = "biharmonic_circle(a=" + fmt(a) + ")";
  p.map.domain_dim = 1;
  p.map.ambient_dim = 4;
  p.map.eval = [a, b](std::span<const Jet> u) {
    Jet t = u[0] * (1.0 / a);
    const JetSpace& s = u[0].space();
    return std::vector<Jet>{a * cos(t), a * sin(t), Jet::constant(s, b), Jet::constant(s, 0.0)};
  };
  p.domain = {{0.0}, {2.0 * kPi * a}};
  p.period = {2.0 * kPi * a};
  p.sample_box = p.domain;

  const double kappa = b / a;
  auto& e = p.expected;
  if (std::abs(a - kInvSqrt2) < 1e-12)
    e.verdict = Verdict::ProperBiharmonic;
  else if (std::abs(a - 1.0) < 1e-12)
    e.verdict = Verdict::Harmonic;
  else
    e.verdict = Verdict::NotBiharmonic;
  e.mean_curvature_norm = kappa;
  e.tension_norm = kappa;
  if (e.verdict != Verdict::NotBiharmonic) e.bitension_norm = 0.0;
  e.scalar_curvature = 0.0;
  e.second_fundamental_norm2 = kappa * kappa;
  e.mean_shape_eigenvalues = {kappa * kappa};
  e.chen_type = 1;
  e.chen_eigenvalues = {1.0 / (a * a)};
  return p;
}

ImmersionPatch clifford_geodesic(double s) {
  require(s >= 0.0 && s < 1.0, "clifford_geodesic: slope parameter must lie in [0, 1)");
  const double al = std::sqrt(1.0 + s), be = std::sqrt(1.0 - s);

  ImmersionPatch p;
  p.name = "clifford_geodesic(s=" + fmt(s) + ")";
  p.map.domain_dim = 1;
  p.map.ambient_dim = 4;
  p.map.eval = [al, be](std::span<const Jet> u) {
    Jet a = u[0] * al, b = u[0] * be;
    return std::vector<Jet>{kInvSqrt2 * cos(a), kInvSqrt2 * sin(a), kInvSqrt2 * cos(b),
                            kInvSqrt2 * sin(b)};
  };
  p.domain = {{0.0}, {6.4}};
  p.period = {0.0};
  p.sample_box = {{0.2}, {6.2}};

  SpectralLift lift;
  lift.chart.domain_dim = 2;
  lift.chart.ambient_dim = 4;
  lift.chart.eval = [](std::span<const Jet> u) {
    return std::vector<Jet>{kInvSqrt2 * cos(u[0]), kInvSqrt2 * sin(u[0]), kInvSqrt2 * cos(u[1]),
                            kInvSqrt2 * sin(u[1])};
  };
  lift.periods = {2.0 * kPi, 2.0 * kPi};
  lift.direction = {al, be};
  p.lift = std::move(lift);

  auto& e = p.expected;
  e.verdict = s < 1e-12 ? Verdict::Harmonic : Verdict::ProperBiharmonic;
  e.mean_curvature_norm = s;
  e.tension_norm = s;
  e.bitension_norm = 0.0;
  e.scalar_curvature = 0.0;
  e.second_fundamental_norm2 = s * s;
  e.mean_shape_eigenvalues = {s * s};
  if (s < 1e-12) {
    e.chen_type = 1;
    e.chen_eigenvalues = {1.0};
  } else {
    e.chen_type = 2;
    e.chen_eigenvalues = {1.0 - s, 1.0 + s};
  }
  return p;
}

ImmersionPatch antiinvariant_torus() {
  ImmersionPatch p;
  p.name = "antiinvariant_torus";
  p.map.domain_dim = 3;
  p.map.ambient_dim = 6;
  p.map.eval = [](std::span<const Jet> u) {
    const double r2 = std::sqrt(2.0);
    Jet sum = u[0] + u[2];   // u + w
    Jet dif = u[2] - u[0];   // w - u
    Jet sv = sin(r2 * u[1]), cv = cos(r2 * u[1]);
    Jet sd = sin(dif), cd = cos(dif);
    return std::vector<Jet>{kInvSqrt2 * cos(sum),  kInvSqrt2 * sin(sum),
                            kInvSqrt2 * (-1.0 * (sd * sv)), kInvSqrt2 * (cd * sv),
                            kInvSqrt2 * (-1.0 * (sd * cv)), kInvSqrt2 * (cd * cv)};
  };
  const double r2pi = std::sqrt(2.0) * kPi;
  p.domain = {{0.0, 0.0, 0.0}, {2.0 * kPi, r2pi, 2.0 * kPi}};
  p.period = {2.0 * kPi, r2pi, 2.0 * kPi};
  p.sample_box = p.domain;

  auto& e = p.expected;
  e.verdict = Verdict::ProperBiharmonic;
  e.mean_curvature_norm = 1.0 / 3.0;
  e.tension_norm = 1.0;
  e.bitension_norm = 0.0;
  e.scalar_curvature = 0.0;
  e.second_fundamental_norm2 = 7.0;
  e.chen_type = 2;
  e.chen_eigenvalues = {2.0, 4.0};
  return p;
}

ImmersionPatch composed_minimal(const ImmersionPatch& inner) {
  if (inner.ambient.kind != AmbientKind::Sphere || std::abs(inner.ambient.radius - 1.0) > 1e-12)
    throw_error(ErrorKind::Precondition, "composed_minimal: inner patch must sit in a unit sphere");
  for (const auto& q : sample_grid(inner, 3)) {
    ShapeData sd = second_fundamental(inner, q);
    if (sd.h_norm > 1e-8)
      throw_error(ErrorKind::Precondition,
                  "composed_minimal: inner patch " + inner.name + " is not minimal, |H| = " +
                      fmt(sd.h_norm) + " at a sample point");
  }
  const int m = inner.dim();

  ImmersionPatch p;
  p.name = "composed_minimal(" + inner.name + ")";
  p.map.domain_dim = m;
  p.map.ambient_dim = inner.ambient_dim() + 1;
  p.map.eval = [im = inner.map](std::span<const Jet> u) {
    std::vector<Jet> out = im.eval(u);
    for (auto& j : out) j *= kInvSqrt2;
    out.push_back(Jet::constant(u[0].space(), kInvSqrt2));
    return out;
  };
  p.domain = inner.domain;
  p.period = inner.period;
  p.sample_box = inner.sample_box;

  auto& e = p.expected;
  e.verdict = Verdict::ProperBiharmonic;
  e.mean_curvature_norm = 1.0;
  e.tension_norm = static_cast<double>(m);
  e.bitension_norm = 0.0;
  if (inner.expected.scalar_curvature) {
    e.scalar_curvature = 2.0 * *inner.expected.scalar_curvature;
    e.second_fundamental_norm2 = m * (m - 1.0) + m * m - *e.scalar_curvature;
  }
  e.mean_shape_eigenvalues.assign(m, 1.0);
  bool meshable = true;
  for (double per : inner.period) meshable = meshable && per > 0.0;
  if (meshable) {
    e.chen_type = 1;
    e.chen_eigenvalues = {2.0 * m};
  }
  return p;
}

ImmersionPatch circle_cross_minimal(int m) {
  require(m >= 2 && m + 1 <= kMaxJetVars, "circle_cross_minimal: m must lie in 2..5");
  const int m1 = (m + 1) / 2, m2 = m - m1;
  require(m1 <= 3 && m2 <= 3, "circle_cross_minimal: factor dimensions above 3 are unsupported");
  const double r1 = std::sqrt(static_cast<double>(m1) / m);
  const double r2 = std::sqrt(static_cast<double>(m2) / m);

  ImmersionPatch p;
  p.name = "circle_cross_minimal(m=" + std::to_string(m) + ")";
  p.map.domain_dim = m + 1;
  p.map.ambient_dim = m + 4;
  p.map.eval = [m1, m2, r1, r2](std::span<const Jet> u) {
    std::vector<Jet> out{kInvSqrt2 * cos(u[0]), kInvSqrt2 * sin(u[0])};
    std::vector<Jet> f1 = unit_sphere_chart(u.subspan(1, m1), m1);
    for (auto& j : f1) out.push_back(j * (r1 * kInvSqrt2));
    std::vector<Jet> f2 = unit_sphere_chart(u.subspan(1 + m1), m2);
    for (auto& j : f2) out.push_back(j * (r2 * kInvSqrt2));
    return out;
  };
  p.domain.lo.push_back(0.0);
  p.domain.hi.push_back(2.0 * kPi);
  p.period.push_back(2.0 * kPi);
  p.sample_box.lo.push_back(0.0);
  p.sample_box.hi.push_back(2.0 * kPi);
  append_sphere_axes(m1, p.domain, p.period, p.sample_box);
  append_sphere_axes(m2, p.domain, p.period, p.sample_box);

  const int mt = m + 1;
  const double h = static_cast<double>(m - 1) / (m + 1);
  auto& e = p.expected;
  e.verdict = Verdict::ProperBiharmonic;
  e.mean_curvature_norm = h;
  e.tension_norm = mt * h;
  e.bitension_norm = 0.0;
  e.scalar_curvature = 2.0 * m * (m - 2.0);
  e.second_fundamental_norm2 = 3.0 * m + 1.0;
  if (m == 2) {
    e.mean_shape_eigenvalues = {-1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
    e.chen_type = 2;
    e.chen_eigenvalues = {2.0, 4.0};
  }
  return p;
}

ImmersionPatch codim2_inner(int m, double a, Codim2Inner kind) {
  require(a > 0.0 && a < 1.0, "codim2_inner: a must lie in (0, 1)");
  ImmersionPatch p;
  if (kind == Codim2Inner::Hypersphere) {
    require(m >= 1 && m <= 3, "codim2_inner: m must be 1, 2 or 3");
    require(a >= kInvSqrt2 - 1e-12, "codim2_inner: the sphere of radius 1/sqrt(2) needs a >= 1/sqrt(2)");
    const double r = kInvSqrt2;
    const double h = std::sqrt(std::max(0.0, a * a - r * r));
    p.name = "codim2_inner_sphere(m=" + std::to_string(m) + ",a=" + fmt(a) + ")";
    p.map.domain_dim = m;
    p.map.ambient_dim = m + 2;
    p.map.eval = [m, r, h](std::span<const Jet> u) {
      std::vector<Jet> out = unit_sphere_chart(u, m);
      for (auto& j : out) j *= r;
      out.push_back(Jet::constant(u[0].space(), h));
      return out;
    };
    append_sphere_axes(m, p.domain, p.period, p.sample_box);
    const double kappa = h / (a * r);
    auto& e = p.expected;
    e.mean_curvature_norm = kappa;
    e.tension_norm = m * kappa;
    if (std::abs(a - 1.0) < 1e-12)
      e.verdict = Verdict::ProperBiharmonic;
    else if (std::abs(a - kInvSqrt2) < 1e-12)
      e.verdict = Verdict::Harmonic;
    else
      e.verdict = Verdict::NotBiharmonic;
  } else {
    require(m == 2, "codim2_inner: the Clifford torus inner patch has dimension 2");
    const double r = a * kInvSqrt2;
    p.name = "codim2_inner_torus(a=" + fmt(a) + ")";
    p.map.domain_dim = 2;
    p.map.ambient_dim = 4;
    p.map.eval = [r](std::span<const Jet> u) {
      return std::vector<Jet>{r * cos(u[0]), r * sin(u[0]), r * cos(u[1]), r * sin(u[1])};
    };
    p.domain = {{0.0, 0.0}, {2.0 * kPi, 2.0 * kPi}};
    p.period = {2.0 * kPi, 2.0 * kPi};
    p.sample_box = p.domain;
    auto& e = p.expected;
    e.verdict = Verdict::Harmonic;
    e.mean_curvature_norm = 0.0;
    e.tension_norm = 0.0;
  }
  p.ambient = {AmbientKind::Sphere, a};
  return p;
}

ImmersionPatch codim2_tower(int m, double a, Codim2Inner kind) {
  ImmersionPatch inner = codim2_inner(m, a, kind);
  const double h = std::sqrt(1.0 - a * a);

  ImmersionPatch p;
  p.name = "codim2_tower(" + inner.name + ")";
  p.map.domain_dim = inner.dim();
  p.map.ambient_dim = inner.ambient_dim() + 1;
  p.map.eval = [im = inner.map, h](std::span<const Jet> u) {
    std::vector<Jet> out = im.eval(u);
    out.push_back(Jet::constant(u[0].space(), h));
    return out;
  };
  p.domain = inner.domain;
  p.period = inner.period;
  p.sample_box = inner.sample_box;

  auto& e = p.expected;
  if (kind == Codim2Inner::Hypersphere) {
    e.verdict = Verdict::ProperBiharmonic;
    e.mean_curvature_norm = 1.0;
    e.tension_norm = static_cast<double>(m);
    e.bitension_norm = 0.0;
  } else {
    const double kappa = h / a;
    e.mean_curvature_norm = kappa;
    e.tension_norm = m * kappa;
    if (std::abs(a - kInvSqrt2) < 1e-12) {
      e.verdict = Verdict::ProperBiharmonic;
      e.bitension_norm = 0.0;
    } else {
      e.verdict = Verdict::NotBiharmonic;
    }
  }
  return p;
}

ImmersionPatch great_circle_s2() {
  ImmersionPatch p;
  p.name = "great_circle_s2";
  p.map.domain_dim = 1;
  p.map.ambient_dim = 3;
  p.map.eval = [](std::span<const Jet> u) {
    return std::vector<Jet>{cos(u[0]), sin(u[0]), Jet::constant(u[0].space(), 0.0)};
  };
  p.domain = {{0.0}, {2.0 * kPi}};
  p.period = {2.0 * kPi};
  p.sample_box = p.domain;
  auto& e = p.expected;
  e.verdict = Verdict::Harmonic;
  e.mean_curvature_norm = 0.0;
  e.tension_norm = 0.0;
  e.bitension_norm = 0.0;
  e.scalar_curvature = 0.0;
  e.chen_type = 1;
  e.chen_eigenvalues = {1.0};
  return p;
}

ImmersionPatch clifford_minimal_torus_s3() {
  ImmersionPatch p = clifford_product(1, 1, kInvSqrt2, kInvSqrt2);
  p.name = "clifford_minimal_torus_s3";
  return p;
}

ImmersionPatch nonminimal_torus_s3() {
  ImmersionPatch p = clifford_product(1, 1, 0.5, std::sqrt(3.0) / 2.0);
  p.name = "nonminimal_torus_s3";
  return p;
}

ImmersionPatch wobbly_torus() {
  ImmersionPatch p;
  p.name = "wobbly_torus";
  p.map.domain_dim = 2;
  p.map.ambient_dim = 4;
  p.map.eval = [](std::span<const Jet> u) {
    Jet psi = 0.1 * sin(u[0]) + kPi / 4.0;
    Jet sp = sin(psi), cp = cos(psi);
    return std::vector<Jet>{sp * cos(u[1]), sp * sin(u[1]), cp * cos(u[0]), cp * sin(u[0])};
  };
  p.domain = {{0.0, 0.0}, {2.0 * kPi, 2.0 * kPi}};
  p.period = {2.0 * kPi, 2.0 * kPi};
  p.sample_box = p.domain;
  p.expected.verdict = Verdict::NotBiharmonic;
  return p;
}

namespace {

int int_param(const std::map<std::string, double>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end())
    throw_error(ErrorKind::Config, "catalog entry needs integer parameter '" + key + "'");
  double r = std::round(it->second);
  if (std::abs(it->second - r) > 1e-9)
    throw_error(ErrorKind::Config, "parameter '" + key + "' must be an integer");
  return static_cast<int>(r);
}

double real_param(const std::map<std::string, double>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end())
    throw_error(ErrorKind::Config, "catalog entry needs parameter '" + key + "'");
  return it->second;
}

void check_keys(const std::map<std::string, double>& params,
                std::initializer_list<const char*> allowed, const std::string& entry) {
  for (const auto& [k, v] : params) {
    bool ok = false;
    for (const char* key : allowed) ok = ok || k == key;
    if (!ok) throw_error(ErrorKind::Config, "unknown parameter '" + k + "' for entry " + entry);
  }
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"small_hypersphere",   "clifford_product",  "biharmonic_circle",
          "clifford_geodesic",   "antiinvariant_torus", "composed_great_circle",
          "composed_clifford_torus", "circle_cross_minimal", "codim2_tower_sphere",
          "codim2_tower_torus",  "wobbly_torus"};
}

ImmersionPatch make_catalog_entry(const std::string& name,
                                  const std::map<std::string, double>& params) {
  if (name == "small_hypersphere") {
    check_keys(params, {"m", "a"}, name);
    return small_hypersphere(int_param(params, "m"), real_param(params, "a"));
  }
  if (name == "clifford_product") {
    check_keys(params, {"m1", "m2", "r1", "r2"}, name);
    double r1 = params.count("r1") ? real_param(params, "r1") : kInvSqrt2;
    double r2 = params.count("r2") ? real_param(params, "r2") : kInvSqrt2;
    if (params.count("r1") != params.count("r2"))
      throw_error(ErrorKind::Config, "clifford_product: give both radii or neither");
    return clifford_product(int_param(params, "m1"), int_param(params, "m2"), r1, r2);
  }
  if (name == "biharmonic_circle") {
    check_keys(params, {"a"}, name);
    return biharmonic_circle(real_param(params, "a"));
  }
  if (name == "clifford_geodesic") {
    check_keys(params, {"s"}, name);
    return clifford_geodesic(real_param(params, "s"));
  }
  if (name == "antiinvariant_torus") {
    check_keys(params, {}, name);
    return antiinvariant_torus();
  }
  if (name == "composed_great_circle") {
    check_keys(params, {}, name);
    return composed_minimal(great_circle_s2());
  }
  if (name == "composed_clifford_torus") {
    check_keys(params, {}, name);
    return composed_minimal(clifford_minimal_torus_s3());
  }
  if (name == "circle_cross_minimal") {
    check_keys(params, {"m"}, name);
    return circle_cross_minimal(int_param(params, "m"));
  }
  if (name == "codim2_tower_sphere") {
    check_keys(params, {"m", "a"}, name);
    return codim2_tower(int_param(params, "m"), real_param(params, "a"), Codim2Inner::Hypersphere);
  }
  if (name == "codim2_tower_torus") {
    check_keys(params, {"a"}, name);
    return codim2_tower(2, real_param(params, "a"), Codim2Inner::CliffordTorus);
  }
  if (name == "wobbly_torus") {
    check_keys(params, {}, name);
    return wobbly_torus();
  }
  throw_error(ErrorKind::Config, "unknown catalog entry '" + name + "'");
}

std::string catalog_entry_help(const std::string& name) {
  if (name == "small_hypersphere") return "m, a: S^m(a) in S^{m+1}, proper biharmonic at a = 1/sqrt(2)";
  if (name == "clifford_product") return "m1, m2 [, r1, r2]: S^{m1}(r1) x S^{m2}(r2), default radii 1/sqrt(2)";
  if (name == "biharmonic_circle") return "a: circle of radius a in S^3, arclength chart";
  if (name == "clifford_geodesic") return "s: slope-s geodesic of the Clifford torus, |H| = s";
  if (name == "antiinvariant_torus") return "flat 3-torus in S^5 with |H| = 1/3, non-parallel H";
  if (name == "composed_great_circle") return "great circle of S^2 lifted to S^3, |H| = 1";
  if (name == "composed_clifford_torus") return "minimal Clifford torus of S^3 lifted to S^4, |H| = 1";
  if (name == "circle_cross_minimal") return "m: S^1(1/sqrt(2)) x minimal Clifford M^m in S^{m+3}";
  if (name == "codim2_tower_sphere") return "m, a: S^m(1/sqrt(2)) in S^{m+1}(a) in S^{m+2}";
  if (name == "codim2_tower_torus") return "a: minimal Clifford torus of S^3(a) in S^4";
  if (name == "wobbly_torus") return "non-CMC control surface in S^3";
  throw_error(ErrorKind::Config, "unknown catalog entry '" + name + "'");
}

}  // namespace bih
