#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "bih/jet.hpp"

using namespace bih;

TEST_CASE("space enumeration is graded lexicographic and complete") {
  const JetSpace& s = JetSpace::get(2, 2);
  REQUIRE(s.size() == 6);
  CHECK(s.indices()[0] == MultiIndex{0, 0});
  CHECK(s.indices()[1] == MultiIndex{0, 1});
  CHECK(s.indices()[2] == MultiIndex{1, 0});
  CHECK(s.indices()[3] == MultiIndex{0, 2});
  CHECK(s.indices()[4] == MultiIndex{1, 1});
  CHECK(s.indices()[5] == MultiIndex{2, 0});
  CHECK(JetSpace::get(1, 4).size() == 5);
  CHECK(JetSpace::get(3, 4).size() == 35);
  CHECK(JetSpace::get(6, 4).size() == 210);
  for (int p = 0; p < s.size(); ++p) CHECK(s.position(s.indices()[p]) == p);
  CHECK(s.position({3, 0}) == -1);
  CHECK(s.position({1, 2}) == -1);
}

TEST_CASE("truncated products reproduce polynomial coefficients") {
  const JetSpace& s = JetSpace::get(2, 2);
  Jet u = Jet::variable(s, 0, 0.0), v = Jet::variable(s, 1, 0.0);
  Jet p = (1.0 + u + 2.0 * v) * (1.0 + u + 2.0 * v);
  CHECK(p.coeff({0, 0}) == 1.0);
  CHECK(p.coeff({1, 0}) == 2.0);
  CHECK(p.coeff({0, 1}) == 4.0);
  CHECK(p.coeff({2, 0}) == 1.0);
  CHECK(p.coeff({1, 1}) == 4.0);
  CHECK(p.coeff({0, 2}) == 4.0);

  Jet cube = pow_int(1.0 + Jet::variable(JetSpace::get(1, 4), 0, 0.0), 3);
  CHECK(cube.coeff({2}) == 3.0);
  CHECK(cube.coeff({3}) == 1.0);
  CHECK(cube.coeff({4}) == 0.0);
}

TEST_CASE("elementary series carry the right derivative ladders") {
  const JetSpace& s = JetSpace::get(1, 4);
  Jet u = Jet::variable(s, 0, 0.3);

  Jet f = sin(u);
  CHECK(f.derivative({0}) == doctest::Approx(std::sin(0.3)).epsilon(1e-14));
  CHECK(f.derivative({1}) == doctest::Approx(std::cos(0.3)).epsilon(1e-14));
  CHECK(f.derivative({2}) == doctest::Approx(-std::sin(0.3)).epsilon(1e-14));
  CHECK(f.derivative({3}) == doctest::Approx(-std::cos(0.3)).epsilon(1e-14));
  CHECK(f.derivative({4}) == doctest::Approx(std::sin(0.3)).epsilon(1e-14));

  Jet g = exp(Jet::variable(s, 0, 0.7));
  for (int k = 0; k <= 4; ++k)
    CHECK(g.derivative({k}) == doctest::Approx(std::exp(0.7)).epsilon(1e-14));

  Jet r = recip(1.0 + Jet::variable(s, 0, 0.0));
  for (int k = 0; k <= 4; ++k) CHECK(r.coeff({k}) == doctest::Approx(k % 2 ? -1.0 : 1.0));

  Jet q = sqrt(1.0 + Jet::variable(s, 0, 0.0));
  CHECK(q.coeff({0}) == doctest::Approx(1.0));
  CHECK(q.coeff({1}) == doctest::Approx(0.5));
  CHECK(q.coeff({2}) == doctest::Approx(-1.0 / 8));
  CHECK(q.coeff({3}) == doctest::Approx(1.0 / 16));
  CHECK(q.coeff({4}) == doctest::Approx(-5.0 / 128));
}

TEST_CASE("analytic composition chains") {
  const JetSpace& s = JetSpace::get(1, 4);
  const double u0 = 0.4;
  Jet f = sqrt(1.0 + sin(Jet::variable(s, 0, u0)));
  const double sn = std::sin(u0), cs = std::cos(u0), g = 1.0 + sn;
  CHECK(f.value() == doctest::Approx(std::sqrt(g)).epsilon(1e-14));
  CHECK(f.derivative({1}) == doctest::Approx(cs / (2.0 * std::sqrt(g))).epsilon(1e-13));
  const double d2 = -sn / (2.0 * std::sqrt(g)) - cs * cs / (4.0 * std::pow(g, 1.5));
  CHECK(f.derivative({2}) == doctest::Approx(d2).epsilon(1e-12));
}

TEST_CASE("division inverts multiplication coefficientwise") {
  const JetSpace& s = JetSpace::get(2, 3);
  Jet x = Jet::variable(s, 0, 1.2), y = Jet::variable(s, 1, -0.7);
  Jet ref = sin(x) * exp(y);
  Jet q = ref / (cos(y) + 2.0);
  Jet back = q * (cos(y) + 2.0);
  for (const auto& alpha : s.indices())
    CHECK(back.coeff(alpha) == doctest::Approx(ref.coeff(alpha)).epsilon(1e-12));
}

TEST_CASE("sums and products keep the weaker exactness budget") {
  const JetSpace& s = JetSpace::get(2, 4);
  Jet x = Jet::variable(s, 0, 0.5), y = Jet::variable(s, 1, 0.25);
  Jet h = exp(x).partial(0);
  CHECK(h.valid_order() == 3);
  CHECK((h + y).valid_order() == 3);
  CHECK((h * y).valid_order() == 3);
  CHECK(h.partial(1).valid_order() == 2);
  CHECK(sin(h).valid_order() == 3);

  Jet worn = h.partial(0).partial(0).partial(0);
  CHECK(worn.valid_order() == 0);
  CHECK_THROWS_AS(worn.partial(0), Error);
  CHECK_THROWS_AS(h.coeff({2, 2}), Error);  // degree 4 > budget 3

  // mixed partials commute and obey the product rule
  Jet p = sin(x) * cos(y);
  CHECK(p.partial(0).partial(1).derivative({0, 0}) ==
        doctest::Approx(-std::cos(0.5) * std::sin(0.25)).epsilon(1e-13));
  CHECK(p.derivative({1, 1}) ==
        doctest::Approx(-std::cos(0.5) * std::sin(0.25)).epsilon(1e-13));
}

TEST_CASE("map evaluation produces every partial at once") {
  JetMap m;
  m.domain_dim = 2;
  m.ambient_dim = 2;
  m.eval = [](std::span<const Jet> u) {
    return std::vector<Jet>{u[0] * u[1], sin(u[0]) + u[1] * u[1]};
  };
  std::vector<double> at{0.3, 1.1};
  MapJet j = jet_eval_map(m, at, 3);
  REQUIRE(j.coords.size() == 2);
  CHECK(j.coords[0].value() == doctest::Approx(0.33).epsilon(1e-14));
  CHECK(j.coords[0].derivative({1, 1}) == doctest::Approx(1.0));
  CHECK(j.coords[0].derivative({2, 0}) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(j.coords[1].derivative({2, 0}) == doctest::Approx(-std::sin(0.3)).epsilon(1e-13));
  CHECK(j.coords[1].derivative({0, 2}) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(value_eval_map(m, at)[1] == doctest::Approx(std::sin(0.3) + 1.21).epsilon(1e-14));
}

TEST_CASE("guard rails reject unsupported requests") {
  CHECK_THROWS_AS(JetSpace::get(7, 2), Error);
  try {
    JetSpace::get(2, 5);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedOrder);
  }
  const JetSpace& s = JetSpace::get(1, 2);
  CHECK_THROWS_AS(sqrt(Jet::variable(s, 0, -1.0)), Error);
  CHECK_THROWS_AS(recip(Jet::variable(s, 0, 0.0)), Error);
  const JetSpace& s2 = JetSpace::get(2, 2);
  CHECK_THROWS_AS(Jet::variable(s, 0, 0.0) + Jet::variable(s2, 0, 0.0), Error);
  CHECK_THROWS_AS(Jet::constant(s, 1.0).coeff({0, 0}), Error);
}
