#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "bih/fd.hpp"

using namespace bih;

TEST_CASE("stencil tables match the classical central coefficients") {
  const Stencil1D& d1 = central_stencil(1, 4);
  CHECK(d1.offsets == std::vector<int>{-2, -1, 1, 2});
  CHECK(d1.weights == std::vector<double>{1.0 / 12, -2.0 / 3, 2.0 / 3, -1.0 / 12});

  const Stencil1D& d2 = central_stencil(2, 4);
  CHECK(d2.weights == std::vector<double>{-1.0 / 12, 4.0 / 3, -5.0 / 2, 4.0 / 3, -1.0 / 12});

  const Stencil1D& d3 = central_stencil(3, 4);
  CHECK(d3.offsets == std::vector<int>{-3, -2, -1, 1, 2, 3});
  CHECK(d3.weights == std::vector<double>{1.0 / 8, -1.0, 13.0 / 8, -13.0 / 8, 1.0, -1.0 / 8});

  const Stencil1D& d4 = central_stencil(4, 4);
  CHECK(d4.weights ==
        std::vector<double>{-1.0 / 6, 2.0, -13.0 / 2, 28.0 / 3, -13.0 / 2, 2.0, -1.0 / 6});

  CHECK(central_stencil(2, 2).weights == std::vector<double>{1.0, -2.0, 1.0});
  CHECK(central_stencil(4, 2).weights == std::vector<double>{1.0, -4.0, 6.0, -4.0, 1.0});
  CHECK_THROWS_AS(central_stencil(5, 4), Error);
  CHECK_THROWS_AS(central_stencil(2, 6), Error);
}

TEST_CASE("tensor product stencils and reach") {
  auto nodes = composed_stencil({1, 1}, 4);
  CHECK(nodes.size() == 16);
  double total = 0.0;
  for (const auto& n : nodes) total += n.weight;
  CHECK(total == doctest::Approx(0.0).epsilon(1e-14));

  auto pure = composed_stencil({2, 0}, 4);
  bool found_center = false;
  for (const auto& n : pure)
    if (n.offsets == std::vector<int>{0, 0}) {
      found_center = true;
      CHECK(n.weight == -5.0 / 2);
    }
  CHECK(found_center);

  FdScheme s4;
  CHECK(fd_reach({2, 1}, s4) == 2);
  CHECK(fd_reach({0, 3}, s4) == 3);
  FdScheme s2{1e-3, 2, false};
  CHECK(fd_reach({2, 0}, s2) == 1);
}

TEST_CASE("first and second derivatives at the default scheme") {
  VectorFn f = [](std::span<const double> p) {
    return std::vector<double>{std::sin(2.0 * p[0]) * std::exp(p[1])};
  };
  std::vector<double> x{0.35, -0.2};
  FdScheme sch;
  CHECK(fd_derivative(f, x, {1, 0}, sch)[0] ==
        doctest::Approx(2.0 * std::cos(0.7) * std::exp(-0.2)).epsilon(1e-10));
  CHECK(fd_derivative(f, x, {0, 2}, sch)[0] ==
        doctest::Approx(std::sin(0.7) * std::exp(-0.2)).epsilon(1e-8));
  CHECK(fd_derivative(f, x, {1, 1}, sch)[0] ==
        doctest::Approx(2.0 * std::cos(0.7) * std::exp(-0.2)).epsilon(1e-8));

  FdScheme wide{0.01, 4, true};
  CHECK(fd_derivative(f, x, {2, 1}, wide)[0] ==
        doctest::Approx(-4.0 * std::sin(0.7) * std::exp(-0.2)).epsilon(1e-7));
}

TEST_CASE("third and fourth derivatives at a wider step") {
  VectorFn f = [](std::span<const double> p) { return std::vector<double>{std::sin(2.0 * p[0])}; };
  std::vector<double> x{0.35};
  FdScheme wide{0.02, 4, true};
  CHECK(fd_derivative(f, x, {3}, wide)[0] == doctest::Approx(-8.0 * std::cos(0.7)).epsilon(1e-7));
  CHECK(fd_derivative(f, x, {4}, wide)[0] == doctest::Approx(16.0 * std::sin(0.7)).epsilon(1e-5));
}

TEST_CASE("one extrapolation level lifts the stencil order by two") {
  VectorFn f = [](std::span<const double> p) {
    return std::vector<double>{std::pow(p[0], 6.0)};
  };
  std::vector<double> x{1.0};
  FdScheme plain{0.1, 2, false};
  FdScheme rich{0.1, 2, true};
  const double exact = 30.0;
  const double err_plain = std::abs(fd_derivative(f, x, {2}, plain)[0] - exact);
  const double err_rich = std::abs(fd_derivative(f, x, {2}, rich)[0] - exact);
  // h^2 term of the classical stencil is f''''(x) h^2 / 12 = 0.3 here
  CHECK(err_plain == doctest::Approx(0.3).epsilon(1e-2));
  CHECK(err_rich < 1e-3);
  CHECK(err_rich < err_plain / 100.0);
}

TEST_CASE("vector targets are differentiated componentwise") {
  VectorFn f = [](std::span<const double> p) {
    return std::vector<double>{p[0] * p[0], std::cos(p[0])};
  };
  std::vector<double> x{0.5};
  auto d = fd_derivative(f, x, {1}, FdScheme{});
  REQUIRE(d.size() == 2);
  CHECK(d[0] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(d[1] == doctest::Approx(-std::sin(0.5)).epsilon(1e-10));
}

TEST_CASE("scheme preconditions") {
  VectorFn f = [](std::span<const double> p) { return std::vector<double>{p[0]}; };
  std::vector<double> x{0.0};
  CHECK_THROWS_AS(fd_derivative(f, x, {1, 1}, FdScheme{}), Error);
  CHECK_THROWS_AS(fd_derivative(f, x, {5}, FdScheme{}), Error);
  CHECK_THROWS_AS(fd_derivative(f, x, {1}, FdScheme{-1.0, 4, true}), Error);
  CHECK_THROWS_AS(fd_derivative(f, x, {1}, FdScheme{1e-3, 3, true}), Error);
}
