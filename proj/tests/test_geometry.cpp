#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "bih/catalog.hpp"
#include "bih/errors.hpp"
#include "bih/geometry.hpp"

using namespace bih;

namespace {
constexpr double kPi = 3.14159265358979323846;

// eigenvalue lists are only determined up to the normal orientation; compare
// after flipping to nonnegative trace
std::vector<double> canonical(std::vector<std::pair<double, int>> pc) {
  double trace = 0.0;
  std::vector<double> flat;
  for (auto [v, mult] : pc)
    for (int i = 0; i < mult; ++i) {
      flat.push_back(v);
      trace += v;
    }
  if (trace < -1e-12)
    for (auto& v : flat) v = -v;
  std::sort(flat.begin(), flat.end());
  return flat;
}
}  // namespace

TEST_CASE("metric data of a small hypersphere") {
  ImmersionPatch p = small_hypersphere(2, 0.8);
  std::vector<double> pt{kPi / 3.0, kPi / 5.0};
  MetricData md = first_fundamental(p, pt);

  const double su = std::sin(kPi / 3.0), cu = std::cos(kPi / 3.0);
  CHECK(md.g(0, 0) == doctest::Approx(0.64).epsilon(1e-12));
  CHECK(md.g(1, 1) == doctest::Approx(0.64 * su * su).epsilon(1e-12));
  CHECK(std::abs(md.g(0, 1)) < 1e-14);

  Eigen::MatrixXd id = md.g * md.g_inv;
  CHECK((id - Eigen::MatrixXd::Identity(2, 2)).norm() < 1e-12);
  CHECK(md.sqrt_det == doctest::Approx(0.64 * su).epsilon(1e-12));

  // chart-scale independent symbols of du^2 + sin^2 u dv^2
  CHECK(md.christoffel[0](1, 1) == doctest::Approx(-su * cu).epsilon(1e-12));
  CHECK(md.christoffel[0](1, 1) == doctest::Approx(-std::sqrt(3.0) / 4.0).epsilon(1e-12));
  CHECK(md.christoffel[1](0, 1) == doctest::Approx(cu / su).epsilon(1e-12));
  CHECK(md.christoffel[1](0, 1) == md.christoffel[1](1, 0));
  CHECK(std::abs(md.christoffel[0](0, 0)) < 1e-13);

  CHECK(md.g_derivs[0](1, 1) == doctest::Approx(0.64 * 2.0 * su * cu).epsilon(1e-12));
  CHECK(std::abs(md.g_derivs[1](0, 0)) < 1e-13);
}

TEST_CASE("shape data of a small hypersphere") {
  ImmersionPatch p = small_hypersphere(2, 0.8);
  std::vector<double> pt{kPi / 3.0, kPi / 5.0};
  ShapeData sd = second_fundamental(p, pt);

  CHECK(sd.h_norm == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(std::abs(sd.f) == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(sd.normal_frame.cols() == 1);
  CHECK(sd.normal_frame.col(0).norm() == doctest::Approx(1.0).epsilon(1e-12));

  // the frame and B are normal: orthogonal to the position and the tangents
  JetFrame fr = jet_frame(p, pt, 2);
  Eigen::VectorXd phi = fr.phi_value();
  Eigen::MatrixXd dphi = fr.dphi_value();
  CHECK(std::abs(sd.normal_frame.col(0).dot(phi)) < 1e-12);
  CHECK((dphi.transpose() * sd.normal_frame.col(0)).norm() < 1e-12);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CHECK(std::abs(sd.B[i * 2 + j].dot(phi)) < 1e-10);
      CHECK((dphi.transpose() * sd.B[i * 2 + j]).norm() < 1e-10);
    }

  CHECK((sd.A_H - sd.A_H.transpose()).norm() < 1e-12);
  CHECK(sd.A_H.trace() == doctest::Approx(2.0 * 0.75 * 0.75).epsilon(1e-10));
  CHECK(sd.b_norm2 == doctest::Approx(2.0 * 0.75 * 0.75).epsilon(1e-10));

  // umbilical: A has the single eigenvalue +-0.75 twice
  auto pc = principal_curvatures(p, pt);
  REQUIRE(pc.size() == 1);
  CHECK(pc[0].second == 2);
  CHECK(std::abs(pc[0].first) == doctest::Approx(0.75).epsilon(1e-10));

  CHECK(scalar_curvature(p, pt) == doctest::Approx(3.125).epsilon(1e-10));
}

TEST_CASE("clifford products carry their closed-form curvature data") {
  const double r = std::sqrt(0.5);
  ImmersionPatch eq = clifford_product(1, 2, r, r);
  std::vector<double> pt{1.0, kPi / 3.0, 0.7};

  ShapeData sd = second_fundamental(eq, pt);
  CHECK(sd.h_norm == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(sd.b_norm2 == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(scalar_curvature(eq, pt) == doctest::Approx(4.0).epsilon(1e-10));

  auto flat = canonical(principal_curvatures(eq, pt));
  REQUIRE(flat.size() == 3);
  CHECK(flat[0] == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(flat[1] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(flat[2] == doctest::Approx(1.0).epsilon(1e-9));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sd.A_H);
  CHECK(es.eigenvalues()[0] == doctest::Approx(-1.0 / 3.0).epsilon(1e-10));
  CHECK(es.eigenvalues()[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
  CHECK(es.eigenvalues()[2] == doctest::Approx(1.0 / 3.0).epsilon(1e-10));

  ImmersionPatch gen = clifford_product(1, 2, 0.6, 0.8);
  ShapeData sg = second_fundamental(gen, pt);
  CHECK(sg.h_norm == doctest::Approx(1.0 / 18.0).epsilon(1e-12));
  CHECK(sg.b_norm2 == doctest::Approx(209.0 / 72.0).epsilon(1e-10));
  CHECK(scalar_curvature(gen, pt) == doctest::Approx(225.0 / 72.0).epsilon(1e-10));
  auto fg = canonical(principal_curvatures(gen, pt));
  REQUIRE(fg.size() == 3);
  CHECK(fg[0] == doctest::Approx(-4.0 / 3.0).epsilon(1e-9));
  CHECK(fg[1] == doctest::Approx(0.75).epsilon(1e-9));
  CHECK(fg[2] == doctest::Approx(0.75).epsilon(1e-9));
}

TEST_CASE("quasi umbilical classification") {
  auto pts2 = [](const ImmersionPatch& p) { return sample_grid(p, 2); };
  ImmersionPatch sph = small_hypersphere(2, 0.8);
  CHECK(quasi_umbilical_check(sph, pts2(sph)));
  ImmersionPatch c12 = clifford_product(1, 2, std::sqrt(0.5), std::sqrt(0.5));
  CHECK(quasi_umbilical_check(c12, pts2(c12)));
  ImmersionPatch c22 = clifford_product(2, 2, std::sqrt(0.5), std::sqrt(0.5));
  CHECK_FALSE(quasi_umbilical_check(c22, pts2(c22)));

  // codimension 2: no principal curvatures
  ImmersionPatch circ = biharmonic_circle(std::sqrt(0.5));
  CHECK_THROWS_AS(principal_curvatures(circ, std::vector<double>{1.0}), Error);
}

TEST_CASE("beltrami identity ties the chart laplacian to the mean curvature") {
  for (const ImmersionPatch& p :
       {small_hypersphere(2, 0.8), antiinvariant_torus(), wobbly_torus()}) {
    for (const auto& pt : sample_grid(p, 2)) {
      JetFrame fr = jet_frame(p, pt, 2);
      Eigen::VectorXd lap = map_laplacian(p, pt);
      Eigen::VectorXd h0 = fr.H_value() - fr.c * fr.phi_value();
      CHECK((lap + p.dim() * h0).norm() < 1e-9);
    }
  }
}

TEST_CASE("finite difference laplacian matches the jet laplacian on chart coordinates") {
  FdScheme scheme;
  for (const ImmersionPatch& p : {small_hypersphere(2, 0.8), wobbly_torus()}) {
    std::vector<double> pt = sample_grid(p, 1).front();
    VectorFn coords = [&p, &scheme](std::span<const double> q) {
      return patch_value(p, q, 4.0 * scheme.step);
    };
    std::vector<double> fd = laplace_beltrami(coords, p, pt, scheme);
    Eigen::VectorXd exact = map_laplacian(p, pt);
    for (int a = 0; a < exact.size(); ++a)
      CHECK(fd[a] == doctest::Approx(exact[a]).epsilon(1e-8));
  }
}

TEST_CASE("normal laplacian vanishes exactly for parallel mean curvature") {
  FdScheme scheme;
  ImmersionPatch sph = small_hypersphere(2, 0.8);
  std::vector<double> pt{kPi / 3.0, kPi / 5.0};
  CHECK(normal_laplacian(sph, pt, scheme).norm() < 1e-8);

  ImmersionPatch cp = clifford_product(1, 2, std::sqrt(0.5), std::sqrt(0.5));
  std::vector<double> pt3{1.0, kPi / 3.0, 0.7};
  CHECK(normal_laplacian(cp, pt3, scheme).norm() < 1e-8);

  // the result lands in the normal bundle
  ImmersionPatch wob = wobbly_torus();
  std::vector<double> ptw{0.9, 1.7};
  Eigen::VectorXd nl = normal_laplacian(wob, ptw, scheme);
  JetFrame fr = jet_frame(wob, ptw, 2);
  CHECK(std::abs(nl.dot(fr.phi_value())) < 1e-7);
  CHECK((fr.dphi_value().transpose() * nl).norm() < 1e-7);

  // non-parallel H: the antiinvariant torus keeps a sizable normal laplacian
  ImmersionPatch at = antiinvariant_torus();
  std::vector<double> pta{0.8, 0.9, 1.1};
  CHECK(normal_laplacian(at, pta, scheme).norm() > 1e-2);
}

TEST_CASE("normal frames are orthonormal and deterministically oriented") {
  ImmersionPatch circ = biharmonic_circle(std::sqrt(0.5));
  std::vector<double> pt{1.3};
  JetFrame fr = jet_frame(circ, pt, 2);
  auto frame = normal_frame_jets(fr);
  REQUIRE(frame.size() == 2);  // codim 2 inside S^3

  Eigen::VectorXd phi = fr.phi_value();
  Eigen::MatrixXd dphi = fr.dphi_value();
  for (size_t k = 0; k < frame.size(); ++k) {
    Eigen::VectorXd nu(fr.n);
    for (int b = 0; b < fr.n; ++b) nu[b] = frame[k][b].value();
    CHECK(nu.norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(nu.dot(phi)) < 1e-12);
    CHECK((dphi.transpose() * nu).norm() < 1e-12);
    for (size_t l = 0; l < k; ++l) {
      Eigen::VectorXd mu(fr.n);
      for (int b = 0; b < fr.n; ++b) mu[b] = frame[l][b].value();
      CHECK(std::abs(nu.dot(mu)) < 1e-12);
    }
    int lead = 0;
    while (lead < fr.n && std::abs(nu[lead]) <= 1e-8) ++lead;
    REQUIRE(lead < fr.n);
    CHECK(nu[lead] > 0.0);
  }
}

TEST_CASE("rank deficient charts are rejected") {
  ImmersionPatch bad;
  bad.name = "collapsed_cylinder";
  bad.map.domain_dim = 2;
  bad.map.ambient_dim = 3;
  bad.map.eval = [](std::span<const Jet> u) {
    return std::vector<Jet>{cos(u[0]), sin(u[0]), Jet::constant(u[0].space(), 0.0)};
  };
  bad.domain = {{0.0, 0.0}, {6.3, 1.0}};
  bad.period = {0.0, 0.0};
  bad.sample_box = bad.domain;
  std::vector<double> pt{1.0, 0.5};
  CHECK_THROWS_AS(first_fundamental(bad, pt), Error);
  try {
    first_fundamental(bad, pt);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateImmersion);
  }
}

TEST_CASE("points outside the declared domain are rejected") {
  ImmersionPatch p = small_hypersphere(2, 0.8);
  CHECK_THROWS_AS(first_fundamental(p, std::vector<double>{0.05, 1.0}), Error);
  // periodic directions accept any value
  CHECK_NOTHROW(first_fundamental(p, std::vector<double>{1.0, 123.456}));
}

TEST_CASE("curvature data of the remaining catalog members") {
  ImmersionPatch geo = clifford_geodesic(0.5);
  std::vector<double> t{2.0};
  CHECK(second_fundamental(geo, t).h_norm == doctest::Approx(0.5).epsilon(1e-12));

  ImmersionPatch at = antiinvariant_torus();
  std::vector<double> pta{0.8, 0.9, 1.1};
  ShapeData sa = second_fundamental(at, pta);
  CHECK(sa.h_norm == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
  CHECK(sa.b_norm2 == doctest::Approx(7.0).epsilon(1e-9));
  CHECK(std::abs(scalar_curvature(at, pta)) < 1e-9);

  ImmersionPatch ccm = circle_cross_minimal(2);
  std::vector<double> ptc{0.4, 1.2, 2.1};
  ShapeData sc = second_fundamental(ccm, ptc);
  CHECK(sc.h_norm == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
  CHECK(sc.b_norm2 == doctest::Approx(7.0).epsilon(1e-9));
  CHECK(std::abs(scalar_curvature(ccm, ptc)) < 1e-9);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sc.A_H);
  CHECK(es.eigenvalues()[0] == doctest::Approx(-1.0 / 3.0).epsilon(1e-9));
  CHECK(es.eigenvalues()[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
  CHECK(es.eigenvalues()[2] == doctest::Approx(1.0 / 3.0).epsilon(1e-9));

  ImmersionPatch comp = composed_minimal(clifford_minimal_torus_s3());
  std::vector<double> ptm{1.0, 2.0};
  ShapeData sm = second_fundamental(comp, ptm);
  CHECK(sm.h_norm == doctest::Approx(1.0).epsilon(1e-12));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> em(sm.A_H);
  CHECK(em.eigenvalues()[0] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(em.eigenvalues()[1] == doctest::Approx(1.0).epsilon(1e-10));

  // the wobbly torus is honestly non-CMC
  ImmersionPatch wob = wobbly_torus();
  double h1 = second_fundamental(wob, std::vector<double>{0.3, 1.0}).h_norm;
  double h2 = second_fundamental(wob, std::vector<double>{1.8, 1.0}).h_norm;
  CHECK(std::abs(h1 - h2) > 1e-3);
}
