#pragma once

// Catalog of explicit immersions into round spheres with their known
// curvature data: the verification targets, plus control fixtures that are
// deliberately not biharmonic.  Every chart is an elementary composition of
// trigonometric maps, so chart jets are exact to the truncation order.

#include <map>
#include <string>
#include <vector>

#include "bih/patch.hpp"

namespace bih {

// S^m(a) sitting in the unit S^{m+1} at height sqrt(1-a^2); a in (0,1],
// m in 1..3.  Proper biharmonic exactly at a = 1/sqrt(2), harmonic at a = 1.
ImmersionPatch small_hypersphere(int m, double a);

// S^{m1}(r1) x S^{m2}(r2) in S^{m1+m2+1}, r1^2 + r2^2 = 1.  Equal radii:
// minimal when m1 = m2, proper biharmonic otherwise.
ImmersionPatch clifford_product(int m1, int m2, double r1, double r2);

// Circle of radius a inside S^3, arclength parametrized, period 2*pi*a.
ImmersionPatch biharmonic_circle(double a);

// Curve t -> (cos at, sin at, cos bt, sin bt)/sqrt(2) on the Clifford torus,
// a^2 = 1+s, b^2 = 1-s; unit speed, |H| = s, proper biharmonic for
// s in (0,1).  Does not close for generic s, so it carries a spectral lift
// through the torus chart.
ImmersionPatch clifford_geodesic(double s);

// Flat 3-torus in S^5 with |H| = 1/3 and non-parallel mean curvature.
ImmersionPatch antiinvariant_torus();

// (inner/sqrt(2), 1/sqrt(2)) in S^{n+1} for an inner patch minimal in the
// unit S^n; |H| = 1, proper biharmonic, pseudo-umbilical.  The minimality of
// the inner patch is verified on a sample grid first.
ImmersionPatch composed_minimal(const ImmersionPatch& inner);

// S^1(1/sqrt(2)) x M^m in S^{m+3} where M is the scaled minimal Clifford
// hypersurface of S^{m+1}; dimension m+1, |H| = (m-1)/(m+1).  m >= 2.
ImmersionPatch circle_cross_minimal(int m);

enum class Codim2Inner { Hypersphere, CliffordTorus };

// Inner patch M^m inside the small sphere S^{m+1}(a) of S^{m+2}: either
// S^m(1/sqrt(2)) (needs a >= 1/sqrt(2)) or the minimal Clifford torus of
// S^3(a) (m = 2).  The ambient of the returned patch is the sphere of
// radius a.
ImmersionPatch codim2_inner(int m, double a, Codim2Inner kind);

// The same patch pushed into the unit S^{m+2} at height sqrt(1-a^2),
// a in (0,1).  Proper biharmonic iff |tau(inner)|^2 = m^2 (2a^2-1)/a^2.
ImmersionPatch codim2_tower(int m, double a, Codim2Inner kind);

// Fixtures.
ImmersionPatch great_circle_s2();            // minimal curve for compositions
ImmersionPatch clifford_minimal_torus_s3();  // minimal surface for compositions
ImmersionPatch nonminimal_torus_s3();        // fails the composed_minimal pre-check
ImmersionPatch wobbly_torus();               // non-CMC control surface in S^3

// Registry used by the command line and by scenario files.
std::vector<std::string> catalog_names();
ImmersionPatch make_catalog_entry(const std::string& name,
                                  const std::map<std::string, double>& params);
std::string catalog_entry_help(const std::string& name);

}  // namespace bih
