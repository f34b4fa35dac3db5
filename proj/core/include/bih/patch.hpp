#pragma once

// Immersion patches: a chart into flat space or into a round sphere,
// together with the domain box, periodicity data, and frozen reference
// values used by the command line verifier and the test suite.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bih/jet.hpp"

namespace bih {

struct Box {
  std::vector<double> lo, hi;
  int dim() const noexcept { return static_cast<int>(lo.size()); }
  bool contains(std::span<const double> p, double slack = 0.0) const;
};

enum class AmbientKind { Flat, Sphere };

struct Ambient {
  AmbientKind kind = AmbientKind::Sphere;
  double radius = 1.0;  // sphere radius, ignored for flat ambients
};

enum class Verdict { Harmonic, ProperBiharmonic, NotBiharmonic, Inconclusive };
std::string to_string(Verdict v);

// Reference data a catalog entry promises about itself.  Optional fields are
// only checked when set; eigenvalue lists are ascending.
struct Expected {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<double> mean_curvature_norm;        // constant |H|
  std::optional<double> tension_norm;               // sup |tau|
  std::optional<double> bitension_norm;             // sup |tau2|
  std::optional<double> scalar_curvature;           // constant scalar curvature
  std::optional<double> second_fundamental_norm2;   // |B|^2
  std::optional<int> chen_type;                     // spectral type of the immersion
  std::vector<double> shape_eigenvalues;            // principal curvatures, codim 1
  std::vector<double> mean_shape_eigenvalues;       // eigenvalues of the H shape operator
  std::vector<double> chen_eigenvalues;             // distinct spectrum carrying the position
};

// Exact periodic chart of a torus containing a non-closing curve, plus the
// constant direction field of the curve inside it.  Lets the discrete
// spectral machinery treat the curve through the torus instead of through
// its own (non-periodic) arc chart.
struct SpectralLift {
  JetMap chart;
  std::vector<double> periods;
  std::vector<double> direction;  // d/dt = direction[i] * d/du_i, unit speed
};

struct ImmersionPatch {
  std::string name;
  JetMap map;
  Ambient ambient;
  Box domain;                  // where the chart is declared valid
  std::vector<double> period;  // per axis, 0 marks a non-periodic direction
  Box sample_box;              // interior box for pointwise checks, inset from
                               // non-periodic walls far enough for stencils
  std::optional<SpectralLift> lift;
  Expected expected;

  int dim() const noexcept { return map.domain_dim; }
  int ambient_dim() const noexcept { return map.ambient_dim; }
};

// Chart jet at a point.  Containment is enforced per axis, skipping periodic
// directions; slack loosens the walls for finite difference excursions.
MapJet patch_jet(const ImmersionPatch& patch, std::span<const double> point, int order,
                 double slack = 0.0);
std::vector<double> patch_value(const ImmersionPatch& patch, std::span<const double> point,
                                double slack = 0.0);

// Deterministic cell-centered grid inside the sample box.
std::vector<std::vector<double>> sample_grid(const ImmersionPatch& patch, int per_axis);

// max over the points of | |phi| - R |; zero for flat ambients.
double max_sphere_defect(const ImmersionPatch& patch,
                         const std::vector<std::vector<double>>& points);

// min over the points of the smallest eigenvalue of D(phi)^T D(phi).
double min_metric_eigenvalue(const ImmersionPatch& patch,
                             const std::vector<std::vector<double>>& points);

// Cross-checks the patch against its own declarations on a sample grid:
// image on the sphere, chart an immersion.  Throws on failure.
void validate_patch(const ImmersionPatch& patch, int per_axis = 5, double tol = 1e-9);

}  // namespace bih
