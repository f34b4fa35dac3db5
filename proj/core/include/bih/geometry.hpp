#pragma once

// Pointwise differential geometry of immersion patches: induced metric,
// Christoffel symbols, second fundamental form, mean curvature, Weingarten
// operators, Laplacians.  Everything derives from chart jets; finite
// differences only ever touch quantities that are already exact pointwise
// (outer derivatives of curvature data, see laplace_beltrami and
// normal_laplacian).
//
// Sign convention throughout: Delta = -div grad, so Delta phi = -m H0 with
// H0 the flat-ambient mean curvature.  Weingarten matrices are expressed in
// the orthonormal tangent frame G^{-1/2} d(phi); they are symmetric and
// their eigenvalues are the principal curvatures.

#include <Eigen/Dense>
#include <span>
#include <utility>
#include <vector>

#include "bih/fd.hpp"
#include "bih/jet.hpp"
#include "bih/patch.hpp"

namespace bih {

struct MetricData {
  Eigen::MatrixXd g, g_inv;
  double sqrt_det = 0.0;
  std::vector<Eigen::MatrixXd> christoffel;  // [k](i,j) = Gamma^k_ij
  std::vector<Eigen::MatrixXd> g_derivs;     // [k](i,j) = d_k g_ij
};

struct ShapeData {
  Eigen::MatrixXd normal_frame;    // columns: orthonormal normals inside the sphere
  std::vector<Eigen::VectorXd> B;  // B(d_i, d_j) as ambient vectors, index i*m+j
  Eigen::VectorXd H;               // mean curvature vector, ambient coordinates
  std::vector<Eigen::MatrixXd> A;  // Weingarten operator per frame column
  Eigen::MatrixXd A_H;             // shape operator of H, symmetric
  double f = 0.0;                  // signed mean curvature, codim 1: H = f * normal
  double h_norm = 0.0;             // |H|
  double b_norm2 = 0.0;            // |B|^2
};

// Curvature data of a patch at one point, kept as jets so exact derivatives
// of derived quantities (H, |H|^2, projectors) stay available.  With chart
// jets of order p the metric carries budget p-1, B and H carry p-2.
struct JetFrame {
  int m = 0, n = 0;
  double c = 0.0;  // ambient curvature 1/R^2, 0 for flat
  std::vector<double> point;
  std::vector<Jet> phi;    // n
  std::vector<Jet> g;      // m*m row major
  std::vector<Jet> ginv;   // m*m
  Jet det_g, sqrt_det;
  std::vector<Jet> gamma;  // [k*m*m + i*m + j]
  std::vector<Jet> B;      // [(i*m + j)*n + a]
  std::vector<Jet> H;      // n
  std::vector<Jet> drift;  // m: b^j = (1/W) d_i (W g^{ij}), the Laplacian's first-order term
  std::vector<Jet> proj_n; // n*n normal projector inside the sphere

  const Jet& g_at(int i, int j) const { return g[i * m + j]; }
  const Jet& ginv_at(int i, int j) const { return ginv[i * m + j]; }
  const Jet& gamma_at(int k, int i, int j) const { return gamma[(k * m + i) * m + j]; }
  const Jet& B_at(int i, int j, int a) const { return B[(i * m + j) * n + a]; }
  const Jet& proj_n_at(int a, int b) const { return proj_n[a * n + b]; }

  Eigen::VectorXd phi_value() const;
  Eigen::MatrixXd dphi_value() const;  // n x m, column i = d_i phi
  Eigen::MatrixXd g_value() const;
  Eigen::MatrixXd ginv_value() const;
  Eigen::VectorXd H_value() const;
  Eigen::MatrixXd dH_value() const;    // n x m, column i = d_i H
  Eigen::VectorXd drift_value() const;
  Eigen::MatrixXd normal_projector() const;
  Eigen::VectorXd B_value(int i, int j) const;
};

// order: chart jet truncation, 2..4.  slack loosens the domain walls for
// finite-difference excursions.
JetFrame jet_frame(const ImmersionPatch& patch, std::span<const double> point, int order,
                   double slack = 0.0);

// Orthonormal normal frame as jets: ambient axes projected to the normal
// space in index order, Gram-Schmidt, each vector's first sizable component
// made positive at the point.  Result[k] holds n coordinate jets.
std::vector<std::vector<Jet>> normal_frame_jets(const JetFrame& fr);

MetricData first_fundamental(const ImmersionPatch& patch, std::span<const double> point);
ShapeData second_fundamental(const ImmersionPatch& patch, std::span<const double> point);

// Delta phi componentwise from jets alone; equals -m H0.
Eigen::VectorXd map_laplacian(const ImmersionPatch& patch, std::span<const double> point,
                              double slack = 0.0);

// Delta u = -g^{ij} d2_ij u - b^j d_j u with exact coefficients at the point
// and the field's derivatives taken by the scheme.  Componentwise on vector
// fields.
std::vector<double> laplace_beltrami(const VectorFn& field, const ImmersionPatch& patch,
                                     std::span<const double> point, const FdScheme& scheme);

// Normal-bundle Laplacian of H (positive convention): zero for parallel H.
Eigen::VectorXd normal_laplacian(const ImmersionPatch& patch, std::span<const double> point,
                                 const FdScheme& scheme);

// Ascending (value, multiplicity) pairs, merged at tolerance 1e-8.  The
// overall sign follows the deterministic normal orientation.  Codim 1 only.
std::vector<std::pair<double, int>> principal_curvatures(const ImmersionPatch& patch,
                                                         std::span<const double> point);

// Gauss equation: s = m(m-1)c + m^2|H|^2 - |B|^2.
double scalar_curvature(const ImmersionPatch& patch, std::span<const double> point);

// True iff at every point some principal curvature has multiplicity >= m-1.
bool quasi_umbilical_check(const ImmersionPatch& patch,
                           const std::vector<std::vector<double>>& points);

}  // namespace bih
