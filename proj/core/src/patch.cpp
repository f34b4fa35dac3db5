#include "bih/patch.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <sstream>

namespace bih {

bool Box::contains(std::span<const double> p, double slack) const {
  if (static_cast<int>(p.size()) != dim()) return false;
  for (int i = 0; i < dim(); ++i)
    if (p[i] < lo[i] - slack || p[i] > hi[i] + slack) return false;
  return true;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Harmonic: return "harmonic";
    case Verdict::ProperBiharmonic: return "proper_biharmonic";
    case Verdict::NotBiharmonic: return "not_biharmonic";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

MapJet patch_jet(const ImmersionPatch& patch, std::span<const double> point, int order,
                 double slack) {
  if (static_cast<int>(point.size()) != patch.dim())
    throw_error(ErrorKind::Domain, "point dimension does not match the chart");
  for (int i = 0; i < patch.dim(); ++i) {
    if (i < static_cast<int>(patch.period.size()) && patch.period[i] > 0.0) continue;
    if (point[i] < patch.domain.lo[i] - slack || point[i] > patch.domain.hi[i] + slack) {
      std::ostringstream os;
      os << "coordinate " << i << " = " << point[i] << " outside chart range ["
         << patch.domain.lo[i] << ", " << patch.domain.hi[i] << "] of " << patch.name;
      throw_error(ErrorKind::Domain, os.str());
    }
  }
  return jet_eval_map(patch.map, point, order);
}

std::vector<double> patch_value(const ImmersionPatch& patch, std::span<const double> point,
                                double slack) {
  MapJet j = patch_jet(patch, point, 0, slack);
  std::vector<double> v(j.coords.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = j.coords[i].value();
  return v;
}

std::vector<std::vector<double>> sample_grid(const ImmersionPatch& patch, int per_axis) {
  if (per_axis < 1) throw_error(ErrorKind::Config, "sample grid needs at least one point per axis");
  const int m = patch.dim();
  const Box& box = patch.sample_box;
  std::vector<std::vector<double>> out;
  std::vector<int> idx(m, 0);
  while (true) {
    std::vector<double> p(m);
    for (int i = 0; i < m; ++i)
      p[i] = box.lo[i] + (idx[i] + 0.5) * (box.hi[i] - box.lo[i]) / per_axis;
    out.push_back(std::move(p));
    int axis = m - 1;
    while (axis >= 0 && ++idx[axis] == per_axis) idx[axis--] = 0;
    if (axis < 0) break;
  }
  return out;
}

double max_sphere_defect(const ImmersionPatch& patch,
                         const std::vector<std::vector<double>>& points) {
  if (patch.ambient.kind != AmbientKind::Sphere) return 0.0;
  double worst = 0.0;
  for (const auto& p : points) {
    std::vector<double> x = patch_value(patch, p);
    double n2 = 0.0;
    for (double c : x) n2 += c * c;
    worst = std::max(worst, std::abs(std::sqrt(n2) - patch.ambient.radius));
  }
  return worst;
}

double min_metric_eigenvalue(const ImmersionPatch& patch,
                             const std::vector<std::vector<double>>& points) {
  const int m = patch.dim(), n = patch.ambient_dim();
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : points) {
    MapJet j = patch_jet(patch, p, 1);
    Eigen::MatrixXd d(n, m);
    for (int a = 0; a < n; ++a)
      for (int i = 0; i < m; ++i) {
        MultiIndex e(m, 0);
        e[i] = 1;
        d(a, i) = j.coords[a].derivative(e);
      }
    Eigen::MatrixXd g = d.transpose() * d;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
    best = std::min(best, es.eigenvalues().minCoeff());
  }
  return best;
}

void validate_patch(const ImmersionPatch& patch, int per_axis, double tol) {
  if (patch.domain.dim() != patch.dim() || patch.sample_box.dim() != patch.dim() ||
      static_cast<int>(patch.period.size()) != patch.dim())
    throw_error(ErrorKind::Config, "patch boxes and period list must match the chart dimension");
  auto pts = sample_grid(patch, per_axis);
  double defect = max_sphere_defect(patch, pts);
  if (defect > tol) {
    std::ostringstream os;
    os << patch.name << " leaves the sphere by " << defect;
    throw_error(ErrorKind::Embedding, os.str());
  }
  double lam = min_metric_eigenvalue(patch, pts);
  if (!(lam > tol)) {
    std::ostringstream os;
    os << patch.name << " is not an immersion on its sample box (min metric eigenvalue " << lam
       << ")";
    throw_error(ErrorKind::DegenerateImmersion, os.str());
  }
}

}  // namespace bih
