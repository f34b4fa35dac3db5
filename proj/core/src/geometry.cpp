#include "bih/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bih/errors.hpp"

namespace bih {

namespace {

struct JetInverse {
  std::vector<Jet> inv;
  Jet det;
};

// Gauss-Jordan with value-part pivoting, carried out in jet arithmetic so the
// inverse keeps the full derivative information of the input.
JetInverse invert_jet_matrix(const JetSpace& space, std::vector<Jet> a, int m) {
  std::vector<Jet> inv(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) inv[i * m + j] = Jet::constant(space, i == j ? 1.0 : 0.0);

  Jet det = Jet::constant(space, 1.0);
  for (int col = 0; col < m; ++col) {
    int piv = col;
    for (int r = col + 1; r < m; ++r)
      if (std::abs(a[r * m + col].value()) > std::abs(a[piv * m + col].value())) piv = r;
    if (std::abs(a[piv * m + col].value()) < 1e-12)
      throw_error(ErrorKind::DegenerateImmersion, "induced metric is numerically singular");
    if (piv != col) {
      for (int j = 0; j < m; ++j) {
        std::swap(a[piv * m + j], a[col * m + j]);
        std::swap(inv[piv * m + j], inv[col * m + j]);
      }
      det = det * -1.0;
    }
    Jet pivot = a[col * m + col];
    det = det * pivot;
    Jet ip = recip(pivot);
    for (int j = 0; j < m; ++j) {
      a[col * m + j] = a[col * m + j] * ip;
      inv[col * m + j] = inv[col * m + j] * ip;
    }
    for (int r = 0; r < m; ++r) {
      if (r == col) continue;
      Jet f = a[r * m + col];
      for (int j = 0; j < m; ++j) {
        a[r * m + j] -= f * a[col * m + j];
        inv[r * m + j] -= f * inv[col * m + j];
      }
    }
  }
  return {std::move(inv), std::move(det)};
}

}  // namespace

Eigen::VectorXd JetFrame::phi_value() const {
  Eigen::VectorXd v(n);
  for (int a = 0; a < n; ++a) v[a] = phi[a].value();
  return v;
}

Eigen::MatrixXd JetFrame::dphi_value() const {
  Eigen::MatrixXd d(n, m);
  MultiIndex alpha(m, 0);
  for (int i = 0; i < m; ++i) {
    alpha[i] = 1;
    for (int a = 0; a < n; ++a) d(a, i) = phi[a].derivative(alpha);
    alpha[i] = 0;
  }
  return d;
}

Eigen::MatrixXd JetFrame::g_value() const {
  Eigen::MatrixXd v(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) v(i, j) = g_at(i, j).value();
  return v;
}

Eigen::MatrixXd JetFrame::ginv_value() const {
  Eigen::MatrixXd v(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) v(i, j) = ginv_at(i, j).value();
  return v;
}

Eigen::VectorXd JetFrame::H_value() const {
  Eigen::VectorXd v(n);
  for (int a = 0; a < n; ++a) v[a] = H[a].value();
  return v;
}

Eigen::MatrixXd JetFrame::dH_value() const {
  Eigen::MatrixXd d(n, m);
  MultiIndex alpha(m, 0);
  for (int i = 0; i < m; ++i) {
    alpha[i] = 1;
    for (int a = 0; a < n; ++a) d(a, i) = H[a].derivative(alpha);
    alpha[i] = 0;
  }
  return d;
}

Eigen::VectorXd JetFrame::drift_value() const {
  Eigen::VectorXd v(m);
  for (int j = 0; j < m; ++j) v[j] = drift[j].value();
  return v;
}

Eigen::MatrixXd JetFrame::normal_projector() const {
  Eigen::MatrixXd p(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) p(a, b) = proj_n_at(a, b).value();
  return p;
}

Eigen::VectorXd JetFrame::B_value(int i, int j) const {
  Eigen::VectorXd v(n);
  for (int a = 0; a < n; ++a) v[a] = B_at(i, j, a).value();
  return v;
}

JetFrame jet_frame(const ImmersionPatch& patch, std::span<const double> point, int order,
                   double slack) {
  if (order < 2 || order > kMaxJetOrder)
    throw_error(ErrorKind::Config, "jet frame needs order between 2 and 4");
  MapJet mj = patch_jet(patch, point, order, slack);

  JetFrame fr;
  fr.m = patch.dim();
  fr.n = patch.ambient_dim();
  fr.c = patch.ambient.kind == AmbientKind::Sphere
             ? 1.0 / (patch.ambient.radius * patch.ambient.radius)
             : 0.0;
  fr.point.assign(point.begin(), point.end());
  fr.phi = std::move(mj.coords);

  const int m = fr.m, n = fr.n;
  const JetSpace& space = fr.phi[0].space();

  std::vector<Jet> dphi(static_cast<size_t>(n) * m);
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < m; ++i) dphi[a * m + i] = fr.phi[a].partial(i);

  fr.g.resize(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      Jet s = dphi[0 * m + i] * dphi[0 * m + j];
      for (int a = 1; a < n; ++a) s += dphi[a * m + i] * dphi[a * m + j];
      fr.g[i * m + j] = s;
      if (j != i) fr.g[j * m + i] = s;
    }

  JetInverse gi = invert_jet_matrix(space, fr.g, m);
  fr.ginv = std::move(gi.inv);
  fr.det_g = std::move(gi.det);
  if (fr.det_g.value() <= 1e-10)
    throw_error(ErrorKind::DegenerateImmersion, "Gram determinant below 1e-10 at a sample point");
  fr.sqrt_det = sqrt(fr.det_g);

  // dg[(k*m + i)*m + j] = d_k g_ij
  std::vector<Jet> dg(static_cast<size_t>(m) * m * m);
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) {
        dg[(k * m + i) * m + j] = fr.g_at(i, j).partial(k);
        if (j != i) dg[(k * m + j) * m + i] = dg[(k * m + i) * m + j];
      }

  fr.gamma.resize(static_cast<size_t>(m) * m * m);
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) {
        Jet s = Jet::constant(space, 0.0);
        for (int l = 0; l < m; ++l) {
          Jet bracket = dg[(i * m + l) * m + j] + dg[(j * m + i) * m + l] - dg[(l * m + i) * m + j];
          s += fr.ginv_at(k, l) * bracket;
        }
        s *= 0.5;
        fr.gamma[(k * m + i) * m + j] = s;
        if (j != i) fr.gamma[(k * m + j) * m + i] = s;
      }

  fr.B.resize(static_cast<size_t>(m) * m * n);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j)
      for (int a = 0; a < n; ++a) {
        Jet s = dphi[a * m + i].partial(j);
        for (int k = 0; k < m; ++k) s -= fr.gamma_at(k, i, j) * dphi[a * m + k];
        if (fr.c != 0.0) s += fr.c * (fr.g_at(i, j) * fr.phi[a]);
        fr.B[(i * m + j) * n + a] = s;
        if (j != i) fr.B[(j * m + i) * n + a] = s;
      }

  fr.H.resize(n);
  for (int a = 0; a < n; ++a) {
    Jet s = Jet::constant(space, 0.0);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) s += fr.ginv_at(i, j) * fr.B_at(i, j, a);
    fr.H[a] = s * (1.0 / m);
  }

  Jet inv_w = recip(fr.sqrt_det);
  fr.drift.resize(m);
  for (int j = 0; j < m; ++j) {
    Jet s = Jet::constant(space, 0.0);
    for (int i = 0; i < m; ++i) s += (fr.sqrt_det * fr.ginv_at(i, j)).partial(i);
    fr.drift[j] = s * inv_w;
  }

  // T[a][j] = d_i phi_a g^{ij}; tangent projector = T dphi^t
  std::vector<Jet> t(static_cast<size_t>(n) * m);
  for (int a = 0; a < n; ++a)
    for (int j = 0; j < m; ++j) {
      Jet s = dphi[a * m + 0] * fr.ginv_at(0, j);
      for (int i = 1; i < m; ++i) s += dphi[a * m + i] * fr.ginv_at(i, j);
      t[a * m + j] = s;
    }
  fr.proj_n.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      Jet s = Jet::constant(space, a == b ? 1.0 : 0.0);
      for (int j = 0; j < m; ++j) s -= t[a * m + j] * dphi[b * m + j];
      if (fr.c != 0.0) s -= fr.c * (fr.phi[a] * fr.phi[b]);
      fr.proj_n[a * n + b] = s;
      if (b != a) fr.proj_n[b * n + a] = s;
    }

  return fr;
}

std::vector<std::vector<Jet>> normal_frame_jets(const JetFrame& fr) {
  const int n = fr.n;
  const int codim = n - fr.m - (fr.c != 0.0 ? 1 : 0);

  std::vector<std::vector<Jet>> frame;
  for (int axis = 0; axis < n && static_cast<int>(frame.size()) < codim; ++axis) {
    std::vector<Jet> v(n);
    for (int b = 0; b < n; ++b) v[b] = fr.proj_n_at(b, axis);
    for (const auto& nu : frame) {
      Jet dot = v[0] * nu[0];
      for (int b = 1; b < n; ++b) dot += v[b] * nu[b];
      for (int b = 0; b < n; ++b) v[b] -= dot * nu[b];
    }
    double norm2 = 0.0;
    for (int b = 0; b < n; ++b) norm2 += v[b].value() * v[b].value();
    if (norm2 < 1e-16) continue;
    Jet nrm2 = v[0] * v[0];
    for (int b = 1; b < n; ++b) nrm2 += v[b] * v[b];
    Jet inv_nrm = recip(sqrt(nrm2));
    for (int b = 0; b < n; ++b) v[b] = v[b] * inv_nrm;
    double sign = 1.0;
    for (int b = 0; b < n; ++b) {
      if (std::abs(v[b].value()) > 1e-8) {
        sign = v[b].value() > 0.0 ? 1.0 : -1.0;
        break;
      }
    }
    if (sign < 0.0)
      for (int b = 0; b < n; ++b) v[b] = -v[b];
    frame.push_back(std::move(v));
  }
  if (static_cast<int>(frame.size()) < codim)
    throw_error(ErrorKind::Frame, "normal frame pivots fell below tolerance");
  return frame;
}

MetricData first_fundamental(const ImmersionPatch& patch, std::span<const double> point) {
  JetFrame fr = jet_frame(patch, point, 2);
  const int m = fr.m;
  MetricData md;
  md.g = fr.g_value();
  md.g_inv = fr.ginv_value();
  md.sqrt_det = fr.sqrt_det.value();
  md.christoffel.assign(m, Eigen::MatrixXd(m, m));
  md.g_derivs.assign(m, Eigen::MatrixXd(m, m));
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        md.christoffel[k](i, j) = fr.gamma_at(k, i, j).value();
        md.g_derivs[k](i, j) = fr.g_at(i, j).partial(k).value();
      }
  return md;
}

ShapeData second_fundamental(const ImmersionPatch& patch, std::span<const double> point) {
  JetFrame fr = jet_frame(patch, point, 2);
  const int m = fr.m, n = fr.n;
  auto frame = normal_frame_jets(fr);
  const int codim = static_cast<int>(frame.size());

  ShapeData sd;
  sd.normal_frame.resize(n, codim);
  for (int k = 0; k < codim; ++k)
    for (int b = 0; b < n; ++b) sd.normal_frame(b, k) = frame[k][b].value();

  sd.B.resize(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) sd.B[i * m + j] = fr.B_value(i, j);
  sd.H = fr.H_value();
  sd.h_norm = sd.H.norm();

  Eigen::MatrixXd ginv = fr.ginv_value();
  sd.b_norm2 = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          sd.b_norm2 += ginv(i, k) * ginv(j, l) * sd.B[i * m + j].dot(sd.B[k * m + l]);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(fr.g_value());
  Eigen::MatrixXd half_inv = es.operatorInverseSqrt();
  auto weingarten = [&](const Eigen::VectorXd& dir) {
    Eigen::MatrixXd s(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) s(i, j) = sd.B[i * m + j].dot(dir);
    Eigen::MatrixXd a = half_inv * s * half_inv;
    return Eigen::MatrixXd(0.5 * (a + a.transpose()));
  };
  sd.A.reserve(codim);
  for (int k = 0; k < codim; ++k) sd.A.push_back(weingarten(sd.normal_frame.col(k)));
  sd.A_H = weingarten(sd.H);
  sd.f = codim == 1 ? sd.H.dot(sd.normal_frame.col(0)) : 0.0;
  return sd;
}

Eigen::VectorXd map_laplacian(const ImmersionPatch& patch, std::span<const double> point,
                              double slack) {
  JetFrame fr = jet_frame(patch, point, 2, slack);
  const int m = fr.m, n = fr.n;
  Eigen::MatrixXd ginv = fr.ginv_value();
  Eigen::VectorXd b = fr.drift_value();
  Eigen::MatrixXd dphi = fr.dphi_value();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
  for (int a = 0; a < n; ++a) {
    double acc = 0.0;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) acc -= ginv(i, j) * fr.phi[a].partial(i).partial(j).value();
    for (int j = 0; j < m; ++j) acc -= b[j] * dphi(a, j);
    out[a] = acc;
  }
  return out;
}

std::vector<double> laplace_beltrami(const VectorFn& field, const ImmersionPatch& patch,
                                     std::span<const double> point, const FdScheme& scheme) {
  JetFrame fr = jet_frame(patch, point, 2);
  const int m = fr.m;
  Eigen::MatrixXd ginv = fr.ginv_value();
  Eigen::VectorXd b = fr.drift_value();

  std::vector<double> center = field(point);
  std::vector<double> out(center.size(), 0.0);

  MultiIndex alpha(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      std::fill(alpha.begin(), alpha.end(), 0);
      alpha[i] += 1;
      alpha[j] += 1;
      std::vector<double> d2 = fd_derivative(field, point, alpha, scheme);
      double w = (i == j ? 1.0 : 2.0) * ginv(i, j);
      for (size_t a = 0; a < out.size(); ++a) out[a] -= w * d2[a];
    }
  for (int j = 0; j < m; ++j) {
    std::fill(alpha.begin(), alpha.end(), 0);
    alpha[j] = 1;
    std::vector<double> d1 = fd_derivative(field, point, alpha, scheme);
    for (size_t a = 0; a < out.size(); ++a) out[a] -= b[j] * d1[a];
  }
  return out;
}

Eigen::VectorXd normal_laplacian(const ImmersionPatch& patch, std::span<const double> point,
                                 const FdScheme& scheme) {
  JetFrame fr = jet_frame(patch, point, 2);
  const int m = fr.m, n = fr.n;
  Eigen::MatrixXd ginv = fr.ginv_value();
  Eigen::MatrixXd proj = fr.normal_projector();

  const double slack = 3.0 * scheme.step;
  // F_j = (normal projection of d_j H), exact at every probe point
  VectorFn covariant_dh = [&](std::span<const double> q) {
    JetFrame fq = jet_frame(patch, q, 3, slack);
    Eigen::MatrixXd p = fq.normal_projector();
    Eigen::MatrixXd dh = fq.dH_value();
    std::vector<double> out(static_cast<size_t>(m) * n);
    for (int j = 0; j < m; ++j) {
      Eigen::VectorXd col = p * dh.col(j);
      for (int a = 0; a < n; ++a) out[j * n + a] = col[a];
    }
    return out;
  };

  std::vector<double> f_center = covariant_dh(point);
  std::vector<std::vector<double>> df(m);
  MultiIndex alpha(m, 0);
  for (int i = 0; i < m; ++i) {
    std::fill(alpha.begin(), alpha.end(), 0);
    alpha[i] = 1;
    df[i] = fd_derivative(covariant_dh, point, alpha, scheme);
  }

  Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (ginv(i, j) == 0.0) continue;
      Eigen::VectorXd dfij(n);
      for (int a = 0; a < n; ++a) dfij[a] = df[i][j * n + a];
      Eigen::VectorXd second = proj * dfij;
      for (int k = 0; k < m; ++k) {
        double gam = fr.gamma_at(k, i, j).value();
        for (int a = 0; a < n; ++a) second[a] -= gam * f_center[k * n + a];
      }
      out -= ginv(i, j) * second;
    }
  return out;
}

std::vector<std::pair<double, int>> principal_curvatures(const ImmersionPatch& patch,
                                                         std::span<const double> point) {
  const int codim =
      patch.ambient_dim() - patch.dim() - (patch.ambient.kind == AmbientKind::Sphere ? 1 : 0);
  if (codim != 1)
    throw_error(ErrorKind::Precondition, "principal curvatures need codimension 1, got " +
                                             std::to_string(codim));
  ShapeData sd = second_fundamental(patch, point);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sd.A[0]);
  Eigen::VectorXd ev = es.eigenvalues();

  std::vector<std::pair<double, int>> merged;
  for (int i = 0; i < ev.size(); ++i) {
    if (!merged.empty() && std::abs(ev[i] - merged.back().first) <= 1e-8) {
      auto& [val, mult] = merged.back();
      val = (val * mult + ev[i]) / (mult + 1);
      ++mult;
    } else {
      merged.emplace_back(ev[i], 1);
    }
  }
  return merged;
}

double scalar_curvature(const ImmersionPatch& patch, std::span<const double> point) {
  ShapeData sd = second_fundamental(patch, point);
  const double m = patch.dim();
  const double c = patch.ambient.kind == AmbientKind::Sphere
                       ? 1.0 / (patch.ambient.radius * patch.ambient.radius)
                       : 0.0;
  return m * (m - 1.0) * c + m * m * sd.h_norm * sd.h_norm - sd.b_norm2;
}

bool quasi_umbilical_check(const ImmersionPatch& patch,
                           const std::vector<std::vector<double>>& points) {
  const int m = patch.dim();
  for (const auto& p : points) {
    auto pc = principal_curvatures(patch, p);
    int best = 0;
    for (const auto& [val, mult] : pc) best = std::max(best, mult);
    if (best < m - 1) return false;
  }
  return true;
}

}  // namespace bih
