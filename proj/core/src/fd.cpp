#include "bih/fd.hpp"

#include <cmath>
#include <cstdlib>

namespace bih {

const Stencil1D& central_stencil(int derivative, int accuracy) {
  static const std::vector<Stencil1D> table = {
      {1, 2, {-1, 1}, {-0.5, 0.5}},
      {1, 4, {-2, -1, 1, 2}, {1.0 / 12, -2.0 / 3, 2.0 / 3, -1.0 / 12}},
      {2, 2, {-1, 0, 1}, {1.0, -2.0, 1.0}},
      {2, 4, {-2, -1, 0, 1, 2}, {-1.0 / 12, 4.0 / 3, -5.0 / 2, 4.0 / 3, -1.0 / 12}},
      {3, 2, {-2, -1, 1, 2}, {-0.5, 1.0, -1.0, 0.5}},
      {3, 4, {-3, -2, -1, 1, 2, 3}, {1.0 / 8, -1.0, 13.0 / 8, -13.0 / 8, 1.0, -1.0 / 8}},
      {4, 2, {-2, -1, 0, 1, 2}, {1.0, -4.0, 6.0, -4.0, 1.0}},
      {4, 4, {-3, -2, -1, 0, 1, 2, 3},
       {-1.0 / 6, 2.0, -13.0 / 2, 28.0 / 3, -13.0 / 2, 2.0, -1.0 / 6}},
  };
  for (const auto& s : table)
    if (s.derivative == derivative && s.accuracy == accuracy) return s;
  throw_error(ErrorKind::Config, "no central stencil for derivative " + std::to_string(derivative) +
                                     " at accuracy " + std::to_string(accuracy));
}

std::vector<StencilNode> composed_stencil(const MultiIndex& alpha, int accuracy) {
  std::vector<StencilNode> nodes{{{}, 1.0}};
  for (int a : alpha) {
    std::vector<int> offs{0};
    std::vector<double> wts{1.0};
    if (a > 0) {
      const Stencil1D& s = central_stencil(a, accuracy);
      offs = s.offsets;
      wts = s.weights;
    }
    std::vector<StencilNode> next;
    next.reserve(nodes.size() * offs.size());
    for (const auto& n : nodes)
      for (size_t j = 0; j < offs.size(); ++j) {
        StencilNode m = n;
        m.offsets.push_back(offs[j]);
        m.weight *= wts[j];
        next.push_back(std::move(m));
      }
    nodes = std::move(next);
  }
  return nodes;
}

namespace {

std::vector<double> apply_stencil(const VectorFn& f, std::span<const double> point,
                                  const std::vector<StencilNode>& nodes, int total, double h) {
  std::vector<double> acc;
  std::vector<double> x(point.begin(), point.end());
  for (const auto& n : nodes) {
    for (size_t i = 0; i < x.size(); ++i) x[i] = point[i] + h * n.offsets[i];
    std::vector<double> v = f(x);
    if (acc.empty()) acc.assign(v.size(), 0.0);
    if (v.size() != acc.size()) throw_error(ErrorKind::Engine, "sampler changed output dimension");
    for (size_t i = 0; i < v.size(); ++i) acc[i] += n.weight * v[i];
  }
  const double scale = std::pow(h, -total);
  for (double& v : acc) v *= scale;
  return acc;
}

}  // namespace

std::vector<double> fd_derivative(const VectorFn& f, std::span<const double> point,
                                  const MultiIndex& alpha, const FdScheme& scheme) {
  if (alpha.size() != point.size())
    throw_error(ErrorKind::Config, "multi-index arity does not match the point");
  for (int a : alpha)
    if (a < 0 || a > 4)
      throw_error(ErrorKind::Config, "per-variable derivative order must lie in 0..4");
  if (scheme.stencil_order != 2 && scheme.stencil_order != 4)
    throw_error(ErrorKind::Config, "stencil order must be 2 or 4");
  if (!(scheme.step > 0.0)) throw_error(ErrorKind::Config, "step must be positive");

  const auto nodes = composed_stencil(alpha, scheme.stencil_order);
  const int total = total_degree(alpha);
  std::vector<double> coarse = apply_stencil(f, point, nodes, total, scheme.step);
  if (!scheme.richardson || total == 0) return coarse;
  std::vector<double> fine = apply_stencil(f, point, nodes, total, scheme.step / 2.0);
  const double w = std::pow(2.0, scheme.stencil_order);
  std::vector<double> out(coarse.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = (w * fine[i] - coarse[i]) / (w - 1.0);
  return out;
}

int fd_reach(const MultiIndex& alpha, const FdScheme& scheme) {
  int reach = 0;
  for (int a : alpha)
    if (a > 0) {
      const Stencil1D& s = central_stencil(a, scheme.stencil_order);
      reach = std::max(reach, std::abs(s.offsets.front()));
    }
  return reach;
}

}  // namespace bih
