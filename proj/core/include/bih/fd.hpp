#pragma once

// Central finite differences on smooth samplers, used where a quantity is
// only available pointwise (outer derivatives of curvature data).  Raw chart
// derivatives never go through here, they come out of jets exactly.

#include <functional>
#include <span>
#include <vector>

#include "bih/jet.hpp"

namespace bih {

struct FdScheme {
  double step = 1e-3;
  int stencil_order = 4;   // base truncation accuracy, 2 or 4
  bool richardson = true;  // one extrapolation level on top of the base stencil
};

// Symmetric central stencil for d^k/dx^k: weights pair with f(x + offset*h)
// and the sum divides by h^k.
struct Stencil1D {
  int derivative = 0;
  int accuracy = 0;
  std::vector<int> offsets;
  std::vector<double> weights;
};

const Stencil1D& central_stencil(int derivative, int accuracy);

// Tensor product of per-variable stencils for a mixed partial d^alpha.
struct StencilNode {
  std::vector<int> offsets;  // one entry per variable, in units of the step
  double weight;
};
std::vector<StencilNode> composed_stencil(const MultiIndex& alpha, int accuracy);

using VectorFn = std::function<std::vector<double>(std::span<const double>)>;

// d^alpha f at the point, componentwise.  Even error expansion of the
// symmetric stencils makes one Richardson level lift accuracy p to p+2:
// (2^p D(h/2) - D(h)) / (2^p - 1).
std::vector<double> fd_derivative(const VectorFn& f, std::span<const double> point,
                                  const MultiIndex& alpha, const FdScheme& scheme);

// Farthest stencil excursion in units of scheme.step.  Callers keep sample
// points at least reach*step inside any non-periodic chart wall.
int fd_reach(const MultiIndex& alpha, const FdScheme& scheme);

}  // namespace bih
