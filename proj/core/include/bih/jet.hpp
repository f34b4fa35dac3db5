#pragma once

// Truncated multivariate Taylor arithmetic ("jets").
//
// A Jet stores the Taylor polynomial of a smooth function around a base
// point, truncated at total degree <= order (order capped at 4).  All
// catalog immersions are built from a fixed elementary vocabulary
// (constants, affine maps, sin, cos, exp, sqrt, reciprocal, products,
// concatenation), so evaluating a map on variable jets yields all partial
// derivatives up to the truncation order exactly, up to roundoff.
//
// Coefficient convention: coeff(alpha) = d^alpha f / alpha!, i.e. plain
// polynomial coefficients of the local expansion; derivative(alpha)
// multiplies the factorials back in.

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "bih/errors.hpp"

namespace bih {

inline constexpr int kMaxJetOrder = 4;
inline constexpr int kMaxJetVars = 6;

// Exponent vector, one entry per domain variable.
using MultiIndex = std::vector<int>;

int total_degree(const MultiIndex& alpha);
double factorial_of(const MultiIndex& alpha);

// Shared coefficient layout for a fixed (nvars, order) pair: the graded-lex
// list of multi-indices of total degree <= order plus the truncated product
// table.  Instances are cached and immutable, safe for concurrent reads.
class JetSpace {
 public:
  static const JetSpace& get(int nvars, int order);

  int nvars() const noexcept { return nvars_; }
  int order() const noexcept { return order_; }
  int size() const noexcept { return static_cast<int>(indices_.size()); }

  const std::vector<MultiIndex>& indices() const noexcept { return indices_; }
  // Position of alpha in the coefficient vector, -1 if |alpha| > order.
  int position(const MultiIndex& alpha) const;

  // Truncated convolution table: coefficient a times coefficient b lands on
  // position out.
  struct ProductTerm {
    int a, b, out;
  };
  const std::vector<ProductTerm>& products() const noexcept { return products_; }

 private:
  JetSpace(int nvars, int order);

  int nvars_, order_;
  std::vector<MultiIndex> indices_;
  std::vector<int> degree_;           // total degree per position
  std::vector<ProductTerm> products_; // all (a,b)->out with deg a + deg b <= order
  std::vector<int> rank_;             // packed exponent key -> position, -1 if absent

  friend class Jet;
};

class Jet {
 public:
  Jet() = default;  // empty/invalid; assign before use

  static Jet constant(const JetSpace& space, double v);
  // The coordinate function u_base + w_i as a jet.
  static Jet variable(const JetSpace& space, int var, double base);

  bool valid() const noexcept { return space_ != nullptr; }
  const JetSpace& space() const { return *space_; }
  int order() const { return space_->order(); }

  // Exactness budget: coefficients of total degree <= valid_order() agree
  // with the true Taylor expansion; beyond it they are zero by truncation.
  // Products and sums take the minimum, a partial derivative loses one.
  int valid_order() const noexcept { return valid_; }

  double value() const;
  double coeff(const MultiIndex& alpha) const;
  double derivative(const MultiIndex& alpha) const;

  // d/dx_var as a jet (valid one order lower).
  Jet partial(int var) const;

  Jet& operator+=(const Jet& rhs);
  Jet& operator-=(const Jet& rhs);
  Jet& operator*=(double s);
  Jet& operator+=(double s);
  Jet& operator-=(double s);

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator*(Jet a, double s) { return a *= s; }
  friend Jet operator*(double s, Jet a) { return a *= s; }
  friend Jet operator+(Jet a, double s) { return a += s; }
  friend Jet operator+(double s, Jet a) { return a += s; }
  friend Jet operator-(Jet a, double s) { return a -= s; }
  friend Jet operator-(double s, Jet a) { a *= -1.0; return a += s; }
  friend Jet operator-(Jet a) { return a *= -1.0; }
  friend Jet operator/(const Jet& a, const Jet& b);
  friend Jet operator/(Jet a, double s) { return a *= 1.0 / s; }

  // Analytic composition: f(jet) as the truncated series of f around value().
  friend Jet sin(const Jet& g);
  friend Jet cos(const Jet& g);
  friend Jet exp(const Jet& g);
  friend Jet sqrt(const Jet& g);   // requires value() > 0
  friend Jet recip(const Jet& g);  // requires value() != 0

 private:
  Jet(const JetSpace& space, int valid) : space_(&space), valid_(valid), c_(space.size(), 0.0) {}

  // f(g) = sum_k d[k] * (g - g0)^k with d[k] = f^(k)(g0)/k!.
  static Jet compose(const Jet& g, std::span<const double> d);
  void require_same_space(const Jet& rhs) const;

  const JetSpace* space_ = nullptr;
  int valid_ = 0;
  std::vector<double> c_;
};

Jet pow_int(const Jet& g, int n);

// A jet-evaluable map R^domain_dim -> R^ambient_dim.
struct JetMap {
  int domain_dim = 0;
  int ambient_dim = 0;
  std::function<std::vector<Jet>(std::span<const Jet>)> eval;
};

// Jet of a whole map at a point: base point, truncation order, one
// coefficient series per ambient coordinate.
struct MapJet {
  std::vector<double> base_point;
  int order = 0;
  std::vector<Jet> coords;
};

// Evaluate the map on variable jets.  order must lie in 1..4 for the public
// entry point; internal callers may use order 0 for plain values.
MapJet jet_eval_map(const JetMap& map, std::span<const double> point, int order);
std::vector<double> value_eval_map(const JetMap& map, std::span<const double> point);

}  // namespace bih
