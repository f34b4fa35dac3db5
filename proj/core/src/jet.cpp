#include "bih/jet.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace bih {

int total_degree(const MultiIndex& alpha) {
  int d = 0;
  for (int a : alpha) d += a;
  return d;
}

double factorial_of(const MultiIndex& alpha) {
  double f = 1.0;
  for (int a : alpha)
    for (int k = 2; k <= a; ++k) f *= k;
  return f;
}

namespace {

// Enumerate all exponent vectors with total degree <= order, graded, then
// lexicographic within each degree.
void enumerate_indices(int nvars, int order, std::vector<MultiIndex>& out) {
  MultiIndex cur(nvars, 0);
  for (int deg = 0; deg <= order; ++deg) {
    if (nvars == 0) {
      if (deg == 0) out.push_back({});
      continue;
    }
    // collect exactly-degree `deg` indices
    std::vector<MultiIndex> level;
    std::function<void(int, int)> rec2 = [&](int var, int remaining) {
      if (var == nvars - 1) {
        cur[var] = remaining;
        level.push_back(cur);
        cur[var] = 0;
        return;
      }
      for (int a = 0; a <= remaining; ++a) {
        cur[var] = a;
        rec2(var + 1, remaining - a);
      }
      cur[var] = 0;
    };
    rec2(0, deg);
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
  }
}

int packed_key(const MultiIndex& alpha, int base) {
  int key = 0;
  for (int i = static_cast<int>(alpha.size()) - 1; i >= 0; --i) key = key * base + alpha[i];
  return key;
}

}  // namespace

JetSpace::JetSpace(int nvars, int order) : nvars_(nvars), order_(order) {
  enumerate_indices(nvars, order, indices_);
  degree_.reserve(indices_.size());
  for (const auto& a : indices_) degree_.push_back(total_degree(a));

  const int base = order + 1;
  int span = 1;
  for (int i = 0; i < nvars; ++i) span *= base;
  rank_.assign(std::max(span, 1), -1);
  for (int p = 0; p < static_cast<int>(indices_.size()); ++p)
    rank_[packed_key(indices_[p], base)] = p;

  // truncated convolution table
  const int n = size();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (degree_[a] + degree_[b] > order_) continue;
      MultiIndex sum(nvars_, 0);
      for (int i = 0; i < nvars_; ++i) sum[i] = indices_[a][i] + indices_[b][i];
      products_.push_back({a, b, rank_[packed_key(sum, base)]});
    }
  }
}

const JetSpace& JetSpace::get(int nvars, int order) {
  if (nvars < 0 || nvars > kMaxJetVars)
    throw_error(ErrorKind::UnsupportedOrder,
                "jet spaces support at most " + std::to_string(kMaxJetVars) + " variables");
  if (order < 0 || order > kMaxJetOrder)
    throw_error(ErrorKind::UnsupportedOrder,
                "jet order " + std::to_string(order) + " outside supported range 0..4");
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<JetSpace>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(nvars, order);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::unique_ptr<JetSpace>(new JetSpace(nvars, order))).first;
  return *it->second;
}

int JetSpace::position(const MultiIndex& alpha) const {
  if (static_cast<int>(alpha.size()) != nvars_) return -1;
  int deg = 0;
  for (int a : alpha) {
    if (a < 0) return -1;
    deg += a;
  }
  if (deg > order_) return -1;
  return rank_[packed_key(alpha, order_ + 1)];
}

Jet Jet::constant(const JetSpace& space, double v) {
  Jet j(space, space.order());
  j.c_[0] = v;
  return j;
}

Jet Jet::variable(const JetSpace& space, int var, double base) {
  if (var < 0 || var >= space.nvars())
    throw_error(ErrorKind::Engine, "jet variable index out of range");
  Jet j(space, space.order());
  j.c_[0] = base;
  if (space.order() >= 1) {
    MultiIndex e(space.nvars(), 0);
    e[var] = 1;
    j.c_[space.position(e)] = 1.0;
  }
  return j;
}

void Jet::require_same_space(const Jet& rhs) const {
  if (space_ == nullptr || rhs.space_ == nullptr) throw_error(ErrorKind::Engine, "use of empty jet");
  if (space_ != rhs.space_) throw_error(ErrorKind::Engine, "jet space mismatch");
}

double Jet::value() const {
  if (!valid()) throw_error(ErrorKind::Engine, "use of empty jet");
  return c_[0];
}

double Jet::coeff(const MultiIndex& alpha) const {
  if (!valid()) throw_error(ErrorKind::Engine, "use of empty jet");
  int pos = space_->position(alpha);
  if (pos < 0) throw_error(ErrorKind::UnsupportedOrder, "multi-index outside jet order");
  if (total_degree(alpha) > valid_)
    throw_error(ErrorKind::Engine, "jet coefficient requested beyond exactness budget");
  return c_[pos];
}

double Jet::derivative(const MultiIndex& alpha) const { return coeff(alpha) * factorial_of(alpha); }

Jet Jet::partial(int var) const {
  if (!valid()) throw_error(ErrorKind::Engine, "use of empty jet");
  if (valid_ < 1) throw_error(ErrorKind::Engine, "jet differentiation exceeds exactness budget");
  if (var < 0 || var >= space_->nvars()) throw_error(ErrorKind::Engine, "partial index out of range");
  Jet out(*space_, valid_ - 1);
  const auto& idx = space_->indices();
  for (int p = 0; p < space_->size(); ++p) {
    if (idx[p][var] == 0) continue;
    MultiIndex target = idx[p];
    target[var] -= 1;
    out.c_[space_->position(target)] += c_[p] * idx[p][var];
  }
  return out;
}

Jet& Jet::operator+=(const Jet& rhs) {
  require_same_space(rhs);
  valid_ = std::min(valid_, rhs.valid_);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

Jet& Jet::operator-=(const Jet& rhs) {
  require_same_space(rhs);
  valid_ = std::min(valid_, rhs.valid_);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
  return *this;
}

Jet& Jet::operator*=(double s) {
  for (double& v : c_) v *= s;
  return *this;
}

Jet& Jet::operator+=(double s) {
  if (!valid()) throw_error(ErrorKind::Engine, "use of empty jet");
  c_[0] += s;
  return *this;
}

Jet& Jet::operator-=(double s) { return *this += -s; }

Jet operator*(const Jet& a, const Jet& b) {
  a.require_same_space(b);
  Jet out(*a.space_, std::min(a.valid_, b.valid_));
  for (const auto& t : a.space_->products()) out.c_[t.out] += a.c_[t.a] * b.c_[t.b];
  return out;
}

Jet operator/(const Jet& a, const Jet& b) { return a * recip(b); }

Jet Jet::compose(const Jet& g, std::span<const double> d) {
  // Horner evaluation of sum_k d[k] w^k with w = g - g(0); truncation keeps
  // every retained coefficient exact.
  Jet w = g;
  w.c_[0] = 0.0;
  const int K = g.space_->order();
  Jet acc = Jet::constant(*g.space_, d[K]);
  acc.valid_ = g.valid_;
  for (int k = K - 1; k >= 0; --k) {
    acc = acc * w;
    acc.c_[0] += d[k];
  }
  acc.valid_ = g.valid_;
  return acc;
}

Jet sin(const Jet& g) {
  const double s = std::sin(g.value()), c = std::cos(g.value());
  // d^k sin cycle: sin, cos, -sin, -cos; divided by k!
  const double d[5] = {s, c, -s / 2.0, -c / 6.0, s / 24.0};
  return Jet::compose(g, std::span<const double>(d, g.space().order() + 1));
}

Jet cos(const Jet& g) {
  const double s = std::sin(g.value()), c = std::cos(g.value());
  const double d[5] = {c, -s, -c / 2.0, s / 6.0, c / 24.0};
  return Jet::compose(g, std::span<const double>(d, g.space().order() + 1));
}

Jet exp(const Jet& g) {
  const double e = std::exp(g.value());
  const double d[5] = {e, e, e / 2.0, e / 6.0, e / 24.0};
  return Jet::compose(g, std::span<const double>(d, g.space().order() + 1));
}

Jet sqrt(const Jet& g) {
  const double v = g.value();
  if (!(v > 0.0)) throw_error(ErrorKind::Domain, "jet sqrt requires a positive value part");
  const double r = std::sqrt(v);
  // f^(k)(v)/k! for f = sqrt: r, 1/(2r), -1/(8 r^3), 1/(16 r^5), -5/(128 r^7)
  const double d[5] = {r, 0.5 / r, -1.0 / (8.0 * r * r * r), 1.0 / (16.0 * std::pow(r, 5)),
                       -5.0 / (128.0 * std::pow(r, 7))};
  return Jet::compose(g, std::span<const double>(d, g.space().order() + 1));
}

Jet recip(const Jet& g) {
  const double v = g.value();
  if (v == 0.0) throw_error(ErrorKind::Domain, "jet reciprocal of a zero value part");
  // f^(k)(v)/k! for f = 1/x: (-1)^k / v^(k+1)
  double d[5];
  double p = 1.0 / v;
  for (int k = 0; k <= g.space().order(); ++k) {
    d[k] = p;
    p *= -1.0 / v;
  }
  return Jet::compose(g, std::span<const double>(d, g.space().order() + 1));
}

Jet pow_int(const Jet& g, int n) {
  if (n < 0) return recip(pow_int(g, -n));
  Jet acc = Jet::constant(g.space(), 1.0);
  for (int k = 0; k < n; ++k) acc = acc * g;
  return acc;
}

MapJet jet_eval_map(const JetMap& map, std::span<const double> point, int order) {
  if (static_cast<int>(point.size()) != map.domain_dim)
    throw_error(ErrorKind::Config, "point dimension does not match map domain");
  const JetSpace& space = JetSpace::get(map.domain_dim, order);
  std::vector<Jet> vars;
  vars.reserve(map.domain_dim);
  for (int i = 0; i < map.domain_dim; ++i) vars.push_back(Jet::variable(space, i, point[i]));
  MapJet out;
  out.base_point.assign(point.begin(), point.end());
  out.order = order;
  out.coords = map.eval(vars);
  if (static_cast<int>(out.coords.size()) != map.ambient_dim)
    throw_error(ErrorKind::Engine, "map produced wrong ambient dimension");
  return out;
}

std::vector<double> value_eval_map(const JetMap& map, std::span<const double> point) {
  MapJet j = jet_eval_map(map, point, 0);
  std::vector<double> v(j.coords.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = j.coords[i].value();
  return v;
}

}  // namespace bih
