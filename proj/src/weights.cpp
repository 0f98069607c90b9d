#include "kacwreath/weights.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace kw {

namespace {

long height(const RootVec& a) { return std::accumulate(a.begin(), a.end(), 0L); }

bool root_order(const RootVec& a, const RootVec& b) {
  const long ha = height(a), hb = height(b);
  const bool pa = ha > 0, pb = hb > 0;
  if (pa != pb) return pa;
  if (pa) {
    if (ha != hb) return ha < hb;
  } else if (ha != hb) {
    return ha > hb;
  }
  return a < b;
}

}  // namespace

std::vector<RootVec> reflection_closure(const IntMatrix& cartan, std::size_t max_roots) {
  const std::size_t r = cartan.rows();
  std::vector<long> c(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) c[i * r + j] = cartan(i, j).get_si();
  std::set<RootVec> seen;
  std::vector<RootVec> queue;
  for (std::size_t i = 0; i < r; ++i) {
    RootVec e(r, 0);
    e[i] = 1;
    if (seen.insert(e).second) queue.push_back(e);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const RootVec a = queue[head];
    for (std::size_t i = 0; i < r; ++i) {
      long p = 0;
      for (std::size_t j = 0; j < r; ++j) p += c[i * r + j] * a[j];
      if (p == 0) continue;
      RootVec b = a;
      b[i] -= p;
      if (seen.insert(b).second) {
        if (seen.size() > max_roots) throw InputError("reflection closure does not terminate: not of finite type");
        queue.push_back(std::move(b));
      }
    }
  }
  std::vector<RootVec> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), root_order);
  return out;
}

RootSystem::RootSystem(const AffineDynkin& d) : diagram_(d), cartan_(d.finite_cartan()) {
  const std::size_t r = cartan_.rows();
  c_.resize(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) c_[i * r + j] = cartan_(i, j).get_si();
  if (r > 0) {
    inv_ = invert(to_rational(cartan_));
    roots_ = reflection_closure(cartan_);
    for (const auto& a : roots_)
      if (height(a) > 0) positive_.push_back(a);
  }
}

RootVec RootSystem::highest_root() const {
  return RootVec(diagram_.marks.begin() + 1, diagram_.marks.end());
}

long RootSystem::form(const RootVec& a, const RootVec& b) const {
  const std::size_t r = rank();
  if (a.size() != r || b.size() != r) throw InputError("root vector length does not match the rank");
  long s = 0;
  for (std::size_t i = 0; i < r; ++i) {
    if (a[i] == 0) continue;
    long t = 0;
    for (std::size_t j = 0; j < r; ++j) t += c_[i * r + j] * b[j];
    s += a[i] * t;
  }
  return s;
}

bool RootSystem::is_root(const RootVec& a) const {
  return std::binary_search(roots_.begin(), roots_.end(), a, root_order);
}

std::vector<long> RootSystem::to_fundamental(const RootVec& a) const {
  const std::size_t r = rank();
  std::vector<long> f(r, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) f[i] += c_[i * r + j] * a[j];
  return f;
}

FiniteWeight FiniteWeight::from_root(const RootSystem& rs, const RootVec& a) {
  FiniteWeight w;
  for (long x : rs.to_fundamental(a)) w.fundamental.emplace_back(x);
  w.root = a;
  return w;
}

FiniteWeight FiniteWeight::from_fundamental(std::vector<Rational> f) {
  FiniteWeight w;
  w.fundamental = std::move(f);
  return w;
}

AffineWeight omega0(const RootSystem& rs) {
  return {Rational(1), FiniteWeight::from_root(rs, RootVec(rs.rank(), 0)), Rational(0)};
}

AffineWeight delta(const RootSystem& rs) {
  return {Rational(0), FiniteWeight::from_root(rs, RootVec(rs.rank(), 0)), Rational(1)};
}

AffineWeight as_weight(const RootSystem& rs, const AffineRoot& a) {
  return {Rational(0), FiniteWeight::from_root(rs, a.alpha), Rational(a.m)};
}

Rational finite_inner(const RootSystem& rs, const FiniteWeight& a, const FiniteWeight& b) {
  const std::size_t r = rs.rank();
  if (a.fundamental.size() != r || b.fundamental.size() != r)
    throw InputError("weights belong to a different diagram");
  if (a.root && b.root) return Rational(rs.form(*a.root, *b.root));
  if (a.root) {
    Rational s = 0;
    for (std::size_t i = 0; i < r; ++i) s += Rational((*a.root)[i]) * b.fundamental[i];
    return s;
  }
  if (b.root) return finite_inner(rs, b, a);
  const RatMatrix& inv = rs.inverse_cartan();
  Rational s = 0;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) s += a.fundamental[i] * inv(i, j) * b.fundamental[j];
  return s;
}

Rational inner_product(const RootSystem& rs, const AffineWeight& a, const AffineWeight& b) {
  return a.level * b.delta_coeff + b.level * a.delta_coeff + finite_inner(rs, a.finite, b.finite);
}

Rational norm_sq(const RootSystem& rs, const AffineWeight& mu) { return inner_product(rs, mu, mu); }

Rational pair_with_root(const RootSystem& rs, const AffineWeight& mu, const AffineRoot& rho) {
  if (rho.alpha.size() != rs.rank() || mu.finite.fundamental.size() != rs.rank())
    throw InputError("weight and root belong to different diagrams");
  Rational s = Rational(rho.m) * mu.level;
  for (std::size_t i = 0; i < rs.rank(); ++i) s += Rational(rho.alpha[i]) * mu.finite.fundamental[i];
  return s;
}

long root_form(const RootSystem& rs, const AffineRoot& a, const AffineRoot& b) { return rs.form(a.alpha, b.alpha); }

std::vector<RootVec> all_finite_roots(const AffineDynkin& d) {
  if (d.finite_rank() == 0) throw InputError("trivial group has no finite roots");
  return reflection_closure(d.finite_cartan());
}

bool is_dominant_for(const RootSystem& rs, const AffineWeight& mu, const std::vector<AffineRoot>& simples) {
  for (std::size_t i = 0; i < simples.size(); ++i)
    for (std::size_t j = i + 1; j < simples.size(); ++j)
      if (root_form(rs, simples[i], simples[j]) > 0) throw InputError("not a simple system: positive pairing");
  for (const auto& s : simples) {
    const Rational p = pair_with_root(rs, mu, s);
    if (!is_integer(p) || p < 0) return false;
  }
  return true;
}

}  // namespace kw
