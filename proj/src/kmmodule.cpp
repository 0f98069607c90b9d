#include "kacwreath/kmmodule.hpp"

#include <algorithm>
#include <set>

#include "kacwreath/arrangement.hpp"
#include "kacwreath/weights.hpp"

namespace kw {

namespace {

std::vector<std::vector<std::size_t>> components_of(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> members, stack{s};
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      members.push_back(i);
      for (std::size_t j = 0; j < n; ++j)
        if (comp[j] < 0 && a(i, j) != 0) {
          comp[j] = comp[s];
          stack.push_back(j);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

// Primitive positive kernel vector of an affine Cartan matrix.
std::vector<long> affine_marks(const IntMatrix& a) {
  const std::size_t n = a.rows();
  const RatMatrix q = to_rational(a);
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n; ++i)
      if (i != v) rest.push_back(i);
    const RatMatrix sub = q.principal(rest);
    if (rank(sub) != rest.size()) continue;
    RatMatrix rhs(rest.size(), 1);
    for (std::size_t i = 0; i < rest.size(); ++i) rhs(i, 0) = -q(rest[i], v);
    const RatMatrix x = invert(sub) * rhs;
    std::vector<Rational> ker(n);
    ker[v] = 1;
    for (std::size_t i = 0; i < rest.size(); ++i) ker[rest[i]] = x(i, 0);
    BigInt den = 1;
    for (const auto& k : ker) den = lcm(den, BigInt(k.get_den()));
    std::vector<long> out(n);
    BigInt g = 0;
    for (std::size_t i = 0; i < n; ++i) {
      BigInt z = BigInt(ker[i] * Rational(den));
      g = gcd(g, z);
      out[i] = z.get_si();
    }
    for (auto& z : out) z /= g.get_si();
    return out;
  }
  throw UnsupportedRegime("affine component without a nonsingular corank-one minor");
}

}  // namespace

KMModule::KMModule(const IntMatrix& a, std::vector<long> labels, std::vector<long> grades, long depth_budget)
    : t_(a.rows()), labels_(std::move(labels)), grades_(std::move(grades)), budget_(depth_budget) {
  if (!a.symmetric()) throw InputError("Cartan matrix must be symmetric");
  if (labels_.size() != t_ || grades_.size() != t_) throw InputError("labels and grades must match the rank");
  for (std::size_t i = 0; i < t_; ++i) {
    if (a(i, i) != 2) throw UnsupportedRegime("simple roots must be real");
    if (labels_[i] < 0) throw InputError("highest weight is not dominant");
    if (grades_[i] < 0) throw InputError("simple root grades must be nonnegative");
  }
  a_.resize(t_ * t_);
  for (std::size_t i = 0; i < t_; ++i)
    for (std::size_t j = 0; j < t_; ++j) a_[i * t_ + j] = a(i, j).get_si();

  for (const auto& members : components_of(a)) {
    const IntMatrix sub = a.principal(members);
    bool affine = false;
    classify_cartan(sub, &affine);
    auto embed = [&](const std::vector<long>& local) {
      std::vector<long> g(t_, 0);
      for (std::size_t i = 0; i < members.size(); ++i) g[members[i]] = local[i];
      return g;
    };
    auto grade_of = [&](const std::vector<long>& g) {
      long s = 0;
      for (std::size_t i = 0; i < t_; ++i) s += g[i] * grades_[i];
      return s;
    };
    if (!affine) {
      for (const auto& r : reflection_closure(sub)) {
        if (std::any_of(r.begin(), r.end(), [](long x) { return x < 0; })) continue;
        auto g = embed(r);
        if (grade_of(g) <= budget_) roots_.push_back({g, 1});
      }
      continue;
    }
    const std::vector<long> marks = affine_marks(sub);
    const std::vector<long> dprime = embed(marks);
    const long dgrade = grade_of(dprime);
    if (dgrade <= 0) throw UnsupportedRegime("affine component with null imaginary grade");
    // Finite part: drop a mark-1 vertex whose complement is connected.
    std::size_t drop = members.size();
    for (std::size_t v = 0; v < members.size() && drop == members.size(); ++v) {
      if (marks[v] != 1) continue;
      std::vector<std::size_t> rest;
      for (std::size_t i = 0; i < members.size(); ++i)
        if (i != v) rest.push_back(i);
      if (is_positive_definite(to_rational(sub.principal(rest)))) drop = v;
    }
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < members.size(); ++i)
      if (i != drop) rest.push_back(i);
    const long kmax = budget_ / dgrade + 1;
    const long fin_rank = static_cast<long>(rest.size());
    std::vector<std::vector<long>> phis;
    if (!rest.empty()) {
      for (const auto& r : reflection_closure(sub.principal(rest))) {
        if (std::any_of(r.begin(), r.end(), [](long x) { return x < 0; })) continue;
        std::vector<long> local(members.size(), 0);
        for (std::size_t i = 0; i < rest.size(); ++i) local[rest[i]] = r[i];
        phis.push_back(embed(local));
      }
    }
    for (long k = 0; k <= kmax; ++k) {
      for (const auto& phi : phis) {
        std::vector<long> up(t_), down(t_);
        for (std::size_t i = 0; i < t_; ++i) {
          up[i] = phi[i] + k * dprime[i];
          down[i] = -phi[i] + k * dprime[i];
        }
        if (grade_of(up) <= budget_) roots_.push_back({up, 1});
        if (k >= 1 && grade_of(down) <= budget_) roots_.push_back({down, 1});
      }
      if (k >= 1) {
        std::vector<long> im(t_);
        for (std::size_t i = 0; i < t_; ++i) im[i] = k * dprime[i];
        if (grade_of(im) <= budget_ && fin_rank > 0) roots_.push_back({im, fin_rank});
      }
    }
  }
  std::sort(roots_.begin(), roots_.end(),
            [](const PositiveRoot& x, const PositiveRoot& y) { return x.coords < y.coords; });
  for (const auto& r : roots_) {
    std::vector<long> ab(t_, 0);
    long lab = 0, nrm = 0;
    for (std::size_t i = 0; i < t_; ++i) {
      for (std::size_t j = 0; j < t_; ++j) ab[i] += a_[i * t_ + j] * r.coords[j];
      lab += labels_[i] * r.coords[i];
    }
    for (std::size_t i = 0; i < t_; ++i) nrm += r.coords[i] * ab[i];
    root_ab_.push_back(std::move(ab));
    root_norm_.push_back(nrm);
    root_label_.push_back(lab);
  }
}

long KMModule::grade(const std::vector<long>& c) const {
  long s = 0;
  for (std::size_t i = 0; i < t_; ++i) s += c[i] * grades_[i];
  return s;
}

BigInt KMModule::mult(const std::vector<long>& c0) {
  if (c0.size() != t_) throw InputError("weight coordinates do not match the rank");
  for (long x : c0)
    if (x < 0) return 0;
  if (grade(c0) > budget_)
    throw WindowExhausted("affine depth budget " + std::to_string(budget_) + " exceeded");
  // Move to the dominant chamber: c_i += (nu, s_i) while that pairing is negative.
  std::vector<long> c = c0;
  std::vector<long> p(t_);
  for (std::size_t i = 0; i < t_; ++i) {
    p[i] = labels_[i];
    for (std::size_t j = 0; j < t_; ++j) p[i] -= a_[i * t_ + j] * c[j];
  }
  while (true) {
    std::size_t i = 0;
    while (i < t_ && p[i] >= 0) ++i;
    if (i == t_) break;
    const long pi = p[i];
    c[i] += pi;
    if (c[i] < 0) return 0;
    for (std::size_t j = 0; j < t_; ++j) p[j] -= pi * a_[j * t_ + i];
  }
  // Dominant weights of L(Lambda) satisfy nu^2 <= Lambda^2.
  long quad = 0, lin = 0;
  for (std::size_t i = 0; i < t_; ++i) {
    lin += labels_[i] * c[i];
    quad += c[i] * (labels_[i] - p[i]);  // (A c)_i = labels_i - p_i
  }
  if (quad - 2 * lin > 0) return 0;
  return compute_dominant(c);
}

BigInt KMModule::compute_dominant(const std::vector<long>& c) {
  if (std::all_of(c.begin(), c.end(), [](long x) { return x == 0; })) return 1;
  if (auto it = memo_.find(c); it != memo_.end()) return it->second;
  std::vector<long> ac(t_, 0);
  long lhs = 0, quad = 0;
  for (std::size_t i = 0; i < t_; ++i) {
    for (std::size_t j = 0; j < t_; ++j) ac[i] += a_[i * t_ + j] * c[j];
    lhs += 2 * c[i] * (labels_[i] + 1);
  }
  for (std::size_t i = 0; i < t_; ++i) quad += c[i] * ac[i];
  lhs -= quad;
  BigInt rhs = 0;
  std::vector<long> w(t_);
  for (std::size_t r = 0; r < roots_.size(); ++r) {
    const auto& b = roots_[r].coords;
    long cab = 0;
    for (std::size_t i = 0; i < t_; ++i) cab += c[i] * root_ab_[r][i];
    for (long t = 1;; ++t) {
      bool ok = true;
      for (std::size_t i = 0; i < t_ && ok; ++i) {
        w[i] = c[i] - t * b[i];
        ok = w[i] >= 0;
      }
      if (!ok) break;
      const long coef = root_label_[r] - cab + t * root_norm_[r];
      if (coef == 0) continue;
      const BigInt m = mult(w);
      if (m != 0) rhs += BigInt(coef) * BigInt(roots_[r].multiplicity) * m;
    }
  }
  rhs *= 2;
  if (lhs <= 0) {
    if (rhs != 0) throw ArithmeticError("Freudenthal recursion: nonpositive norm gap with nonzero sum");
    memo_.emplace(c, 0);
    return 0;
  }
  if (rhs % lhs != 0) throw ArithmeticError("Freudenthal recursion produced a non-integral multiplicity");
  BigInt m = rhs / lhs;
  memo_.emplace(c, m);
  return m;
}

std::map<std::vector<long>, BigInt> KMModule::weights_to_grade(long max_grade) {
  std::map<std::vector<long>, BigInt> out;
  std::vector<std::vector<long>> queue{std::vector<long>(t_, 0)};
  std::set<std::vector<long>> seen{queue[0]};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto c = queue[head];
    BigInt m = mult(c);
    if (m == 0) continue;
    out.emplace(c, m);
    for (std::size_t i = 0; i < t_; ++i) {
      auto d = c;
      ++d[i];
      if (grade(d) > max_grade) continue;
      if (seen.insert(d).second) queue.push_back(std::move(d));
    }
  }
  return out;
}

}  // namespace kw
