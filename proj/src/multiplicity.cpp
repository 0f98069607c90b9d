#include "kacwreath/multiplicity.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <thread>

#include "kacwreath/partitions.hpp"

namespace kw {

BigInt frenkel_kac_mult(const RootSystem& rs, const RootVec& beta, long N, FockSpace space) {
  if (beta.size() != rs.rank()) throw InputError("beta must be given in root coordinates of the diagram");
  const long b2 = rs.norm_sq(beta);
  const long colors = static_cast<long>(rs.rank()) + (space == FockSpace::V ? 1 : 0);
  return p_colored(colors, make_rational(2 * N - b2, 2));
}

BigInt freudenthal_finite(const IntMatrix& cartan, const std::vector<long>& mu, const std::vector<long>& nu) {
  const std::size_t r = cartan.rows();
  if (mu.size() != r || nu.size() != r) throw InputError("weight length does not match the rank");
  for (long x : mu)
    if (x < 0) throw InputError("highest weight is not dominant");
  // c = C^{-1} (mu - nu) must be a nonnegative integer vector.
  const RatMatrix inv = invert(to_rational(cartan));
  std::vector<long> c(r);
  for (std::size_t i = 0; i < r; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < r; ++j) s += inv(i, j) * Rational(mu[j] - nu[j]);
    if (!is_integer(s) || s < 0) return 0;
    c[i] = s.get_num().get_si();
  }
  KMModule mod(cartan, mu, std::vector<long>(r, 0), 0);
  return mod.mult(c);
}

BigInt freudenthal_affine(const AffineDynkin& d, const std::vector<long>& labels, const std::vector<long>& c,
                          long depth) {
  std::vector<long> grades(d.size(), 0);
  grades[0] = 1;
  KMModule mod(d.cartan, labels, grades, depth);
  return mod.mult(c);
}

std::vector<RootVec> lattice_ball(const RootSystem& rs, long bound) {
  const std::size_t r = rs.rank();
  std::vector<RootVec> out{RootVec(r, 0)};
  if (bound < 0) return {};
  std::set<RootVec> seen{out[0]};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (std::size_t i = 0; i < r; ++i)
      for (long s : {1L, -1L}) {
        RootVec b = out[head];
        b[i] += s;
        if (rs.norm_sq(b) > bound || !seen.insert(b).second) continue;
        out.push_back(std::move(b));
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ModuleWindow build_window(const GammaDescriptor& g, long n, const WindowOptions& opt) {
  if (n < 1) throw InputError("wreath index must be >= 1");
  ModuleWindow w;
  w.group = g;
  w.delta_depth = opt.delta_depth.value_or(n);
  w.beta_norm_bound = opt.beta_norm_bound.value_or(4 * n);
  if (w.delta_depth < 0 || w.beta_norm_bound < 0) throw InputError("window bounds must be nonnegative");
  w.truncated = w.beta_norm_bound < 2 * w.delta_depth;
  const RootSystem rs(affine_dynkin(g));
  const std::vector<RootVec> ball = lattice_ball(rs, std::min(w.beta_norm_bound, 2 * w.delta_depth));

  using Entry = std::pair<WindowKey, BigInt>;
  const unsigned nt = std::max(1u, opt.threads);
  std::vector<std::vector<Entry>> parts(nt);
  auto work = [&](unsigned tid) {
    for (std::size_t idx = tid; idx < ball.size(); idx += nt) {
      const RootVec& beta = ball[idx];
      const long b2 = rs.norm_sq(beta);
      for (long j = (b2 + 1) / 2; j <= w.delta_depth; ++j)
        parts[tid].emplace_back(WindowKey{j, beta}, frenkel_kac_mult(rs, beta, j, FockSpace::V));
    }
  };
  if (nt == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (auto& part : parts)
    for (auto& e : part) w.mult.insert(std::move(e));
  return w;
}

// ---------------------------------------------------------------------------
// Branching

namespace {

long height(const RootVec& b) { return std::accumulate(b.begin(), b.end(), 0L); }

std::string describe(const WindowKey& k) {
  std::string s = "omega0 - " + std::to_string(k.first) + " delta + (";
  for (std::size_t i = 0; i < k.second.size(); ++i) s += (i ? "," : "") + std::to_string(k.second[i]);
  return s + ")";
}

}  // namespace

DecompositionReport decompose(const ModuleWindow& window, const SubalgebraDescriptor& a, long n) {
  DecompositionReport rep;
  rep.delta_depth = window.delta_depth;
  rep.beta_norm_bound = window.beta_norm_bound;
  rep.truncated = window.truncated;
  rep.heisenberg_period = a.heisenberg_period;
  if (n > window.delta_depth) throw WindowExhausted("window depth is below the wreath index");
  if (window.truncated)
    rep.diagnostics.push_back("beta-norm bound below twice the delta depth: some weights are outside the window");

  const RootSystem rs(affine_dynkin(window.group));
  const auto& simples = a.simple_system;
  const std::size_t t = simples.size();
  IntMatrix cartan(t, t);
  std::vector<long> grades(t);
  for (std::size_t i = 0; i < t; ++i) {
    grades[i] = simples[i].m;
    for (std::size_t j = 0; j < t; ++j) cartan(i, j) = root_form(rs, simples[i], simples[j]);
  }
  const long period = a.heisenberg_period.value_or(0);

  std::vector<WindowKey> order;
  order.reserve(window.mult.size());
  for (const auto& [k, _] : window.mult) order.push_back(k);
  std::stable_sort(order.begin(), order.end(), [](const WindowKey& x, const WindowKey& y) {
    if (x.first != y.first) return x.first < y.first;
    const long hx = height(x.second), hy = height(y.second);
    if (hx != hy) return hx > hy;
    return x.second < y.second;
  });

  std::map<WindowKey, BigInt> res = window.mult;
  const RootVec zero(rs.rank(), 0);
  for (const auto& key : order) {
    const BigInt h = res.at(key);
    if (h == 0) continue;
    const auto& [j, beta] = key;
    std::vector<long> labels(t);
    bool dominant = true;
    for (std::size_t i = 0; i < t; ++i) {
      labels[i] = rs.form(beta, simples[i].alpha) + simples[i].m;
      if (labels[i] < 0) dominant = false;
    }
    if (h < 0 || !dominant) {
      rep.residual_ok = false;
      rep.diagnostics.push_back(std::string(h < 0 ? "negative" : "non-dominant") + " residual " + h.get_str() +
                                " at " + describe(key));
      continue;
    }
    DecompositionRow row;
    row.beta = beta;
    row.j = j;
    row.hom_mult = h;
    row.mu_norm_sq = Rational(rs.norm_sq(beta) - 2 * j);
    const long budget = window.delta_depth - j;
    KMModule mod(cartan, labels, grades, budget);
    for (const auto& [c, mc] : mod.weights_to_grade(budget)) {
      RootVec b = beta;
      long jj = j;
      for (std::size_t i = 0; i < t; ++i) {
        if (c[i] == 0) continue;
        jj += c[i] * simples[i].m;
        for (std::size_t q = 0; q < b.size(); ++q) b[q] -= c[i] * simples[i].alpha[q];
      }
      for (long s = 0; jj + s * period <= window.delta_depth; ++s) {
        const long depth = jj + s * period;
        const BigInt heis = period == 0 ? BigInt(1) : p_colored(1, s);
        if (auto it = res.find(WindowKey{depth, b}); it != res.end()) it->second -= h * mc * heis;
        if (b == zero && depth == n) {
          row.degree_profile[s] += mc * heis;
          row.weight_mult_at_target += mc * heis;
        }
        if (period == 0) break;
      }
    }
    rep.rows.push_back(std::move(row));
  }
  for (const auto& [k, v] : res)
    if (v != 0 && rep.residual_ok) {
      rep.residual_ok = false;
      rep.diagnostics.push_back("residual " + v.get_str() + " left at close-out at " + describe(k));
    }
  return rep;
}

}  // namespace kw
