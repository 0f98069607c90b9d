#include "kacwreath/arrangement.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace kw {

// ---------------------------------------------------------------------------
// Faces

void ParameterFace::validate() const {
  if (n < 1) throw InputError("field \"n\": wreath index must be >= 1");
  const AffineDynkin d = diagram();
  if (lambda.size() != d.size())
    throw InputError("field \"lambda\": expected " + std::to_string(d.size()) + " entries for " + group.name());
  LinK s{0, 0};
  for (std::size_t i = 0; i < d.size(); ++i) {
    s.u += Rational(d.marks[i]) * lambda[i].u;
    s.v += Rational(d.marks[i]) * lambda[i].v;
  }
  bool ok = kclass == KClass::Irrational ? (s.u == 1 && s.v == 0) : (s.u + s.v * k == 1);
  if (!ok) throw InputError("field \"lambda\": normalization (λ,δ)=1 violated (sum of marks*lambda must be 1)");
}

LinK ParameterFace::pairing(const RootVec& alpha) const {
  LinK s{0, 0};
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    s.u += Rational(alpha[i]) * lambda.at(i + 1).u;
    s.v += Rational(alpha[i]) * lambda.at(i + 1).v;
  }
  return s;
}

ParameterFace ParameterFace::omega0_face(const GammaDescriptor& g, int n, KClass kc, const Rational& k) {
  ParameterFace p;
  p.group = g;
  p.n = n;
  p.kclass = kc;
  p.k = kc == KClass::Rational ? k : Rational(0);
  p.lambda.assign(affine_dynkin(g).size(), LinK{0, 0});
  p.lambda[0].u = 1;
  return p;
}

// ---------------------------------------------------------------------------
// Hyperplanes

Hyperplane Hyperplane::E(long m, long N) {
  if (m < 2) throw InputError("E hyperplane needs m >= 2");
  if (gcd64(m, N) != 1) throw InputError("E hyperplane needs gcd(m, N) = 1");
  return {Kind::E, {}, m, N};
}

Hyperplane Hyperplane::H(RootVec alpha, long m, long N) {
  if (N < 0) throw InputError("H hyperplane needs N >= 0");
  return {Kind::H, std::move(alpha), m, N};
}

bool operator<(const Hyperplane& a, const Hyperplane& b) {
  if (a.kind != b.kind) return a.kind == Hyperplane::Kind::E;
  return std::tie(a.alpha, a.m, a.N) < std::tie(b.alpha, b.m, b.N);
}

std::string Hyperplane::to_string() const {
  if (kind == Kind::E) return "E[m=" + std::to_string(m) + ",N=" + std::to_string(N) + "]";
  std::string a = "(";
  for (std::size_t i = 0; i < alpha.size(); ++i) a += (i ? "," : "") + std::to_string(alpha[i]);
  return "H[alpha=" + a + "),m=" + std::to_string(m) + ",N=" + std::to_string(N) + "]";
}

std::vector<Hyperplane> singular_hyperplanes(const ParameterFace& p) {
  p.validate();
  std::vector<Hyperplane> out;
  if (p.kclass == KClass::Rational) {
    const long q = p.k.get_den().get_si();
    if (q >= 2 && q <= p.n) out.push_back(Hyperplane::E(q, -p.k.get_num().get_si()));
  }
  const RootSystem rs(p.diagram());
  const long mmax = p.n - 1;
  for (const auto& alpha : rs.roots()) {
    const LinK w = p.pairing(alpha);
    if (p.kclass == KClass::Irrational) {
      // (u + v k) + k m + N = 0 with k transcendental.
      if (!is_integer(w.v) || !is_integer(w.u)) continue;
      const long m = -w.v.get_num().get_si();
      const Rational N = -w.u;
      if (m < -mmax || m > mmax || N < 0) continue;
      out.push_back(Hyperplane::H(alpha, m, N.get_num().get_si()));
    } else {
      const Rational base = p.value(w);
      for (long m = -mmax; m <= mmax; ++m) {
        const Rational N = -(base + p.k * m);
        if (is_integer(N) && N >= 0) out.push_back(Hyperplane::H(alpha, m, N.get_num().get_si()));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool h_aspherical(long m, long N, long n) {
  if (N < 0) return false;
  // N + 1 - m/2 <= sqrt(n + m^2/4), squared when the left side is positive.
  if (2 * (N + 1) <= m) return true;
  return (N + 1) * (N + 1 - m) <= n;
}

bool e_aspherical(long m, long N) { return N >= 1 && N <= m - 1; }

AsphericalResult is_aspherical_predicted(const ParameterFace& p) {
  AsphericalResult res;
  for (const auto& h : singular_hyperplanes(p)) {
    const bool hit = h.kind == Hyperplane::Kind::E ? e_aspherical(h.m, h.N) : h_aspherical(h.m, h.N, p.n);
    if (hit) res.witnesses.push_back(h);
  }
  res.aspherical = !res.witnesses.empty();
  return res;
}

std::optional<Rectangle> rectangle_witness(long m, long N, long n) {
  if (N < 0 || n < 1) return std::nullopt;
  // b_+ = (m + sqrt(4n + m^2)) / 2, whose floor is floor((m + isqrt(4n+m^2)) / 2).
  const long t = isqrt64(4 * n + m * m);
  const long b = floor_div(BigInt(m + t), BigInt(2)).get_si();
  const long a = b - m;
  if (a < 1 || b < 1 || N > b - 1) return std::nullopt;
  return Rectangle{a, b};
}

// ---------------------------------------------------------------------------
// Cartan classification

namespace {

std::string classify_finite_connected(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 1) return "A1";
  std::vector<std::vector<std::size_t>> nb(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && a(i, j) != 0) nb[i].push_back(j);
  std::vector<std::size_t> branch;
  for (std::size_t i = 0; i < n; ++i) {
    if (nb[i].size() >= 4) throw UnsupportedRegime("Cartan matrix is not of ADE type");
    if (nb[i].size() == 3) branch.push_back(i);
  }
  if (branch.empty()) return "A" + std::to_string(n);
  if (branch.size() > 1) throw UnsupportedRegime("Cartan matrix is not of ADE type");
  std::vector<long> arms;
  for (std::size_t start : nb[branch[0]]) {
    long len = 0;
    std::size_t prev = branch[0], cur = start;
    while (true) {
      ++len;
      std::size_t next = n;
      for (std::size_t x : nb[cur])
        if (x != prev) next = x;
      if (next == n) break;
      prev = cur;
      cur = next;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(n);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return "E" + std::to_string(n);
  throw UnsupportedRegime("Cartan matrix is not of ADE type");
}

bool connected(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return false;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j)
      if (!seen[j] && a(i, j) != 0) {
        seen[j] = true;
        stack.push_back(j);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::vector<std::size_t> all_but(std::size_t n, std::size_t v) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i)
    if (i != v) idx.push_back(i);
  return idx;
}

}  // namespace

std::string classify_cartan(const IntMatrix& a, bool* affine) {
  if (!a.symmetric() || !connected(a)) throw UnsupportedRegime("Cartan matrix must be symmetric and connected");
  const RatMatrix q = to_rational(a);
  if (is_positive_definite(q)) {
    if (affine) *affine = false;
    return classify_finite_connected(a);
  }
  const std::size_t n = a.rows();
  if (n < 2 || rank(q) != n - 1) throw UnsupportedRegime("Cartan matrix is neither finite nor affine");
  // Kernel vector through any vertex whose complement is nonsingular.
  for (std::size_t v = 0; v < n; ++v) {
    const auto rest = all_but(n, v);
    const RatMatrix sub = q.principal(rest);
    if (!is_positive_definite(sub)) continue;
    RatMatrix rhs(rest.size(), 1);
    for (std::size_t i = 0; i < rest.size(); ++i) rhs(i, 0) = -q(rest[i], v);
    const RatMatrix x = invert(sub) * rhs;
    std::vector<Rational> ker(n);
    ker[v] = 1;
    for (std::size_t i = 0; i < rest.size(); ++i) ker[rest[i]] = x(i, 0);
    Rational lo = ker[0];
    for (const auto& k : ker) {
      if (k <= 0) throw UnsupportedRegime("Cartan matrix is neither finite nor affine");
      lo = std::min(lo, k);
    }
    for (std::size_t w = 0; w < n; ++w) {
      if (ker[w] != lo) continue;
      IntMatrix fin = a.principal(all_but(n, w));
      if (!connected(fin) || !is_positive_definite(to_rational(fin))) continue;
      if (affine) *affine = true;
      return classify_finite_connected(fin) + "^(1)";
    }
    break;
  }
  throw UnsupportedRegime("Cartan matrix is neither finite nor affine");
}

// ---------------------------------------------------------------------------
// Subalgebra closure

bool is_positive(const AffineRoot& a) {
  if (a.m != 0) return a.m > 0;
  for (long x : a.alpha)
    if (x != 0) return x > 0;
  return false;
}

namespace {

struct RootTables {
  std::vector<RootVec> roots;
  std::map<RootVec, int> index;
  std::vector<int> neg;
  std::vector<std::vector<int>> sum;
  std::vector<std::vector<long>> form;

  explicit RootTables(const RootSystem& rs) : roots(rs.roots()) {
    const int n = static_cast<int>(roots.size());
    for (int i = 0; i < n; ++i) index[roots[i]] = i;
    neg.resize(n);
    sum.assign(n, std::vector<int>(n, -1));
    form.assign(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) {
      RootVec m = roots[i];
      for (auto& x : m) x = -x;
      neg[i] = index.at(m);
      for (int j = 0; j < n; ++j) {
        form[i][j] = rs.form(roots[i], roots[j]);
        if (form[i][j] == -1) {
          RootVec s = roots[i];
          for (std::size_t t = 0; t < s.size(); ++t) s[t] += roots[j][t];
          sum[i][j] = index.at(s);
        }
      }
    }
  }
  bool positive(int i) const { return is_positive(AffineRoot{roots[i], 0}); }
  int pos_rep(int i) const { return positive(i) ? i : neg[i]; }
};

using Real = std::pair<int, long>;  // (finite root index, m)
using Imag = std::pair<int, long>;  // (positive finite root index, s): h_alpha t^s

struct Closure {
  std::set<Real> real;
  std::set<Imag> imag;
};

Closure close(const RootTables& t, const std::vector<AffineRoot>& gens, long window) {
  Closure c;
  std::vector<std::pair<bool, std::pair<int, long>>> work;  // (is_imag, item)
  auto add_real = [&](int i, long m) {
    if (m < -window || m > window) return;
    if (c.real.insert({i, m}).second) work.push_back({false, {i, m}});
  };
  auto add_imag = [&](int a, long s) {
    if (s == 0 || s < -2 * window || s > 2 * window) return;
    if (c.imag.insert({a, s}).second) work.push_back({true, {a, s}});
  };
  for (const auto& g : gens) {
    const int i = t.index.at(g.alpha);
    add_real(i, g.m);
    add_real(t.neg[i], -g.m);
  }
  while (!work.empty()) {
    const auto [is_imag, item] = work.back();
    work.pop_back();
    if (!is_imag) {
      const auto [i, m] = item;
      const std::vector<Real> snapshot(c.real.begin(), c.real.end());
      for (const auto& [j, mj] : snapshot) {
        if (t.sum[i][j] >= 0) add_real(t.sum[i][j], m + mj);
        if (j == t.neg[i]) add_imag(t.pos_rep(i), m + mj);
      }
      const std::vector<Imag> isnap(c.imag.begin(), c.imag.end());
      for (const auto& [a, s] : isnap)
        if (t.form[a][i] != 0) add_real(i, m + s);
    } else {
      const auto [a, s] = item;
      const std::vector<Real> snapshot(c.real.begin(), c.real.end());
      for (const auto& [j, mj] : snapshot)
        if (t.form[a][j] != 0) add_real(j, mj + s);
    }
  }
  return c;
}

std::set<Real> restrict(const std::set<Real>& s, long w) {
  std::set<Real> out;
  for (const auto& x : s)
    if (x.second >= -w && x.second <= w) out.insert(x);
  return out;
}

}  // namespace

SubalgebraDescriptor subalgebra_from_generators(const RootSystem& rs, const std::vector<AffineRoot>& generators,
                                                long window, std::optional<long> heisenberg_period) {
  SubalgebraDescriptor d;
  d.heisenberg_period = heisenberg_period;
  d.window = window;
  if (rs.rank() == 0 || generators.empty()) return d;
  const RootTables t(rs);
  const Closure c = close(t, generators, window);
  const Closure wider = close(t, generators, window + 1);
  if (restrict(c.real, window - 1) != restrict(wider.real, window - 1))
    throw WindowExhausted("inconclusive closure: root set not stable at window " + std::to_string(window));

  for (const auto& [i, m] : c.real) d.real_roots.push_back(AffineRoot{t.roots[i], m});
  std::sort(d.real_roots.begin(), d.real_roots.end());

  std::set<Real> pos;
  for (const auto& [i, m] : c.real)
    if (is_positive(AffineRoot{t.roots[i], m})) pos.insert({i, m});
  std::vector<Real> simple;
  for (const auto& [i, m] : pos) {
    bool decomposable = false;
    for (const auto& [j, mj] : pos) {
      const int k = t.sum[i][t.neg[j]];
      if (k >= 0 && pos.count({k, m - mj})) {
        decomposable = true;
        break;
      }
    }
    for (auto it = c.imag.begin(); !decomposable && it != c.imag.end(); ++it) {
      const auto [a, s] = *it;
      if (s > 0 && t.form[a][i] != 0 && pos.count({i, m - s})) decomposable = true;
    }
    if (!decomposable) simple.push_back({i, m});
  }
  for (const auto& [i, m] : simple) d.simple_system.push_back(AffineRoot{t.roots[i], m});
  std::sort(d.simple_system.begin(), d.simple_system.end());

  const std::size_t ns = d.simple_system.size();
  IntMatrix a(ns, ns);
  for (std::size_t i = 0; i < ns; ++i)
    for (std::size_t j = 0; j < ns; ++j) {
      a(i, j) = root_form(rs, d.simple_system[i], d.simple_system[j]);
      if (i != j && a(i, j) > 0) throw UnsupportedRegime("closure did not produce a simple system");
    }
  // Connected components of the simple system.
  std::vector<int> comp(ns, -1);
  int ncomp = 0;
  for (std::size_t s = 0; s < ns; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < ns; ++j)
        if (comp[j] < 0 && a(i, j) != 0) {
          comp[j] = ncomp;
          stack.push_back(j);
        }
    }
    ++ncomp;
  }
  for (int cidx = 0; cidx < ncomp; ++cidx) {
    SubalgebraComponent sc;
    for (std::size_t s = 0; s < ns; ++s)
      if (comp[s] == cidx) sc.simples.push_back(s);
    sc.type = classify_cartan(a.principal(sc.simples), &sc.affine);
    sc.rank = sc.simples.size() - (sc.affine ? 1 : 0);
    d.components.push_back(std::move(sc));
  }

  std::vector<RootVec> level0;
  for (const auto& r : d.real_roots)
    if (r.m == 0) level0.push_back(r.alpha);
  if (!level0.empty()) {
    RatMatrix mat(level0.size(), rs.rank());
    for (std::size_t i = 0; i < level0.size(); ++i)
      for (std::size_t j = 0; j < rs.rank(); ++j) mat(i, j) = Rational(level0[i][j]);
    d.a_double_prime_rank = rank(mat);
  }
  return d;
}

SubalgebraDescriptor subalgebra(const ParameterFace& p) {
  std::optional<long> period;
  std::set<AffineRoot> gens;  // merged over N
  for (const auto& h : singular_hyperplanes(p)) {
    if (h.kind == Hyperplane::Kind::E) {
      period = h.m;
      continue;
    }
    AffineRoot r{h.alpha, h.m};
    if (!is_positive(r)) {
      for (auto& x : r.alpha) x = -x;
      r.m = -r.m;
    }
    gens.insert(r);
  }
  const RootSystem rs(p.diagram());
  return subalgebra_from_generators(rs, std::vector<AffineRoot>(gens.begin(), gens.end()), 2L * p.n + 2, period);
}

}  // namespace kw
