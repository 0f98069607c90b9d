#include "kacwreath/predictions.hpp"

#include <functional>
#include <numeric>

#include "kacwreath/partitions.hpp"

namespace kw {

BigInt GradedPrediction::total() const {
  BigInt s = 0;
  for (const auto& [_, v] : gr) s += v;
  return s;
}

BigInt GradedPrediction::at(long i) const {
  auto it = gr.find(i);
  return it == gr.end() ? BigInt(0) : it->second;
}

namespace {

bool rational_nonintegral(const ParameterFace& p) { return p.kclass == KClass::Rational && !is_integer(p.k); }

}  // namespace

BranchingResult branching_prediction(const ParameterFace& p, const WindowOptions& opt) {
  p.validate();
  BranchingResult out;
  out.subalgebra = subalgebra(p);
  const ModuleWindow window = build_window(p.group, p.n, opt);
  out.report = decompose(window, out.subalgebra, p.n);

  GradedPrediction& pred = out.prediction;
  pred.provenance = "branching";
  std::map<std::pair<long, long>, BigInt> two;
  for (long i = 0; i <= p.n; ++i) pred.gr[i] = 0;
  for (const auto& row : out.report.rows) {
    if (row.weight_mult_at_target == 0) continue;
    const Rational half = -row.mu_norm_sq / 2;
    const long i = half.get_num().get_si();
    for (const auto& [s, v] : row.degree_profile) {
      if (v == 0) continue;
      two[{i, s}] += row.hom_mult * v;
      pred.gr[i + s] += row.hom_mult * v;
    }
  }
  if (rational_nonintegral(p)) pred.gr2 = std::move(two);
  return out;
}

GradedPrediction predicted_gr(const ParameterFace& p, const WindowOptions& opt) {
  BranchingResult br = branching_prediction(p, opt);
  if (!br.report.residual_ok) {
    // One retry with the beta bound doubled before giving up.
    WindowOptions wider = opt;
    wider.beta_norm_bound = 2 * opt.beta_norm_bound.value_or(4L * p.n);
    br = branching_prediction(p, wider);
    if (!br.report.residual_ok) {
      std::string msg = "branching residual did not vanish";
      if (!br.report.diagnostics.empty()) msg += ": " + br.report.diagnostics.front();
      throw WindowExhausted(msg);
    }
  }
  return br.prediction;
}

GradedPrediction predicted_gr2(const ParameterFace& p, const WindowOptions& opt) {
  if (!rational_nonintegral(p))
    throw UnsupportedRegime("two-index filtration needs a rational non-integral k");
  return predicted_gr(p, opt);
}

BigInt count_findim(const ParameterFace& p, const WindowOptions& opt) { return predicted_gr(p, opt).at(0); }

// ---------------------------------------------------------------------------
// Closed forms

namespace {

std::size_t span_rank(const std::vector<RootVec>& vs, std::size_t dim) {
  if (vs.empty()) return 0;
  RatMatrix m(vs.size(), dim);
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = Rational(vs[i][j]);
  return rank(m);
}

bool integral_pairing(const ParameterFace& p, const RootVec& alpha) {
  const LinK w = p.pairing(alpha);
  if (p.kclass == KClass::Irrational) return w.v == 0 && is_integer(w.u);
  return is_integer(p.value(w));
}

}  // namespace

std::size_t integral_rank(const ParameterFace& p) { return integral_span_rank(p); }

GradedPrediction closed_form_integer_k(const ParameterFace& p) {
  p.validate();
  if (!p.k_integer()) throw UnsupportedRegime("closed form needs an integral k");
  const long r = static_cast<long>(p.diagram().finite_rank());
  const long s = static_cast<long>(integral_rank(p));
  GradedPrediction g;
  g.provenance = "closed-form";
  for (long i = 0; i <= p.n; ++i) g.gr[i] = p_colored(s, p.n - i) * p_colored(r + 1 - s, i);
  return g;
}

GradedPrediction closed_form_gamma1(long n, long m) {
  if (m < 2) throw InputError("denominator must be at least 2");
  GradedPrediction g;
  g.provenance = "closed-form";
  std::map<std::pair<long, long>, BigInt> two;
  for (long i = 0; i <= n; ++i) g.gr[i] = 0;
  for (long j = 0; j * m <= n; ++j) {
    const BigInt v = p_colored(1, j) * count_parts_mod(n - j * m, m, PartsMode::NonDivisible);
    if (v == 0) continue;
    two[{n - j * m, j}] = v;
    g.gr[n - j * m + j] += v;
  }
  g.gr2 = std::move(two);
  return g;
}

BigInt diophantine_count(const std::vector<long>& m, long n) {
  const std::size_t l = m.size();
  // Smallest value of a(a + m_i) over a >= 0, and suffix sums of those minima.
  std::vector<long> mins(l), suffix(l + 1, 0);
  for (std::size_t i = 0; i < l; ++i) {
    long best = 0;
    for (long a = 0; a <= std::max(0L, -m[i]); ++a) best = std::min(best, a * (a + m[i]));
    mins[i] = best;
  }
  for (std::size_t i = l; i-- > 0;) suffix[i] = suffix[i + 1] + mins[i];
  std::function<BigInt(std::size_t, long)> rec = [&](std::size_t i, long rem) -> BigInt {
    if (i == l) return rem == 0 ? 1 : 0;
    BigInt total = 0;
    const long cap = rem - suffix[i + 1];
    for (long a = 0;; ++a) {
      const long v = a * (a + m[i]);
      if (v > cap) {
        if (2 * a + m[i] >= 0) break;  // v is increasing from here on
        continue;
      }
      total += rec(i + 1, rem - v);
    }
    return total;
  };
  return n < suffix[0] ? BigInt(0) : rec(0, n);
}

BigInt levelrank_irrational(long ell, long n) {
  if (ell < 2 || n < 0) throw InputError("level-rank count needs l >= 2 and n >= 0");
  BigInt total = 0;
  for (const auto& nu : traceless_dominants(ell, 2 * n)) total += kostka(nu, std::vector<long>(ell, 0));
  return total;
}

std::vector<std::vector<long>> level_rank_weights(long ell, long m) {
  if (ell < 2 || m < 1) throw InputError("level-rank weights need l >= 2 and m >= 1");
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  std::function<void(long)> rec = [&](long left) {
    if (static_cast<long>(cur.size()) == ell - 1) {
      cur.push_back(left);
      long twist = 0;
      for (long i = 0; i < ell; ++i) twist += i * cur[i];
      if (twist % ell == 0) out.push_back(cur);
      cur.pop_back();
      return;
    }
    for (long c = left; c >= 0; --c) {
      cur.push_back(c);
      rec(left - c);
      cur.pop_back();
    }
  };
  rec(m);
  return out;
}

BigInt levelrank_rational(long ell, long m, long n, std::optional<long> depth_budget) {
  if (m < 2) throw InputError("level-rank count needs m >= 2");
  const long budget = depth_budget.value_or(n + 2);
  const AffineDynkin d = affine_dynkin(GammaDescriptor::cyclic(static_cast<int>(ell)));
  const RootSystem rs(d);
  const RatMatrix& inv = rs.inverse_cartan();
  const std::size_t r = rs.rank();
  BigInt total = 0;
  for (const auto& c : level_rank_weights(ell, m)) {
    // Root coordinates b = C^{-1} nubar and nubar^2 = nubar . b.
    std::vector<long> b(r);
    Rational nu2 = 0;
    for (std::size_t i = 0; i < r; ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < r; ++j) s += inv(i, j) * Rational(c[j + 1]);
      if (!is_integer(s)) throw ArithmeticError("level-rank weight outside the root lattice");
      b[i] = s.get_num().get_si();
      nu2 += Rational(c[i + 1]) * s;
    }
    const Rational x = Rational(n) - nu2 / 2;
    if (x < 0 || !is_integer(x / m)) continue;
    const long grade = BigInt(x / m).get_si();
    if (grade > budget) throw WindowExhausted("level-rank depth budget " + std::to_string(budget) + " exhausted");
    std::vector<long> cc(r + 1);
    cc[0] = grade;
    bool ok = true;
    for (std::size_t i = 0; i < r; ++i) {
      cc[i + 1] = grade + b[i];
      ok = ok && cc[i + 1] >= 0;
    }
    if (ok) total += freudenthal_affine(d, c, cc, budget);
  }
  return total;
}

// ---------------------------------------------------------------------------
// n = 1 filtrations

std::size_t integral_span_rank(const ParameterFace& p) {
  p.validate();
  const RootSystem rs(p.diagram());
  std::vector<RootVec> integral;
  for (const auto& a : rs.roots())
    if (integral_pairing(p, a)) integral.push_back(a);
  return span_rank(integral, rs.rank());
}

std::size_t hyperplane_normal_rank(const ParameterFace& p) {
  ParameterFace q = p;
  q.n = 1;
  std::vector<RootVec> normals;
  for (const auto& h : singular_hyperplanes(q))
    if (h.kind == Hyperplane::Kind::H) normals.push_back(h.alpha);
  return span_rank(normals, q.diagram().finite_rank());
}

std::vector<long> poincare_n1(const ParameterFace& p) {
  if (!p.group.is_cyclic()) throw UnsupportedRegime("Poincare polynomial at n = 1 is implemented for cyclic groups");
  const long ell = p.group.param;
  const long m = static_cast<long>(integral_span_rank(p));
  return {ell - m, m};
}

namespace {

LatticeQuotient quotient(const IntMatrix& rows) {
  LatticeQuotient q;
  const SmithResult s = smith_normal_form(rows);
  q.invariant_factors = s.invariant_factors;
  q.free_rank = rows.cols() - s.rank;
  for (const auto& f : s.invariant_factors)
    if (f > 1) q.torsion.push_back(f);
  return q;
}

}  // namespace

FiltrationLattices filtration_lattices_n1(long ell) {
  if (ell < 2) throw InputError("filtration lattices need l >= 2");
  // Coordinates chi_1 .. chi_l; row i is 2 chi_i - chi_{i-1} - chi_{i+1}.
  IntMatrix f(ell - 1, ell), bold(ell - 1, ell);
  for (long i = 1; i <= ell - 1; ++i) {
    const long row = i - 1;
    f(row, i - 1) += 2;
    bold(row, i - 1) += 2;
    f(row, i) -= 1;  // chi_{i+1}
    bold(row, i) -= 1;
    if (i - 1 >= 1) {
      f(row, i - 2) -= 1;
      bold(row, i - 2) -= 1;
    } else {
      f(row, ell - 1) -= 1;  // chi_0 = chi_l
    }
  }
  return {quotient(f), quotient(bold)};
}

// ---------------------------------------------------------------------------
// Gram calculus

PolyMatrix q_cartan(const IntMatrix& adjacency) {
  const std::size_t n = adjacency.rows();
  PolyMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j)
        a(i, j) = QPolynomial({1, 0, 1});
      else if (adjacency(i, j) != 0)
        a(i, j) = QPolynomial::monomial(-adjacency(i, j), 1);
    }
  return a;
}

GramReport gram_report(const IntMatrix& N, const std::vector<std::size_t>& findim_indices,
                       const std::optional<IntMatrix>& q_adjacency) {
  GramReport g;
  g.N = N;
  g.C = N.transpose() * N;
  if (rank(to_rational(N)) != N.cols()) throw InputError("decomposition matrix is rank-deficient");
  g.C_inverse = invert(to_rational(g.C));
  for (std::size_t i : findim_indices)
    if (i >= g.C.rows()) throw InputError("finite-dimensional index out of range");
  g.findim_indices = findim_indices;
  g.findim_block = g.C_inverse.principal(findim_indices);
  g.positive_definite = findim_indices.empty() ? is_positive_definite(g.C_inverse)
                                               : is_positive_definite(g.findim_block);
  if (q_adjacency) {
    g.q_det = det_poly(q_cartan(*q_adjacency));
    g.q_det_factors = factor_cyclotomic(*g.q_det);
    g.nondegenerate_off_roots_of_unity = g.q_det_factors->remainder.degree() == 0;
  }
  return g;
}

IntMatrix cyclic_bgg_matrix(long ell) {
  IntMatrix n(ell, ell);
  for (long i = 0; i < ell; ++i)
    for (long j = i; j < ell; ++j) n(i, j) = 1;
  return n;
}

IntMatrix path_adjacency(long ell) {
  IntMatrix a(ell - 1, ell - 1);
  for (long i = 0; i + 1 < ell - 1; ++i) a(i, i + 1) = a(i + 1, i) = 1;
  return a;
}

}  // namespace kw
