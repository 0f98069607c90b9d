// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails or overruns its time limit.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "kacwreath/cli.hpp"
#include "kacwreath/partitions.hpp"
#include "kacwreath/predictions.hpp"

using namespace kw;

namespace {

struct Check {
  bool ok = true;
  std::string first_failure;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) first_failure = what;
    ok = ok && cond;
  }
};

ParameterFace make_face(const GammaDescriptor& g, int n, std::optional<Rational> k, std::vector<LinK> lambda) {
  ParameterFace p;
  p.group = g;
  p.n = n;
  p.kclass = k ? KClass::Rational : KClass::Irrational;
  if (k) p.k = *k;
  p.lambda = std::move(lambda);
  p.validate();
  return p;
}

std::vector<LinK> omega0_lambda(std::size_t size) {
  std::vector<LinK> l(size, LinK{0, 0});
  l[0] = LinK{1, 0};
  return l;
}

std::string face_tag(const ParameterFace& p) {
  std::ostringstream os;
  os << p.group.name() << " n=" << p.n << " k=" << (p.kclass == KClass::Irrational ? "irr" : to_string(p.k));
  return os.str();
}

// ---------------------------------------------------------------------------

Check criterion1() {
  Check c;
  for (long l = 2; l <= 6; ++l) {
    std::vector<std::size_t> findim;
    for (long i = 1; i < l; ++i) findim.push_back(static_cast<std::size_t>(i));
    const GramReport g = gram_report(cyclic_bgg_matrix(l), findim);
    // Row i of C^{-1} is L_i = 2P_i - P_{i-1} - P_{i+1}, truncated at the ends,
    // with the last diagonal entry 1.
    RatMatrix expect(l, l);
    for (long i = 0; i < l; ++i) {
      expect(i, i) = i == l - 1 ? 1 : 2;
      if (i > 0) expect(i, i - 1) = -1;
      if (i + 1 < l) expect(i, i + 1) = -1;
    }
    c.expect(g.C_inverse == expect, "C^-1 mismatch at l=" + std::to_string(l));
    c.expect(g.positive_definite, "not positive definite at l=" + std::to_string(l));
  }
  return c;
}

Check criterion2() {
  Check c;
  for (long l = 2; l <= 8; ++l) {
    const FiltrationLattices f = filtration_lattices_n1(l);
    c.expect(f.F.free_rank == 1 && f.F.torsion == std::vector<BigInt>{l}, "F quotient at l=" + std::to_string(l));
    c.expect(f.boldF.free_rank == 1 && f.boldF.torsion.empty(), "boldF quotient at l=" + std::to_string(l));
  }
  return c;
}

Check criterion3() {
  Check c;
  std::mt19937 rng(20240601);
  for (int l = 2; l <= 5; ++l) {
    const auto g = GammaDescriptor::cyclic(l);
    const ParameterFace w0 = make_face(g, 1, std::nullopt, omega0_lambda(l));
    c.expect(poincare_n1(w0) == std::vector<long>{1, l - 1}, "omega0 polynomial at l=" + std::to_string(l));
    std::uniform_int_distribution<int> coin(0, 2), num(-3, 3);
    for (int trial = 0; trial < 5; ++trial) {
      // Each lambda(i) is an integer, a half-integer or an irrational-in-k value.
      std::vector<LinK> lam(l);
      Rational su = 0, sv = 0;
      for (int i = 1; i < l; ++i) {
        const int kind = coin(rng);
        lam[i] = kind == 0 ? LinK{num(rng), 0}
                 : kind == 1 ? LinK{make_rational(2 * num(rng) + 1, 2), 0}
                             : LinK{0, make_rational(1, 2 + i)};
        su += lam[i].u;
        sv += lam[i].v;
      }
      lam[0] = LinK{1 - su, -sv};
      const ParameterFace p = make_face(g, 1, std::nullopt, lam);
      const std::size_t m1 = integral_span_rank(p);
      const std::size_t m2 = hyperplane_normal_rank(p);
      const long m = static_cast<long>(m1);
      c.expect(m1 == m2, "span rank vs hyperplane count at l=" + std::to_string(l));
      c.expect(poincare_n1(p) == std::vector<long>{l - m, m}, "polynomial at l=" + std::to_string(l));
    }
  }
  return c;
}

std::vector<ParameterFace> criterion4_faces() {
  std::vector<ParameterFace> faces;
  const Rational third = make_rational(1, 3), fifth = make_rational(1, 5), half = make_rational(1, 2);
  for (int n = 1; n <= 5; ++n) {
    const auto triv = GammaDescriptor::trivial();
    faces.push_back(make_face(triv, n, std::nullopt, {LinK{1, 0}}));
    faces.push_back(make_face(triv, n, Rational(0), {LinK{1, 0}}));
    faces.push_back(make_face(triv, n, Rational(1), {LinK{1, 0}}));

    const auto z2 = GammaDescriptor::cyclic(2);
    faces.push_back(make_face(z2, n, std::nullopt, {LinK{1, -third}, LinK{0, third}}));
    faces.push_back(make_face(z2, n, std::nullopt, omega0_lambda(2)));
    faces.push_back(make_face(z2, n, Rational(0), omega0_lambda(2)));
    faces.push_back(make_face(z2, n, Rational(1), {LinK{half, 0}, LinK{half, 0}}));

    const auto z3 = GammaDescriptor::cyclic(3);
    faces.push_back(make_face(z3, n, std::nullopt, {LinK{1, -third - fifth}, LinK{0, third}, LinK{0, fifth}}));
    faces.push_back(make_face(z3, n, std::nullopt, {LinK{1, -third}, LinK{0, 0}, LinK{0, third}}));
    faces.push_back(make_face(z3, n, Rational(0), omega0_lambda(3)));
    faces.push_back(make_face(z3, n, Rational(1), {LinK{half, 0}, LinK{half, 0}, LinK{0, 0}}));
  }
  return faces;
}

std::vector<BranchingResult> g_criterion4_results;

Check criterion4() {
  Check c;
  for (const auto& p : criterion4_faces()) {
    BranchingResult br = branching_prediction(p);
    const long r = static_cast<long>(p.diagram().finite_rank());
    c.expect(br.report.residual_ok, "residual at " + face_tag(p));
    c.expect(br.prediction.total() == multipartition_count(r + 1, p.n), "sum rule at " + face_tag(p));
    g_criterion4_results.push_back(std::move(br));
  }
  return c;
}

Check criterion5() {
  Check c;
  c.expect(!g_criterion4_results.empty(), "criterion 4 produced no decompositions");
  std::size_t rows = 0;
  for (const auto& br : g_criterion4_results)
    for (const auto& row : br.report.rows)
      if (row.mu_norm_sq == 0) {
        ++rows;
        c.expect(row.hom_mult == 1, "extremal row with multiplicity " + row.hom_mult.get_str());
      }
  c.expect(rows > 0, "no extremal rows seen");
  return c;
}

Check criterion6() {
  Check c;
  const auto z2 = GammaDescriptor::cyclic(2), z4 = GammaDescriptor::cyclic(4);
  const Rational half = make_rational(1, 2);
  const std::vector<std::vector<long>> mvecs{{0}, {1}, {0, 0}, {1, 0}, {2, 1}};
  for (const auto& m : mvecs)
    for (int n = 1; n <= 8; ++n) {
      ParameterFace p;
      if (m.size() == 1) {
        p = make_face(z2, n, std::nullopt, {LinK{1, m[0]}, LinK{0, -m[0]}});
      } else {
        p = make_face(z4, n, std::nullopt,
                      {LinK{half, m[0] + m[1]}, LinK{0, -m[0]}, LinK{half, 0}, LinK{0, -m[1]}});
      }
      const auto a = subalgebra(p);
      for (const auto& comp : a.components) c.expect(comp.type == "A1", "non-A1 component at " + face_tag(p));
      c.expect(count_findim(p) == diophantine_count(m, n), "Diophantine mismatch at " + face_tag(p));
    }
  return c;
}

Check criterion7() {
  Check c;
  for (int l = 2; l <= 3; ++l)
    for (int n = 1; n <= 6; ++n) {
      const ParameterFace p = make_face(GammaDescriptor::cyclic(l), n, std::nullopt, omega0_lambda(l));
      const BigInt lr = levelrank_irrational(l, n);
      c.expect(count_findim(p) == lr, "level-rank mismatch at " + face_tag(p));
      if (l == 2) c.expect(lr == ((n == 1 || n == 4) ? 1 : 0), "perfect-square pattern at n=" + std::to_string(n));
    }
  return c;
}

Check criterion8() {
  Check c;
  std::vector<GammaDescriptor> groups;
  for (int l = 2; l <= 6; ++l) groups.push_back(GammaDescriptor::cyclic(l));
  for (int d = 2; d <= 4; ++d) groups.push_back(GammaDescriptor::binary_dihedral(d));
  groups.push_back(GammaDescriptor::binary_tetrahedral());
  groups.push_back(GammaDescriptor::binary_octahedral());
  groups.push_back(GammaDescriptor::binary_icosahedral());
  for (const auto& g : groups) {
    const AffineDynkin d = affine_dynkin(g);
    const long r = static_cast<long>(d.finite_rank());
    std::vector<long> labels(d.size(), 0);
    labels[0] = 1;
    for (long n = 0; n <= 6; ++n) {
      std::vector<long> cc(d.marks.begin(), d.marks.end());
      for (auto& x : cc) x *= n;
      const BigInt a = freudenthal_affine(d, labels, cc, 6);
      const BigInt b = freudenthal_affine(d, labels, cc, 8);
      c.expect(a == p_colored(r, n), g.name() + " at n=" + std::to_string(n));
      c.expect(a == b, g.name() + " depends on the depth budget at n=" + std::to_string(n));
    }
  }
  return c;
}

Check criterion9() {
  Check c;
  for (long m = 2; m <= 4; ++m)
    for (int n = 1; n <= 20; ++n) {
      const ParameterFace p = make_face(GammaDescriptor::trivial(), n, make_rational(-1, m), {LinK{1, 0}});
      const GradedPrediction g = predicted_gr2(p);
      BigInt total = 0;
      for (const auto& [ij, v] : *g.gr2) total += v;
      c.expect(total == p_colored(1, n), "total at " + face_tag(p));
      c.expect(!g.gr2->count({0, 0}) || g.gr2->at({0, 0}) == 0, "(0,0) entry at " + face_tag(p));
      c.expect(m_regular_count(n, m) == count_parts_mod(n, m, PartsMode::NonDivisible), "Glaisher at " + face_tag(p));
      BigInt wilcox = 0;
      for (long j = 0; j * m <= n; ++j) wilcox += p_colored(1, j) * m_regular_count(n - j * m, m);
      c.expect(wilcox == p_colored(1, n), "pair-count identity at " + face_tag(p));
    }
  return c;
}

Check criterion10() {
  Check c;
  auto reconstruct = [](const CyclotomicFactorization& f) {
    QPolynomial prod = f.remainder;
    for (auto [d, e] : f.factors)
      for (unsigned i = 0; i < e; ++i) prod = prod * cyclotomic(d);
    return prod;
  };
  auto finite_adjacency = [](const GammaDescriptor& g) {
    const IntMatrix fc = affine_dynkin(g).finite_cartan();
    IntMatrix adj(fc.rows(), fc.cols());
    for (std::size_t i = 0; i < fc.rows(); ++i)
      for (std::size_t j = 0; j < fc.cols(); ++j) adj(i, j) = i == j ? BigInt(0) : BigInt(-fc(i, j));
    return adj;
  };
  for (long l = 2; l <= 8; ++l) {
    const QPolynomial det = det_poly(q_cartan(path_adjacency(l)));
    std::vector<BigInt> expect(2 * l - 1, 0);
    for (long i = 0; i < l; ++i) expect[2 * i] = 1;
    c.expect(det == QPolynomial(expect), "det A_q at l=" + std::to_string(l));
    const auto f = factor_cyclotomic(det);
    c.expect(reconstruct(f) == det, "reconstruction at l=" + std::to_string(l));
    c.expect(f.remainder.degree() == 0, "remainder not constant at l=" + std::to_string(l));
  }
  for (auto g : {GammaDescriptor::binary_dihedral(2), GammaDescriptor::binary_tetrahedral()}) {
    const GramReport rep = gram_report(IntMatrix::identity(1), {}, finite_adjacency(g));
    c.expect(reconstruct(*rep.q_det_factors) == *rep.q_det, "reconstruction for " + g.name());
    c.expect(*rep.nondegenerate_off_roots_of_unity, "verdict for " + g.name());
  }
  return c;
}

Check criterion11() {
  Check c;
  for (long n = 1; n <= 10; ++n)
    for (long m = -(n - 1); m <= n - 1; ++m) {
      // floor(sqrt(n + m^2/4) + m/2 - 1) = floor((isqrt(4n + m^2) + m) / 2) - 1.
      const long top = floor_div(BigInt(isqrt64(4 * n + m * m) + m), 2).get_si() - 1;
      for (long N = 0; N <= 3 * n; ++N) {
        c.expect(h_aspherical(m, N, n) == (N <= top), "admissible N at n=" + std::to_string(n));
        std::optional<Rectangle> brute;
        for (long b = 0; b <= n + std::abs(m) + 1; ++b) {
          const long a = b - m;
          if (a >= 0 && a * b <= n && (!brute || b > brute->b)) brute = Rectangle{a, b};
        }
        if (brute && N > brute->b - 1) brute.reset();
        c.expect(rectangle_witness(m, N, n) == brute, "rectangle at n=" + std::to_string(n));
      }
    }
  // n = 1: aspherical exactly where some (lambda, alpha) vanishes.
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> num(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    const int l = 2 + trial % 3;
    std::vector<LinK> lam(l);
    Rational su = 0;
    for (int i = 1; i < l; ++i) {
      lam[i] = LinK{make_rational(num(rng), 1 + trial % 2), 0};
      su += lam[i].u;
    }
    lam[0] = LinK{1 - su, 0};
    const ParameterFace p = make_face(GammaDescriptor::cyclic(l), 1, make_rational(1, 3), lam);
    const RootSystem rs(p.diagram());
    bool zero = false;
    for (const auto& a : rs.roots()) zero = zero || p.value(p.pairing(a)) == 0;
    c.expect(is_aspherical_predicted(p).aspherical == zero, "n=1 locus at " + face_tag(p));
  }
  return c;
}

std::string run_binary(const std::string& args) {
  const std::string cmd = std::string(KW_CLI_PATH) + " " + args + " 2>&1";
  std::string out;
  if (FILE* f = popen(cmd.c_str(), "r")) {
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), f)) > 0) out.append(buf.data(), got);
    out += "\nstatus=" + std::to_string(pclose(f));
  }
  return out;
}

Check criterion12() {
  Check c;
  auto q = [](const std::string& s) { return "'" + s + "'"; };
  const std::string z2 = R"({"group":"cyclic:2","n":3,"k":{"rational":"1/2"},"lambda":[["1","0"],["0","0"]]})";
  const std::string z3 = R"({"group":"cyclic:3","n":3,"k":"irrational","lambda":[["1","0"],["0","0"],["0","0"]]})";
  const std::string tr = R"({"group":"trivial","n":4,"k":{"rational":"-1/3"},"lambda":[["1","0"]]})";
  const std::vector<std::string> commands{
      "hyperplanes --inline " + q(z2),
      "hyperplanes --inline " + q(z3) + " --format tsv",
      "predict --inline " + q(z2),
      "predict --inline " + q(z3),
      "predict --inline " + q(tr) + " --format tsv",
      "gram --ell 4",
      "snf --group binary_dihedral:3",
      "dump-dynkin --group binary_octahedral",
      "crosscheck --depth 3",
  };
  for (const auto& cmd : commands) {
    const std::string a = run_binary(cmd);
    const std::string b = run_binary(cmd);
    c.expect(a == b, "two runs differ: " + cmd);
    if (cmd.rfind("predict", 0) == 0 || cmd.rfind("crosscheck", 0) == 0) {
      const std::string t1 = run_binary(cmd + " --threads 1");
      const std::string t4 = run_binary(cmd + " --threads 4");
      c.expect(t1 == a && t4 == a, "thread count changes output: " + cmd);
    }
    c.expect(a.find("status=0") != std::string::npos, "non-zero exit: " + cmd);
  }
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    double limit_s;  // 0 = no limit
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "cyclic n=1 Gram calculus", 1, criterion1},
      {2, "filtration lattices via SNF", 1, criterion2},
      {3, "Poincare polynomials at n=1", 1, criterion3},
      {4, "sum rule and residuals", 10, criterion4},
      {5, "extremal rows have multiplicity 1", 0, criterion5},
      {6, "Diophantine two-path", 10, criterion6},
      {7, "level-rank two-path (irrational k)", 30, criterion7},
      {8, "affine Freudenthal vs Frenkel-Kac", 60, criterion8},
      {9, "Gamma=1 rational k", 5, criterion9},
      {10, "q-Cartan nondegeneracy", 5, criterion10},
      {11, "aspherical arithmetic", 5, criterion11},
      {12, "CLI determinism", 0, criterion12},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Check res;
    try {
      res = cr.run();
    } catch (const std::exception& e) {
      res.ok = false;
      res.first_failure = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (cr.limit_s > 0 && secs > cr.limit_s) res.expect(false, "time limit exceeded");
    std::printf("[%s] criterion %2d: %s (%.3f s)%s%s\n", res.ok ? "PASS" : "FAIL", cr.id, cr.title.c_str(), secs,
                res.ok ? "" : ": ", res.ok ? "" : res.first_failure.c_str());
    failures += res.ok ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
