#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "kacwreath/partitions.hpp"
#include "kacwreath/predictions.hpp"

using namespace kw;

namespace {

ParameterFace omega0_face(const GammaDescriptor& g, int n, std::optional<Rational> k) {
  return ParameterFace::omega0_face(g, n, k ? KClass::Rational : KClass::Irrational, k.value_or(0));
}

ParameterFace face(const GammaDescriptor& g, int n, std::optional<Rational> k, std::vector<LinK> lambda) {
  ParameterFace p = omega0_face(g, n, k);
  p.lambda = std::move(lambda);
  p.validate();
  return p;
}

long diophantine_brute(const std::vector<long>& m, long n) {
  long count = 0;
  std::vector<long> a(m.size(), 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long acc) {
    if (i == m.size()) {
      if (acc == n) ++count;
      return;
    }
    for (long x = 0; x <= n + std::abs(m[i]) + 2; ++x) rec(i + 1, acc + x * (x + m[i]));
  };
  rec(0, 0);
  return count;
}

std::map<long, BigInt> gr_of(std::initializer_list<long> v) {
  std::map<long, BigInt> m;
  long i = 0;
  for (long x : v) m[i++] = x;
  return m;
}

}  // namespace

TEST_CASE("Graded predictions: worked cases") {
  const auto z2 = GammaDescriptor::cyclic(2);
  CHECK(predicted_gr(omega0_face(z2, 2, Rational(0))).gr == gr_of({2, 1, 2}));
  for (int l = 2; l <= 5; ++l) {
    const auto g = predicted_gr(omega0_face(GammaDescriptor::cyclic(l), 1, std::nullopt));
    CHECK(g.at(0) == l - 1);
    CHECK(g.at(1) == 1);
  }
  for (int n = 1; n <= 6; ++n) {
    const auto g = predicted_gr(omega0_face(GammaDescriptor::trivial(), n, std::nullopt));
    CHECK(g.at(n) == p_colored(1, n));
    CHECK(g.total() == p_colored(1, n));
    CHECK(count_findim(omega0_face(GammaDescriptor::trivial(), n, make_rational(-1, 2))) == 0);
  }
  CHECK(count_findim(omega0_face(z2, 4, std::nullopt)) == 1);
  CHECK_THROWS_AS(predicted_gr2(omega0_face(z2, 2, Rational(1))), UnsupportedRegime);
}

TEST_CASE("Gamma = 1 closed form") {
  const auto g = closed_form_gamma1(3, 2);
  using K = std::pair<long, long>;
  CHECK(*g.gr2 == std::map<K, BigInt>{{{3, 0}, 2}, {{1, 1}, 1}});
  CHECK(g.total() == 3);
  const auto h = closed_form_gamma1(3, 5);
  CHECK(*h.gr2 == std::map<K, BigInt>{{{3, 0}, 3}});
  for (long m = 2; m <= 4; ++m)
    for (long n = 1; n <= 6; ++n) {
      const auto b = predicted_gr2(omega0_face(GammaDescriptor::trivial(), static_cast<int>(n), make_rational(-1, m)));
      CHECK(*b.gr2 == *closed_form_gamma1(n, m).gr2);
    }
  CHECK_THROWS_AS(closed_form_gamma1(3, 1), InputError);
}

TEST_CASE("Integer k closed form") {
  // s = r + 1 at lambda = omega_0, and s < r + 1 on a tilted face.
  for (int l = 2; l <= 3; ++l)
    for (int n = 1; n <= 5; ++n)
      for (long k : {0L, 1L, -2L}) {
        const ParameterFace p = omega0_face(GammaDescriptor::cyclic(l), n, Rational(k));
        CHECK(integral_rank(p) == static_cast<std::size_t>(l - 1));
        CHECK(predicted_gr(p).gr == closed_form_integer_k(p).gr);
      }
  const Rational h = make_rational(1, 2);
  for (int n = 1; n <= 4; ++n) {
    const ParameterFace p = face(GammaDescriptor::cyclic(3), n, Rational(1), {LinK{h, 0}, LinK{h, 0}, LinK{0, 0}});
    CHECK(integral_rank(p) == 1);
    CHECK(predicted_gr(p).gr == closed_form_integer_k(p).gr);
  }
  CHECK_THROWS_AS(closed_form_integer_k(omega0_face(GammaDescriptor::cyclic(2), 2, h)), UnsupportedRegime);
}

TEST_CASE("Diophantine counts") {
  CHECK(diophantine_count({0}, 4) == 1);
  CHECK(diophantine_count({0, 0}, 1) == 2);
  CHECK(diophantine_count({1}, 2) == 1);
  CHECK(diophantine_count({}, 0) == 1);
  for (const auto& m : std::vector<std::vector<long>>{{0}, {1}, {-1}, {2, 1}, {0, 0}, {1, 0}, {-2, 3}, {0, 1, 2}})
    for (long n = 0; n <= 10; ++n) CHECK(diophantine_count(m, n) == diophantine_brute(m, n));
}

TEST_CASE("Level-rank counts") {
  CHECK(levelrank_irrational(2, 4) == 1);
  CHECK(levelrank_irrational(3, 3) == 2);
  CHECK(levelrank_irrational(2, 3) == 0);
  for (long n = 1; n <= 12; ++n) {
    const long s = static_cast<long>(std::sqrt(static_cast<double>(n)));
    CHECK(levelrank_irrational(2, n) == (s * s == n ? 1 : 0));
  }
  for (long l = 2; l <= 4; ++l) CHECK(levelrank_irrational(l, 1) == l - 1);
  using V = std::vector<std::vector<long>>;
  CHECK(level_rank_weights(2, 2) == V{{2, 0}, {0, 2}});
  CHECK(level_rank_weights(3, 3).size() == 4);
  for (long l = 2; l <= 3; ++l)
    for (long m = 2; m <= 3; ++m) CHECK(levelrank_rational(l, m, 0) == 1);
  // Agreement with the branching engine away from n = m.
  for (int l = 2; l <= 3; ++l)
    for (long m = 2; m <= 3; ++m)
      for (int n = 1; n <= 4; ++n) {
        if (n == m) continue;
        const ParameterFace p = omega0_face(GammaDescriptor::cyclic(l), n, make_rational(1, m));
        CHECK(levelrank_rational(l, m, n) == count_findim(p));
      }
}

TEST_CASE("Marginals and total mass") {
  for (int l = 2; l <= 3; ++l)
    for (int n = 1; n <= 4; ++n)
      for (Rational k : {make_rational(1, 2), make_rational(-1, 3)}) {
        const auto g = predicted_gr2(omega0_face(GammaDescriptor::cyclic(l), n, k));
        std::map<long, BigInt> marg;
        for (long i = 0; i <= n; ++i) marg[i] = 0;
        for (const auto& [ij, v] : *g.gr2) marg[ij.first + ij.second] += v;
        CHECK(marg == g.gr);
        CHECK(g.total() == multipartition_count(l, n));
      }
}

TEST_CASE("Poincare polynomials at n = 1") {
  for (int l = 2; l <= 5; ++l) {
    const ParameterFace p = omega0_face(GammaDescriptor::cyclic(l), 1, std::nullopt);
    CHECK(poincare_n1(p) == std::vector<long>{1, l - 1});
  }
  const Rational t = make_rational(1, 3);
  const ParameterFace generic =
      face(GammaDescriptor::cyclic(3), 1, std::nullopt, {LinK{1, -2 * t}, LinK{0, t}, LinK{0, t}});
  CHECK(poincare_n1(generic) == std::vector<long>{3, 0});
  const ParameterFace one = face(GammaDescriptor::cyclic(3), 1, std::nullopt, {LinK{1, -t}, LinK{0, 0}, LinK{0, t}});
  CHECK(poincare_n1(one) == std::vector<long>{2, 1});
  CHECK(integral_span_rank(one) == hyperplane_normal_rank(one));
  CHECK_THROWS_AS(poincare_n1(omega0_face(GammaDescriptor::binary_dihedral(2), 1, std::nullopt)), UnsupportedRegime);
}

TEST_CASE("Filtration lattices") {
  for (long l = 2; l <= 8; ++l) {
    const auto f = filtration_lattices_n1(l);
    CHECK(f.F.free_rank == 1);
    CHECK(f.F.torsion == std::vector<BigInt>{l});
    CHECK(f.boldF.free_rank == 1);
    CHECK(f.boldF.torsion.empty());
  }
  const auto f3 = filtration_lattices_n1(3);
  CHECK(f3.F.invariant_factors == std::vector<BigInt>{1, 3});
  CHECK(f3.boldF.invariant_factors == std::vector<BigInt>{1, 1});
}

TEST_CASE("Gram reports") {
  const GramReport g = gram_report(cyclic_bgg_matrix(3), {1, 2}, path_adjacency(3));
  CHECK(g.C == IntMatrix{{1, 1, 1}, {1, 2, 2}, {1, 2, 3}});
  CHECK(g.C_inverse == RatMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, 1}});
  CHECK(g.positive_definite);
  CHECK(*g.q_det == QPolynomial({1, 0, 1, 0, 1}));
  CHECK(g.q_det_factors->factors == std::vector<std::pair<unsigned, unsigned>>{{3, 1}, {6, 1}});
  CHECK(*g.nondegenerate_off_roots_of_unity);
  CHECK(g.findim_block == RatMatrix{{2, -1}, {-1, 1}});

  const GramReport id = gram_report(IntMatrix::identity(3), {});
  CHECK(id.C == IntMatrix::identity(3));
  CHECK(id.positive_definite);
  CHECK_FALSE(id.q_det.has_value());
  CHECK_THROWS_AS(gram_report(IntMatrix{{1, 1}, {1, 1}}, {}), InputError);
}
