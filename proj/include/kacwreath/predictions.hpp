#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kacwreath/multiplicity.hpp"

namespace kw {

struct GradedPrediction {
  std::string provenance;  // branching | closed-form | level-rank | diophantine
  std::map<long, BigInt> gr;
  std::optional<std::map<std::pair<long, long>, BigInt>> gr2;
  BigInt total() const;
  BigInt at(long i) const;
};

struct BranchingResult {
  SubalgebraDescriptor subalgebra;
  DecompositionReport report;
  GradedPrediction prediction;
};

/// Decompose V over a(lambda, k) and read off the graded dimensions. When a
/// Heisenberg factor is present the one-index map is the marginal i + j = s
/// of the two-index map.
BranchingResult branching_prediction(const ParameterFace& p, const WindowOptions& opt = {});

GradedPrediction predicted_gr(const ParameterFace& p, const WindowOptions& opt = {});
/// Requires a rational non-integral k.
GradedPrediction predicted_gr2(const ParameterFace& p, const WindowOptions& opt = {});
BigInt count_findim(const ParameterFace& p, const WindowOptions& opt = {});

/// Rank s of the integral root subsystem {alpha : (lambda, alpha) in Z} at an
/// integral k.
std::size_t integral_rank(const ParameterFace& p);
/// gr_i = p_s(n - i) p_{r+1-s}(i), for integral k.
GradedPrediction closed_form_integer_k(const ParameterFace& p);
/// Gamma = 1, k with denominator m: gr_{n-jm, j} = p(j) * #{partitions of n-jm with no part divisible by m}.
GradedPrediction closed_form_gamma1(long n, long m);

/// Nonnegative integer solutions of sum a_i (a_i + m_i) = n.
BigInt diophantine_count(const std::vector<long>& m, long n);

BigInt levelrank_irrational(long ell, long n);

/// Level-m dominant weights of affine sl_l trivial on the center.
std::vector<std::vector<long>> level_rank_weights(long ell, long m);
/// Sum over admissible nu of the [0, (n - nu^2/2)/m] weight-space dimension
/// of the level-m module L_nu, computed with a delta-depth budget.
BigInt levelrank_rational(long ell, long m, long n, std::optional<long> depth_budget = std::nullopt);

/// Poincare polynomial l + m(t - 1) as ascending coefficients [l - m, m].
std::vector<long> poincare_n1(const ParameterFace& p);
/// m as the rank of the span of the integral roots.
std::size_t integral_span_rank(const ParameterFace& p);
/// m as the rank of the normals of the singular hyperplanes through p at n = 1.
std::size_t hyperplane_normal_rank(const ParameterFace& p);

struct LatticeQuotient {
  std::vector<BigInt> invariant_factors;  // of the sublattice
  std::size_t free_rank = 0;              // of the quotient
  std::vector<BigInt> torsion;            // factors > 1
};
struct FiltrationLattices {
  LatticeQuotient F;      // chi_0 = chi_l (cyclic)
  LatticeQuotient boldF;  // chi_0 dropped
};
FiltrationLattices filtration_lattices_n1(long ell);

struct GramReport {
  IntMatrix N;
  IntMatrix C;
  RatMatrix C_inverse;
  std::vector<std::size_t> findim_indices;
  RatMatrix findim_block;
  bool positive_definite = false;
  std::optional<QPolynomial> q_det;
  std::optional<CyclotomicFactorization> q_det_factors;
  std::optional<bool> nondegenerate_off_roots_of_unity;
};

/// q-Cartan matrix: 1 + q^2 on the diagonal, -q on edges.
PolyMatrix q_cartan(const IntMatrix& adjacency);
GramReport gram_report(const IntMatrix& N, const std::vector<std::size_t>& findim_indices,
                       const std::optional<IntMatrix>& q_adjacency = std::nullopt);
/// Upper-triangular all-ones decomposition matrix of cyclic Gamma at n = 1.
IntMatrix cyclic_bgg_matrix(long ell);
/// Path adjacency of the finite A_{l-1} diagram.
IntMatrix path_adjacency(long ell);

}  // namespace kw
