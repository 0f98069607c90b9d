#pragma once

#include <map>
#include <vector>

#include "kacwreath/exactmat.hpp"

namespace kw {

/// Irreducible highest-weight module L(Lambda) of the Kac-Moody algebra with a
/// symmetric Cartan matrix A whose connected components are of finite or
/// affine type. Weights are written Lambda - sum c_i s_i with c in Z_{>=0}^t.
///
/// labels[i] = (Lambda, s_i) must be nonnegative integers. grades[i] >= 0 is
/// the delta-degree of s_i; weights with grades.c > depth_budget cannot be
/// queried (the root list is cut there).
class KMModule {
 public:
  KMModule(const IntMatrix& a, std::vector<long> labels, std::vector<long> grades, long depth_budget);

  std::size_t rank() const { return labels_.size(); }
  long depth_budget() const { return budget_; }
  long grade(const std::vector<long>& c) const;

  /// dim L(Lambda)[Lambda - sum c_i s_i]. Throws WindowExhausted when the
  /// grade of c exceeds the depth budget.
  BigInt mult(const std::vector<long>& c);

  /// Every weight with nonzero multiplicity and grade <= max_grade.
  std::map<std::vector<long>, BigInt> weights_to_grade(long max_grade);

  struct PositiveRoot {
    std::vector<long> coords;
    long multiplicity;
  };
  const std::vector<PositiveRoot>& positive_roots() const { return roots_; }

 private:
  BigInt compute_dominant(const std::vector<long>& c);

  std::size_t t_;
  std::vector<long> a_;  // flat Cartan
  std::vector<long> labels_;
  std::vector<long> grades_;
  long budget_;
  std::vector<PositiveRoot> roots_;
  std::vector<std::vector<long>> root_ab_;  // A b
  std::vector<long> root_norm_;             // b^T A b
  std::vector<long> root_label_;            // labels . b
  std::map<std::vector<long>, BigInt> memo_;
};

}  // namespace kw
