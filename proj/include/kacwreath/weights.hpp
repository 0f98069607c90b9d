#pragma once

#include <optional>
#include <vector>

#include "kacwreath/mckay.hpp"

namespace kw {

/// Integer vector in simple-root coordinates (finite roots, lattice points).
using RootVec = std::vector<long>;

/// Finite root datum of the diagram with vertex 0 removed. The inverse Cartan
/// matrix is cached at construction.
class RootSystem {
 public:
  explicit RootSystem(const AffineDynkin& d);

  const AffineDynkin& diagram() const { return diagram_; }
  std::size_t rank() const { return cartan_.rows(); }
  const IntMatrix& cartan() const { return cartan_; }
  const RatMatrix& inverse_cartan() const { return inv_; }

  /// All roots, sorted (positive roots first by height, then negatives).
  const std::vector<RootVec>& roots() const { return roots_; }
  const std::vector<RootVec>& positive_roots() const { return positive_; }
  /// Highest root theta = sum_{i>=1} marks_i alpha_i.
  RootVec highest_root() const;

  long form(const RootVec& a, const RootVec& b) const;  // a^T C b
  long norm_sq(const RootVec& a) const { return form(a, a); }
  bool is_root(const RootVec& a) const;
  /// Fundamental coordinates (a, alpha_i) of a root-lattice vector.
  std::vector<long> to_fundamental(const RootVec& a) const;

 private:
  AffineDynkin diagram_;
  IntMatrix cartan_;
  RatMatrix inv_;
  std::vector<long> c_;  // cartan_ as flat longs
  std::vector<RootVec> roots_;
  std::vector<RootVec> positive_;
};

/// Closure of the simple roots of a symmetric generalized Cartan matrix of
/// finite type under simple reflections. Throws InputError if the closure
/// exceeds max_roots (not of finite type).
std::vector<RootVec> reflection_closure(const IntMatrix& cartan, std::size_t max_roots = 100000);

struct FiniteWeight {
  std::vector<Rational> fundamental;  // (w, alpha_i), i = 1..r
  std::optional<RootVec> root;        // simple-root coordinates when in Q

  static FiniteWeight from_root(const RootSystem& rs, const RootVec& a);
  static FiniteWeight from_fundamental(std::vector<Rational> f);
};

/// level * Lambda_0 + finite + delta_coeff * delta.
struct AffineWeight {
  Rational level;
  FiniteWeight finite;
  Rational delta_coeff;
};

/// alpha + m delta.
struct AffineRoot {
  RootVec alpha;
  long m = 0;
  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
  friend auto operator<=>(const AffineRoot&, const AffineRoot&) = default;
};

AffineWeight omega0(const RootSystem& rs);
AffineWeight delta(const RootSystem& rs);
AffineWeight as_weight(const RootSystem& rs, const AffineRoot& a);

Rational finite_inner(const RootSystem& rs, const FiniteWeight& a, const FiniteWeight& b);
Rational inner_product(const RootSystem& rs, const AffineWeight& a, const AffineWeight& b);
Rational norm_sq(const RootSystem& rs, const AffineWeight& mu);
/// (mu, alpha + m delta) = (finite part, alpha) + m * level.
Rational pair_with_root(const RootSystem& rs, const AffineWeight& mu, const AffineRoot& rho);
long root_form(const RootSystem& rs, const AffineRoot& a, const AffineRoot& b);

std::vector<RootVec> all_finite_roots(const AffineDynkin& d);

/// True iff every pairing (mu, s) is a nonnegative integer. Throws InputError
/// if two distinct simples pair positively.
bool is_dominant_for(const RootSystem& rs, const AffineWeight& mu, const std::vector<AffineRoot>& simples);

}  // namespace kw
