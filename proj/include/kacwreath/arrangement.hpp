#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kacwreath/weights.hpp"

namespace kw {

/// u + v*k. With an irrational k this is zero only when u = v = 0.
struct LinK {
  Rational u;
  Rational v;
  friend bool operator==(const LinK&, const LinK&) = default;
};

enum class KClass { Rational, Irrational };

/// A point (rational k) or a generic face (irrational k) in (lambda, k)-space.
/// lambda(i) = (lambda, alpha_i) for i in I, each entry affine-linear in k.
struct ParameterFace {
  GammaDescriptor group;
  int n = 1;
  KClass kclass = KClass::Irrational;
  Rational k;  // meaningful when kclass == Rational
  std::vector<LinK> lambda;

  /// Checks n >= 1, the lambda length and (lambda, delta) = 1.
  void validate() const;
  AffineDynkin diagram() const { return affine_dynkin(group); }
  bool k_integer() const { return kclass == KClass::Rational && is_integer(k); }

  /// (lambda, alpha) for alpha in finite simple-root coordinates.
  LinK pairing(const RootVec& alpha) const;
  /// Same, evaluated at the rational k; requires kclass == Rational.
  Rational value(const LinK& x) const { return x.u + x.v * k; }

  /// lambda = omega_0 with the given k.
  static ParameterFace omega0_face(const GammaDescriptor& g, int n, KClass kc, const Rational& k = 0);
};

struct Hyperplane {
  enum class Kind { E, H };
  Kind kind = Kind::H;
  RootVec alpha;  // empty for E
  long m = 0;
  long N = 0;

  static Hyperplane E(long m, long N);
  static Hyperplane H(RootVec alpha, long m, long N);
  std::string to_string() const;
  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
  friend bool operator<(const Hyperplane& a, const Hyperplane& b);
};

/// Every E_{m,N} (2 <= m <= n, gcd(m,N) = 1) and H_{alpha,m,N} (|m| <= n-1,
/// N >= 0) through the face. Both signs of alpha are listed. Sorted.
std::vector<Hyperplane> singular_hyperplanes(const ParameterFace& p);

/// H-asphericity bound: 0 <= N <= sqrt(n + m^2/4) + m/2 - 1, exactly.
bool h_aspherical(long m, long N, long n);
/// E-asphericity: 1 <= N <= m - 1.
bool e_aspherical(long m, long N);

struct AsphericalResult {
  bool aspherical = false;
  std::vector<Hyperplane> witnesses;
};
AsphericalResult is_aspherical_predicted(const ParameterFace& p);

struct Rectangle {
  long a = 0;  // width
  long b = 0;  // height
  friend bool operator==(const Rectangle&, const Rectangle&) = default;
};
/// b = floor(sqrt(n + m^2/4) + m/2), a = b - m, returned iff N <= b - 1.
std::optional<Rectangle> rectangle_witness(long m, long N, long n);

struct SubalgebraComponent {
  std::string type;  // "A1", "D4", "A2^(1)", ...
  std::size_t rank = 0;
  bool affine = false;
  std::vector<std::size_t> simples;  // indices into simple_system
};

struct SubalgebraDescriptor {
  std::optional<long> heisenberg_period;
  std::vector<AffineRoot> real_roots;     // closed, within |m| <= window
  std::vector<AffineRoot> simple_system;  // sorted
  std::vector<SubalgebraComponent> components;
  std::size_t a_double_prime_rank = 0;
  long window = 0;
};

/// The subalgebra a(lambda, k) built from the hyperplanes through p.
SubalgebraDescriptor subalgebra(const ParameterFace& p);

/// Closure of +-generators under root addition in |m| <= window, with the
/// stability check one step past the window. Throws WindowExhausted when the
/// closure is not stable.
SubalgebraDescriptor subalgebra_from_generators(const RootSystem& rs, const std::vector<AffineRoot>& generators,
                                                long window, std::optional<long> heisenberg_period);

/// Positive real root: m > 0, or m = 0 and alpha positive.
bool is_positive(const AffineRoot& a);

/// Label of a connected simply-laced Cartan matrix of finite or affine type;
/// throws UnsupportedRegime otherwise.
std::string classify_cartan(const IntMatrix& a, bool* affine = nullptr);

}  // namespace kw
