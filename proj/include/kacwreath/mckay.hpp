#pragma once

#include <string>
#include <vector>

#include "kacwreath/exactmat.hpp"

namespace kw {

enum class GroupKind {
  Trivial,
  Cyclic,
  BinaryDihedral,
  BinaryTetrahedral,
  BinaryOctahedral,
  BinaryIcosahedral,
};

/// A finite subgroup of SL2(C) up to conjugacy.
struct GammaDescriptor {
  GroupKind kind = GroupKind::Trivial;
  int param = 0;  // l for cyclic, d for binary dihedral, unused otherwise
  int r = 0;      // number of nontrivial conjugacy classes
  long order = 1;

  static GammaDescriptor trivial();
  static GammaDescriptor cyclic(int ell);
  static GammaDescriptor binary_dihedral(int d);
  static GammaDescriptor binary_tetrahedral();
  static GammaDescriptor binary_octahedral();
  static GammaDescriptor binary_icosahedral();

  /// "trivial", "cyclic:3", "binary_dihedral:2", "binary_icosahedral", ...
  static GammaDescriptor parse(const std::string& name);
  std::string name() const;

  bool is_cyclic() const { return kind == GroupKind::Cyclic; }
  friend bool operator==(const GammaDescriptor&, const GammaDescriptor&) = default;
};

/// Affine Dynkin diagram attached to Gamma by McKay. Vertex 0 is the extending
/// vertex; vertices 1..r form the finite diagram.
///
/// Orderings: cyclic(l) goes around the cycle 0,1,...,l-1. Binary dihedral,
/// E6 and E7 use Bourbaki's extended numbering. E8 is the chain 0-1-...-7 with
/// vertex 8 attached to vertex 5.
///
/// For cyclic(2) the two vertices are joined by a double edge; the adjacency
/// matrix stores 0 there and the Cartan matrix carries the -2 explicitly.
struct AffineDynkin {
  std::string type;  // "A2^(1)", "E8^(1)", "trivial"
  IntMatrix adjacency;
  IntMatrix cartan;
  std::vector<long> marks;

  std::size_t size() const { return marks.size(); }
  std::size_t finite_rank() const { return marks.size() - 1; }
  /// Cartan matrix with vertex 0 deleted.
  IntMatrix finite_cartan() const;
};

AffineDynkin affine_dynkin(const GammaDescriptor& g);

/// Element of Q[x]/(x^l - 1), x standing for a primitive l-th root of unity.
/// Equality and canonical form are taken after reducing modulo the l-th
/// cyclotomic polynomial, i.e. as numbers in Q(zeta_l).
class Cyclotomic {
 public:
  Cyclotomic() = default;
  explicit Cyclotomic(int ell);
  Cyclotomic(int ell, std::vector<Rational> coeffs);
  static Cyclotomic rational(int ell, const Rational& q);

  int ell() const { return ell_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational& operator[](std::size_t i) { return coeffs_.at(i); }

  /// Coefficients of the representative of degree < phi(l).
  std::vector<Rational> canonical() const;
  bool is_rational() const;
  /// Value when is_rational(); throws ArithmeticError otherwise.
  Rational to_rational() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  std::string to_string() const;

 private:
  int ell_ = 1;
  std::vector<Rational> coeffs_;
};

/// Class function on the cyclic group Z_l: entries c_j = c(gamma^j).
using CyclicClassFunction = std::vector<Cyclotomic>;

/// lambda(i) = (1/l) sum_j zeta^{ij} c_j.
std::vector<Cyclotomic> lambda_from_c(const GammaDescriptor& g, const CyclicClassFunction& c);
/// Inverse transform: c_j = sum_i zeta^{-ij} lambda(i).
CyclicClassFunction c_from_lambda(const GammaDescriptor& g, const std::vector<Cyclotomic>& lambda);

/// c_0 = sum_i marks_i lambda(i).
Rational c0_from_lambda(const AffineDynkin& d, const std::vector<Rational>& lambda);

/// Invariant factors > 1 of the cokernel of the finite Cartan matrix.
std::vector<BigInt> center_group(const GammaDescriptor& g);

}  // namespace kw
