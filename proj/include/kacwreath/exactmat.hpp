#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "kacwreath/errors.hpp"
#include "kacwreath/numeric.hpp"

namespace kw {

/// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw InputError("ragged matrix literal");
      for (const auto& x : row) data_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  /// Principal submatrix on the given index list.
  Matrix principal(const std::vector<std::size_t>& idx) const {
    Matrix s(idx.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) s(a, b) = (*this)(idx.at(a), idx.at(b));
    return s;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix product dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);

/// Integer polynomial in q, ascending coefficients, no trailing zeros.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<BigInt> coeffs);
  static QPolynomial constant(const BigInt& c);
  static QPolynomial monomial(const BigInt& c, std::size_t degree);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& lead() const { return coeffs_.back(); }
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

  friend QPolynomial operator+(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator-(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  QPolynomial operator-() const;
  friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Long division; the quotient must have integer coefficients.
  std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& divisor) const;
  /// Exact quotient; throws ArithmeticError on a nonzero remainder.
  QPolynomial exact_div(const QPolynomial& divisor) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

using PolyMatrix = Matrix<QPolynomial>;

struct SmithResult {
  std::vector<BigInt> invariant_factors;  // nonzero, d1 | d2 | ...
  std::size_t rank = 0;
};

/// Smith normal form by unimodular row/column operations, pivoting on the
/// smallest nonzero absolute value.
SmithResult smith_normal_form(const IntMatrix& m);

/// Fraction-free (Bareiss) determinant over Z[q].
QPolynomial det_poly(const PolyMatrix& m);

/// Determinant over Z by Bareiss elimination.
BigInt det_int(const IntMatrix& m);

/// The d-th cyclotomic polynomial.
QPolynomial cyclotomic(unsigned d);

struct CyclotomicFactorization {
  std::vector<std::pair<unsigned, unsigned>> factors;  // (d, multiplicity), d ascending
  QPolynomial remainder;
};

/// Trial division of p by Phi_1 ... Phi_dmax. dmax = 0 selects 2 * deg(p).
CyclotomicFactorization factor_cyclotomic(const QPolynomial& p, unsigned dmax = 0);

/// Leading principal minors test; throws InputError if m is not symmetric.
bool is_positive_definite(const RatMatrix& m);

/// Gauss-Jordan inverse; throws ArithmeticError for singular input.
RatMatrix invert(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

}  // namespace kw
