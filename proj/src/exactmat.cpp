#include "kacwreath/exactmat.hpp"

#include <algorithm>
#include <sstream>

namespace kw {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

// ---------------------------------------------------------------------------
// QPolynomial

QPolynomial::QPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPolynomial QPolynomial::constant(const BigInt& c) { return QPolynomial({c}); }

QPolynomial QPolynomial::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return QPolynomial(std::move(v));
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::operator-() const {
  std::vector<BigInt> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
  return QPolynomial(std::move(c));
}

QPolynomial operator-(const QPolynomial& a, const QPolynomial& b) { return a + (-b); }

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPolynomial(std::move(c));
}

std::pair<QPolynomial, QPolynomial> QPolynomial::divmod(const QPolynomial& divisor) const {
  if (divisor.is_zero()) throw ArithmeticError("polynomial division by zero");
  std::vector<BigInt> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size();
  if (rem.size() < dd) return {QPolynomial(), *this};
  std::vector<BigInt> quot(rem.size() - dd + 1);
  const BigInt& lead = divisor.lead();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigInt& top = rem[k + dd - 1];
    if (top == 0) continue;
    if (top % lead != 0) {
      // Quotient would leave Z[q]; report everything from here as remainder.
      std::vector<BigInt> head(rem.begin(), rem.end());
      QPolynomial r(std::move(head));
      std::vector<BigInt> q(quot);
      return {QPolynomial(std::move(q)), r};
    }
    BigInt f = top / lead;
    quot[k] = f;
    for (std::size_t j = 0; j < dd; ++j) rem[k + j] -= f * divisor.coeffs_[j];
  }
  return {QPolynomial(std::move(quot)), QPolynomial(std::move(rem))};
}

QPolynomial QPolynomial::exact_div(const QPolynomial& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw ArithmeticError("inexact polynomial division");
  return q;
}

std::string QPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << "q";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Smith normal form

SmithResult smith_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<BigInt> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Pivot: smallest nonzero |entry| in the trailing block.
    bool found = false;
    std::size_t pi = t, pj = t;
    BigInt best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (a(i, j) == 0) continue;
        BigInt v = abs(a(i, j));
        if (!found || v < best) {
          best = v;
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    for (std::size_t j = 0; j < cols; ++j) std::swap(a(t, j), a(pi, j));
    for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, t), a(i, pj));

    bool clean = false;
    while (!clean) {
      clean = true;
      // Column t below the pivot.
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        BigInt q = floor_div(a(i, t), a(t, t));
        for (std::size_t j = t; j < cols; ++j) a(i, j) -= q * a(t, j);
        if (a(i, t) != 0) {
          for (std::size_t j = 0; j < cols; ++j) std::swap(a(t, j), a(i, j));
          clean = false;
        }
      }
      // Row t right of the pivot.
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        BigInt q = floor_div(a(t, j), a(t, t));
        for (std::size_t i = t; i < rows; ++i) a(i, j) -= q * a(i, t);
        if (a(t, j) != 0) {
          for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, t), a(i, j));
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility: the pivot must divide the whole trailing block.
      for (std::size_t i = t + 1; i < rows && clean; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a(i, j) % a(t, t) != 0) {
            for (std::size_t k = t; k < cols; ++k) a(t, k) += a(i, k);
            clean = false;
            break;
          }
        }
    }
    diag.push_back(abs(a(t, t)));
    ++t;
  }
  SmithResult res;
  res.invariant_factors = std::move(diag);
  res.rank = res.invariant_factors.size();
  return res;
}

// ---------------------------------------------------------------------------
// Determinants

namespace {

template <class T, class DivFn>
T bareiss(Matrix<T> a, const T& one, DivFn exact_div) {
  if (!a.square()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return one;
  T prev = one;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == T()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == T()) ++swap_row;
      if (swap_row == n) return T();
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T num = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        a(i, j) = exact_div(num, prev);
      }
      a(i, k) = T();
    }
    prev = a(k, k);
  }
  T d = a(n - 1, n - 1);
  if (negate) d = T() - d;
  return d;
}

}  // namespace

QPolynomial det_poly(const PolyMatrix& m) {
  return bareiss<QPolynomial>(m, QPolynomial::constant(1),
                              [](const QPolynomial& a, const QPolynomial& b) { return a.exact_div(b); });
}

BigInt det_int(const IntMatrix& m) {
  return bareiss<BigInt>(m, BigInt(1), [](const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  });
}

// ---------------------------------------------------------------------------
// Cyclotomic factorization

QPolynomial cyclotomic(unsigned d) {
  if (d == 0) throw InputError("cyclotomic index must be positive");
  // Phi_d = (q^d - 1) / prod_{e | d, e < d} Phi_e
  QPolynomial p = QPolynomial::monomial(1, d) - QPolynomial::constant(1);
  for (unsigned e = 1; e < d; ++e)
    if (d % e == 0) p = p.exact_div(cyclotomic(e));
  return p;
}

CyclotomicFactorization factor_cyclotomic(const QPolynomial& p, unsigned dmax) {
  if (p.is_zero()) throw InputError("cannot factor the zero polynomial");
  if (dmax == 0) dmax = static_cast<unsigned>(std::max(2 * p.degree(), 1));
  CyclotomicFactorization out;
  QPolynomial rest = p;
  for (unsigned d = 1; d <= dmax; ++d) {
    const QPolynomial phi = cyclotomic(d);
    unsigned mult = 0;
    while (rest.degree() >= phi.degree()) {
      auto [q, r] = rest.divmod(phi);
      if (!r.is_zero()) break;
      rest = q;
      ++mult;
    }
    if (mult > 0) out.factors.emplace_back(d, mult);
  }
  out.remainder = rest;
  return out;
}

// ---------------------------------------------------------------------------
// Rational linear algebra

bool is_positive_definite(const RatMatrix& m) {
  if (!m.symmetric()) throw InputError("positive-definiteness test needs a symmetric matrix");
  // Leading principal minors via fraction-free elimination without pivoting:
  // the k-th pivot is minor_k / minor_{k-1}, so all minors are positive iff
  // all pivots are.
  RatMatrix a = m;
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return true;
}

RatMatrix invert(const RatMatrix& m) {
  if (!m.square()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) throw ArithmeticError("singular matrix");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(col, j), a(piv, j));
      std::swap(inv(col, j), inv(piv, j));
    }
    Rational p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      Rational f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(piv, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, col) == 0) continue;
      Rational f = a(i, col) / a(r, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace kw
