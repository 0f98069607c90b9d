#include "kacwreath/numeric.hpp"

#include <cctype>

#include "kacwreath/errors.hpp"

namespace kw {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ArithmeticError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) {
  return make_rational(BigInt(num), BigInt(den));
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) {
    throw InputError("malformed rational \"" + std::string(whole) + "\"");
  }
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw InputError("malformed rational \"" + std::string(whole) +
                       "\" (expected p or p/q)");
    }
  }
  BigInt value(std::string(text.substr(i)), 10);
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  BigInt num = parse_integer(text.substr(0, slash), text);
  BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw InputError("zero denominator in \"" + std::string(text) + "\"");
  return make_rational(num, den);
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt isqrt(const BigInt& x) {
  if (x < 0) throw ArithmeticError("isqrt of a negative number");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

std::int64_t isqrt64(std::int64_t x) {
  if (x < 0) throw ArithmeticError("isqrt of a negative number");
  return isqrt(BigInt(static_cast<long>(x))).get_si();
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace kw
