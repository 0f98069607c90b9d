#include "kacwreath/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "kacwreath/errors.hpp"

namespace kw {

PartitionCounter& partition_counter() {
  static PartitionCounter counter;
  return counter;
}

BigInt PartitionCounter::colored(long r, const Rational& n) {
  if (!is_integer(n) || n < 0) return 0;
  return colored(r, n.get_num().get_si());
}

BigInt PartitionCounter::colored(long r, long n) {
  if (r < 0) throw InputError("number of colors must be nonnegative");
  if (n < 0) return 0;
  if (r == 0) return n == 0 ? 1 : 0;
  std::lock_guard<std::mutex> lock(mu_);
  while (static_cast<long>(sigma_.size()) <= n) {
    const long k = static_cast<long>(sigma_.size());
    BigInt s = 0;
    for (long d = 1; d <= k; ++d)
      if (k % d == 0) s += d;
    sigma_.push_back(s);
  }
  auto& t = colored_[r];
  if (t.empty()) t.push_back(1);
  // n p_r(n) = r sum_{k=1}^n sigma(k) p_r(n-k)
  while (static_cast<long>(t.size()) <= n) {
    const long m = static_cast<long>(t.size());
    BigInt acc = 0;
    for (long k = 1; k <= m; ++k) acc += sigma_[k] * t[m - k];
    acc *= r;
    BigInt q;
    mpz_divexact_ui(q.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(m));
    t.push_back(q);
  }
  return t[n];
}

BigInt PartitionCounter::parts_mod(long n, long m, PartsMode mode) {
  if (m < 2) throw InputError("modulus must be at least 2");
  if (n < 0) return 0;
  if (mode == PartsMode::Divisible) return n % m == 0 ? colored(1, n / m) : BigInt(0);
  std::lock_guard<std::mutex> lock(mu_);
  auto& t = nondivisible_[m];
  if (static_cast<long>(t.size()) <= n) {
    // Rebuild: coin-change over admissible parts up to n.
    std::vector<BigInt> dp(n + 1);
    dp[0] = 1;
    for (long part = 1; part <= n; ++part) {
      if (part % m == 0) continue;
      for (long s = part; s <= n; ++s) dp[s] += dp[s - part];
    }
    t = std::move(dp);
  }
  return t[n];
}

BigInt p_colored(long r, const Rational& n) { return partition_counter().colored(r, n); }
BigInt p_colored(long r, long n) { return partition_counter().colored(r, n); }
BigInt count_parts_mod(long n, long m, PartsMode mode) { return partition_counter().parts_mod(n, m, mode); }

BigInt m_regular_count(long n, long m) {
  if (m < 2) throw InputError("modulus must be at least 2");
  if (n < 0) return 0;
  std::vector<BigInt> dp(n + 1);
  dp[0] = 1;
  for (long part = 1; part <= n; ++part) {
    std::vector<BigInt> next(n + 1);
    for (long s = 0; s <= n; ++s) {
      if (dp[s] == 0) continue;
      for (long k = 0; k < m && s + k * part <= n; ++k) next[s + k * part] += dp[s];
    }
    dp = std::move(next);
  }
  return dp[n];
}

BigInt multipartition_count(long components, long n) {
  if (components < 1) throw InputError("a multipartition needs at least one component");
  if (n < 0) return 0;
  std::vector<BigInt> p(n + 1);
  for (long k = 0; k <= n; ++k) p[k] = p_colored(1, k);
  std::vector<BigInt> acc = p;
  for (long c = 1; c < components; ++c) {
    std::vector<BigInt> next(n + 1);
    for (long a = 0; a <= n; ++a)
      for (long b = 0; a + b <= n; ++b) next[a + b] += acc[a] * p[b];
    acc = std::move(next);
  }
  return acc[n];
}

// ---------------------------------------------------------------------------
// Kostka numbers

namespace {

// Number of ways to fill the letters v..l-1 into shape / inner as a sequence
// of horizontal strips with the prescribed sizes.
BigInt count_strips(const std::vector<long>& shape, std::vector<long>& inner, const std::vector<long>& content,
                    std::size_t v, std::map<std::pair<std::size_t, std::vector<long>>, BigInt>& memo) {
  if (v == content.size()) return inner == shape ? BigInt(1) : BigInt(0);
  auto key = std::make_pair(v, inner);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  BigInt total = 0;
  const std::size_t rows = shape.size();
  std::vector<long> next = inner;
  // Choose how many boxes go in each row: row i may grow up to
  // min(shape[i], inner[i-1]) so the strip stays horizontal.
  std::function<void(std::size_t, long)> place = [&](std::size_t i, long left) {
    if (i == rows) {
      if (left == 0) total += count_strips(shape, next, content, v + 1, memo);
      return;
    }
    const long cap = std::min(shape[i], i == 0 ? shape[0] : inner[i - 1]);
    for (long grow = 0; inner[i] + grow <= cap && grow <= left; ++grow) {
      next[i] = inner[i] + grow;
      place(i + 1, left - grow);
    }
    next[i] = inner[i];
  };
  place(0, content[v]);
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

BigInt kostka(const std::vector<long>& shape, const std::vector<long>& content) {
  for (std::size_t i = 1; i < shape.size(); ++i)
    if (shape[i] > shape[i - 1]) throw InputError("shape must be weakly decreasing");
  if (shape.size() != content.size()) throw InputError("shape and content lengths differ");
  const long s_shape = std::accumulate(shape.begin(), shape.end(), 0L);
  const long s_content = std::accumulate(content.begin(), content.end(), 0L);
  if (s_shape != s_content) throw InputError("shape and content have different sizes");
  if (shape.empty()) return 1;
  const long shift = std::max(0L, -shape.back());
  std::vector<long> sh = shape, ct = content;
  for (auto& x : sh) x += shift;
  for (auto& x : ct) {
    x += shift;
    if (x < 0) return 0;
  }
  std::vector<long> inner(sh.size(), 0);
  std::map<std::pair<std::size_t, std::vector<long>>, BigInt> memo;
  return count_strips(sh, inner, ct, 0, memo);
}

std::vector<std::vector<long>> traceless_dominants(long ell, long norm_target) {
  if (ell < 1) throw InputError("length must be positive");
  std::vector<std::vector<long>> out;
  if (norm_target < 0) return out;
  const long bound = isqrt64(norm_target);
  std::vector<long> cur;
  std::function<void(long, long, long)> rec = [&](long maxv, long sum, long sq) {
    const long pos = static_cast<long>(cur.size());
    if (pos == ell) {
      if (sum == 0 && sq == norm_target) out.push_back(cur);
      return;
    }
    const long left = ell - pos;
    for (long v = maxv; v >= -bound; --v) {
      // Entries still to come are at most v, so the total can rise by at
      // most (left-1)*v.
      if (sum + v + (left - 1) * v < 0) break;
      if (sq + v * v > norm_target) continue;
      cur.push_back(v);
      rec(v, sum + v, sq + v * v);
      cur.pop_back();
    }
  };
  rec(bound, 0, 0);
  return out;
}

std::vector<Partition> partitions_of(long n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(long, long)> rec = [&](long left, long maxp) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (long p = std::min(left, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace kw
