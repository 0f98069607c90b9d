#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "kacwreath/numeric.hpp"

namespace kw {

/// Weakly decreasing positive parts.
using Partition = std::vector<long>;

enum class PartsMode { Divisible, NonDivisible };

/// Memoized partition counts. Tables only grow; every method is safe to call
/// from several threads.
class PartitionCounter {
 public:
  /// r-colored partitions of n; 0 for negative or non-integral n.
  BigInt colored(long r, const Rational& n);
  BigInt colored(long r, long n);
  BigInt parts_mod(long n, long m, PartsMode mode);

 private:
  std::mutex mu_;
  std::map<long, std::vector<BigInt>> colored_;      // r -> table
  std::map<long, std::vector<BigInt>> nondivisible_;  // m -> table
  std::vector<BigInt> sigma_;                         // divisor sums, index 0 unused
};

PartitionCounter& partition_counter();

BigInt p_colored(long r, const Rational& n);
BigInt p_colored(long r, long n);
BigInt count_parts_mod(long n, long m, PartsMode mode);
/// Partitions of n in which no part occurs m or more times.
BigInt m_regular_count(long n, long m);
/// Multipartitions of n with the given number of components, by convolution
/// of ordinary partition counts.
BigInt multipartition_count(long components, long n);

/// Weight multiplicity of the gl_l irreducible with highest weight `shape` at
/// weight `content`, counted as semistandard tableaux. Negative entries are
/// handled by shifting shape and content by the same constant.
BigInt kostka(const std::vector<long>& shape, const std::vector<long>& content);

/// Weakly decreasing integer vectors of length l with zero sum and the given
/// sum of squares.
std::vector<std::vector<long>> traceless_dominants(long ell, long norm_target);

/// All partitions of n, in reverse lexicographic order.
std::vector<Partition> partitions_of(long n);

}  // namespace kw
