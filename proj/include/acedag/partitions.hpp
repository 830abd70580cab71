#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace acedag {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Number of partitions of n into exactly k positive parts.
///
/// pi(0, 0) = 1 (the empty partition) so that the recurrence
/// pi(k, n) = pi(k-1, n-1) + pi(k, n-k) closes; pi(0, n) = 0 for n > 0.
/// Values come from a process-wide table that is extended on demand and is
/// safe to query from several threads.
BigInt partition_count(int k, int n);

struct PartitionBounds {
  BigRational lower;
  BigRational upper;
};

/// C(n-1, k-1) / k!  <=  pi(k, n)  <=  (n + k(k-1)/2)^(k-1) / (k! (k-1)!),
/// both exact. Requires k >= 1 and n >= 1.
PartitionBounds partition_bounds(int k, int n);

BigInt binomial(int n, int k);
BigInt factorial(int n);

/// C_j = C(2j, j) / (j + 1).
BigInt catalan(int j);

/// sum_k C(nu,k)^2 k (nu-k) == nu^2 C(2nu-2, nu-2), evaluated exactly.
bool slice_identity_check(int nu);

}  // namespace acedag
