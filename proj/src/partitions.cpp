#include "acedag/partitions.hpp"

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace acedag {

namespace {

class PartitionTable {
 public:
  BigInt get(int k, int n) {
    std::lock_guard lock(mutex_);
    ensure(k, n);
    return rows_[k][n];
  }

 private:
  // Row k holds pi(k, 0..len-1). Extending row k to n needs row k-1 up to
  // n-1 and row k itself up to n-k.
  void ensure(int k, int n) {
    if (static_cast<int>(rows_.size()) <= k) rows_.resize(k + 1);
    auto& row = rows_[k];
    if (static_cast<int>(row.size()) > n) return;
    if (k > 0) ensure(k - 1, n - 1 < 0 ? 0 : n - 1);
    auto& r = rows_[k];
    for (int j = static_cast<int>(r.size()); j <= n; ++j) {
      if (k == 0) {
        r.push_back(j == 0 ? 1 : 0);
      } else if (j < k) {
        r.push_back(0);
      } else {
        r.push_back(rows_[k - 1][j - 1] + r[j - k]);
      }
    }
  }

  std::mutex mutex_;
  std::vector<std::vector<BigInt>> rows_;
};

PartitionTable& table() {
  static PartitionTable t;
  return t;
}

}  // namespace

BigInt partition_count(int k, int n) {
  if (k < 0 || n < 0) return 0;
  if (k > n) return (k == 0 && n == 0) ? 1 : 0;
  return table().get(k, n);
}

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

PartitionBounds partition_bounds(int k, int n) {
  if (k < 1 || n < 1) throw std::invalid_argument("partition_bounds requires k >= 1 and n >= 1");
  const BigInt kfact = factorial(k);
  PartitionBounds b;
  b.lower = BigRational(binomial(n - 1, k - 1), kfact);
  const BigInt base = BigInt(n) + BigInt(k) * (k - 1) / 2;
  b.upper = BigRational(boost::multiprecision::pow(base, static_cast<unsigned>(k - 1)), kfact * factorial(k - 1));
  return b;
}

BigInt catalan(int j) {
  if (j < 0) throw std::invalid_argument("catalan index must be non-negative");
  return binomial(2 * j, j) / (j + 1);
}

bool slice_identity_check(int nu) {
  if (nu < 2) throw std::invalid_argument("slice_identity_check requires nu >= 2, got " + std::to_string(nu));
  BigInt lhs = 0;
  for (int k = 0; k <= nu; ++k) {
    const BigInt c = binomial(nu, k);
    lhs += c * c * k * (nu - k);
  }
  const BigInt rhs = BigInt(nu) * nu * binomial(2 * nu - 2, nu - 2);
  return lhs == rhs;
}

}  // namespace acedag
