// Brute-force reference implementations used only by the tests. They share no
// code with the library beyond the value types.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>
#include <vector>

#include "acedag/core.hpp"
#include "acedag/partitions.hpp"

namespace oracle {

using acedag::BasisTuple;
using acedag::Group;
using acedag::OneParticleIndex;

inline int deg(Group g, const OneParticleIndex& k) {
  switch (g) {
    case Group::T: return std::abs(k.m);
    case Group::SO2: return k.n + std::abs(k.m);
    case Group::O3: return k.n + k.l;
    case Group::O3F: return k.n + k.l + k.f;
  }
  return 0;
}

inline std::vector<OneParticleIndex> indices(Group g, int D) {
  std::vector<OneParticleIndex> out;
  const bool has_n = g != Group::T;
  const bool has_l = g == Group::O3 || g == Group::O3F;
  const bool has_f = g == Group::O3F;
  for (int n = 0; n <= (has_n ? D : 0); ++n)
    for (int l = 0; l <= (has_l ? D : 0); ++l)
      for (int m = -D; m <= D; ++m)
        for (int f = 0; f <= (has_f ? D : 0); ++f) {
          if (has_l && std::abs(m) > l) continue;
          OneParticleIndex k{n, l, m, f};
          if (deg(g, k) <= D) out.push_back(k);
        }
  return out;
}

inline bool invariant(Group g, const std::vector<OneParticleIndex>& ks) {
  int msum = 0;
  int lsum = 0;
  for (const auto& k : ks) {
    msum += k.m;
    lsum += k.l;
  }
  if (msum != 0) return false;
  if ((g == Group::O3 || g == Group::O3F) && lsum % 2 != 0) return false;
  return true;
}

// p = 1, 2 or 0 for infinity.
inline bool within(Group g, const std::vector<OneParticleIndex>& ks, int p, int D) {
  long s = 0;
  for (const auto& k : ks) {
    const long d = deg(g, k);
    if (p == 1) s += d;
    if (p == 2) s += d * d;
    if (p == 0) s = std::max(s, d);
  }
  return p == 2 ? s <= long(D) * D : s <= D;
}

/// All nu-multisets over the indices of degree <= D, filtered afterwards.
inline std::set<std::vector<OneParticleIndex>> K(Group g, int nu, int p, int D) {
  const auto idx = indices(g, D);
  std::set<std::vector<OneParticleIndex>> out;
  std::vector<std::size_t> pos(nu, 0);
  while (true) {
    std::vector<OneParticleIndex> ks;
    for (auto i : pos) ks.push_back(idx[i]);
    if (invariant(g, ks) && within(g, ks, p, D)) {
      std::sort(ks.begin(), ks.end());
      out.insert(ks);
    }
    int i = nu - 1;
    while (i >= 0 && pos[i] + 1 == idx.size()) --i;
    if (i < 0) break;
    ++pos[i];
    for (int j = i + 1; j < nu; ++j) pos[j] = pos[i];
  }
  return out;
}

inline bool dependent(Group g, const std::vector<OneParticleIndex>& ks) {
  const std::size_t nu = ks.size();
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << nu); ++mask) {
    std::vector<OneParticleIndex> a;
    std::vector<OneParticleIndex> b;
    for (std::size_t i = 0; i < nu; ++i) ((mask >> i) & 1 ? a : b).push_back(ks[i]);
    if (invariant(g, a) && invariant(g, b)) return true;
  }
  return false;
}

/// Partitions of n into exactly k parts, counted as partitions of n - k into
/// parts of size at most k (coin-change DP).
inline acedag::BigInt partitions(int k, int n) {
  if (k == 0) return n == 0 ? 1 : 0;
  if (n < k) return 0;
  const int r = n - k;
  std::vector<acedag::BigInt> ways(r + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= k; ++part)
    for (int s = part; s <= r; ++s) ways[s] += ways[s - part];
  return ways[r];
}

inline std::vector<OneParticleIndex> elems(const BasisTuple& t) { return {t.begin(), t.end()}; }

}  // namespace oracle
