#include "acedag/indexsets.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace acedag {

std::vector<OneParticleIndex> one_particle_indices(Group g, int D) {
  std::vector<OneParticleIndex> out;
  if (D < 0) return out;
  switch (g) {
    case Group::T:
      for (int m = -D; m <= D; ++m) out.push_back(torus_index(m));
      break;
    case Group::SO2:
      for (int n = 0; n <= D; ++n)
        for (int m = -(D - n); m <= D - n; ++m) out.push_back(so2_index(n, m));
      break;
    case Group::O3:
      for (int n = 0; n <= D; ++n)
        for (int l = 0; n + l <= D; ++l)
          for (int m = -l; m <= l; ++m) out.push_back(o3_index(n, l, m));
      break;
    case Group::O3F:
      for (int n = 0; n <= D; ++n)
        for (int l = 0; n + l <= D; ++l)
          for (int m = -l; m <= l; ++m)
            for (int f = 0; n + l + f <= D; ++f) out.push_back(o3f_index(n, l, m, f));
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Depth-first generation of non-decreasing position sequences into the seed
// list. The last position is resolved through a per-m bucket, since its m is
// forced by the sum constraint.
class KEnumerator {
 public:
  KEnumerator(Group g, int nu, const DegreeSpec& spec)
      : group_(g), nu_(nu), spec_(spec), seeds_(one_particle_indices(g, spec.D)) {
    degrees_.reserve(seeds_.size());
    for (const auto& k : seeds_) degrees_.push_back(element_degree(g, k));
    by_m_.resize(2 * static_cast<std::size_t>(spec.D) + 1);
    for (std::size_t i = 0; i < seeds_.size(); ++i) by_m_[bucket(seeds_[i].m)].push_back(i);
    current_.reserve(nu);
  }

  std::vector<BasisTuple> run() {
    if (spec_.D >= 0) recurse(0, 0, 0, 0);
    return std::move(out_);
  }

 private:
  std::size_t bucket(int m) const { return static_cast<std::size_t>(m + spec_.D); }

  // Budget left after spending `used` (sum d for p=1, sum d^2 for p=2).
  bool fits(std::int64_t used) const { return spec_.p == Norm::Inf || used <= degree_bound_key(spec_); }

  std::int64_t spend(std::int64_t used, int d) const {
    switch (spec_.p) {
      case Norm::One:
        return used + d;
      case Norm::Two:
        return used + static_cast<std::int64_t>(d) * d;
      case Norm::Inf:
        return used;
    }
    return used;
  }

  // Can `remaining` more elements bring the m-sum back to zero?
  bool can_cancel(long msum, std::int64_t used, int remaining) const {
    const std::int64_t a = std::abs(msum);
    switch (spec_.p) {
      case Norm::One:
        return a <= degree_bound_key(spec_) - used;
      case Norm::Two:
        return a * a <= remaining * (degree_bound_key(spec_) - used);
      case Norm::Inf:
        return a <= static_cast<std::int64_t>(remaining) * spec_.D;
    }
    return true;
  }

  bool parity_ok(long lsum) const {
    return !(group_ == Group::O3 || group_ == Group::O3F) || lsum % 2 == 0;
  }

  void emit() {
    std::vector<OneParticleIndex> elems;
    elems.reserve(current_.size());
    for (auto i : current_) elems.push_back(seeds_[i]);
    out_.push_back(BasisTuple::from_sorted(std::move(elems)));
  }

  void recurse(std::size_t start, std::int64_t used, long msum, long lsum) {
    const int remaining = nu_ - static_cast<int>(current_.size());
    if (remaining == 1) {
      const long target = -msum;
      if (std::abs(target) > spec_.D) return;
      const auto& candidates = by_m_[bucket(static_cast<int>(target))];
      for (auto it = std::lower_bound(candidates.begin(), candidates.end(), start); it != candidates.end(); ++it) {
        const auto i = *it;
        if (!fits(spend(used, degrees_[i]))) continue;
        if (!parity_ok(lsum + seeds_[i].l)) continue;
        current_.push_back(i);
        emit();
        current_.pop_back();
      }
      return;
    }
    for (std::size_t i = start; i < seeds_.size(); ++i) {
      const auto& k = seeds_[i];
      // T seeds are sorted by m, so every later element is >= k.m.
      if (group_ == Group::T && msum + static_cast<long>(remaining) * k.m > 0) break;
      const auto used_next = spend(used, degrees_[i]);
      if (!fits(used_next)) continue;
      const long msum_next = msum + k.m;
      if (!can_cancel(msum_next, used_next, remaining - 1)) continue;
      current_.push_back(i);
      recurse(i, used_next, msum_next, lsum + k.l);
      current_.pop_back();
    }
  }

  Group group_;
  int nu_;
  DegreeSpec spec_;
  std::vector<OneParticleIndex> seeds_;
  std::vector<int> degrees_;
  std::vector<std::vector<std::size_t>> by_m_;
  std::vector<std::size_t> current_;
  std::vector<BasisTuple> out_;
};

void slice_recurse(int nu, int remaining_budget, long msum, int min_m, std::vector<int>& current,
                   std::vector<BasisTuple>& out) {
  const int remaining = nu - static_cast<int>(current.size());
  if (remaining == 1) {
    const long last = -msum;
    if (last == 0 || last < min_m || std::abs(last) != remaining_budget) return;
    std::vector<OneParticleIndex> elems;
    for (int m : current) elems.push_back(torus_index(m));
    elems.push_back(torus_index(static_cast<int>(last)));
    out.push_back(BasisTuple::from_sorted(std::move(elems)));
    return;
  }
  for (int m = min_m; m <= remaining_budget; ++m) {
    if (m == 0) continue;
    if (msum + static_cast<long>(remaining) * m > 0) break;
    const int budget_next = remaining_budget - std::abs(m);
    if (budget_next < remaining - 1) continue;  // each later entry costs at least 1
    current.push_back(m);
    slice_recurse(nu, budget_next, msum + m, m, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<BasisTuple> enumerate_K(Group g, int nu, const DegreeSpec& spec) {
  if (nu <= 0) throw std::invalid_argument("enumerate_K: correlation order must be >= 1, got " + std::to_string(nu));
  return KEnumerator(g, nu, spec).run();
}

std::vector<BasisTuple> enumerate_E_slice(int nu, int D) {
  if (nu <= 0) throw std::invalid_argument("enumerate_E_slice: correlation order must be >= 1");
  std::vector<BasisTuple> out;
  if (D <= 0) return out;
  std::vector<int> current;
  slice_recurse(nu, D, 0, -D, current, out);
  return out;
}

}  // namespace acedag
