#include "acedag/dependency.hpp"

#include <algorithm>
#include <stdexcept>

#include "acedag/indexsets.hpp"

namespace acedag {

namespace {

struct Run {
  OneParticleIndex index;
  int count;
};

std::vector<Run> runs_of(const BasisTuple& t) {
  std::vector<Run> runs;
  for (const auto& k : t) {
    if (!runs.empty() && runs.back().index == k) {
      ++runs.back().count;
    } else {
      runs.push_back({k, 1});
    }
  }
  return runs;
}

// Visits every multiplicity vector 0 <= take[i] <= runs[i].count except the
// all-zero and the full one. Stops early when `visit` returns true.
template <typename Visit>
bool for_each_proper_submultiset(const std::vector<Run>& runs, Visit&& visit) {
  std::vector<int> take(runs.size(), 0);
  while (true) {
    std::size_t i = 0;
    while (i < runs.size() && take[i] == runs[i].count) {
      take[i] = 0;
      ++i;
    }
    if (i == runs.size()) return false;
    ++take[i];
    bool full = true;
    for (std::size_t j = 0; j < runs.size(); ++j) full = full && take[j] == runs[j].count;
    if (full) continue;
    if (visit(take)) return true;
  }
}

Decomposition make_split(const std::vector<Run>& runs, const std::vector<int>& take) {
  std::vector<OneParticleIndex> left;
  std::vector<OneParticleIndex> right;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    left.insert(left.end(), take[i], runs[i].index);
    right.insert(right.end(), runs[i].count - take[i], runs[i].index);
  }
  return {BasisTuple::from_sorted(std::move(left)), BasisTuple::from_sorted(std::move(right))};
}

bool is_o3_like(Group g) { return g == Group::O3 || g == Group::O3F; }

// Parts of an invariant tuple are invariant together: the complement has
// m-sum and l-sum equal to the total minus the chosen part.
bool part_invariant(const std::vector<Run>& runs, const std::vector<int>& take, Group g) {
  long msum = 0;
  long lsum = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    msum += static_cast<long>(take[i]) * runs[i].index.m;
    lsum += static_cast<long>(take[i]) * runs[i].index.l;
  }
  return msum == 0 && (!is_o3_like(g) || lsum % 2 == 0);
}

void require_invariant(const BasisTuple& t, Group g) {
  if (!satisfies_constraints(t, g)) {
    throw std::invalid_argument("tuple [" + format_tuple(t, g) + "] violates the " + std::string(group_name(g)) +
                                " constraints");
  }
}

}  // namespace

std::vector<Decomposition> all_splits(const BasisTuple& t) {
  const auto runs = runs_of(t);
  std::vector<Decomposition> out;
  for_each_proper_submultiset(runs, [&](const std::vector<int>& take) {
    auto split = make_split(runs, take);
    if (split.left <= split.right) out.push_back(std::move(split));
    return false;
  });
  std::sort(out.begin(), out.end(), [](const Decomposition& a, const Decomposition& b) { return a.left < b.left; });
  return out;
}

std::vector<Decomposition> invariant_decompositions(const BasisTuple& t, Group g) {
  require_invariant(t, g);
  const auto runs = runs_of(t);
  std::vector<Decomposition> out;
  for_each_proper_submultiset(runs, [&](const std::vector<int>& take) {
    if (!part_invariant(runs, take, g)) return false;
    auto split = make_split(runs, take);
    if (split.left <= split.right) out.push_back(std::move(split));
    return false;
  });
  std::sort(out.begin(), out.end(), [](const Decomposition& a, const Decomposition& b) { return a.left < b.left; });
  return out;
}

Dependence classify(const BasisTuple& t, Group g) {
  require_invariant(t, g);
  if (t.order() < 2) return Dependence::independent;
  const auto runs = runs_of(t);
  const bool found = for_each_proper_submultiset(
      runs, [&](const std::vector<int>& take) { return part_invariant(runs, take, g); });
  return found ? Dependence::dependent : Dependence::independent;
}

SetCounts count_sets(Group g, int nu, const DegreeSpec& spec) {
  SetCounts c;
  for (const auto& t : enumerate_K(g, nu, spec)) {
    ++c.total;
    if (classify(t, g) == Dependence::dependent) {
      ++c.dependent;
    } else {
      ++c.independent;
    }
  }
  return c;
}

}  // namespace acedag
