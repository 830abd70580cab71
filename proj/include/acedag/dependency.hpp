#pragma once

#include <cstddef>
#include <vector>

#include "acedag/core.hpp"

namespace acedag {

/// An unordered split of a tuple into two non-empty sub-multisets, stored
/// with left <= right.
struct Decomposition {
  BasisTuple left;
  BasisTuple right;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Every proper split of `t`, each unordered split listed once, sorted by
/// the left part.
std::vector<Decomposition> all_splits(const BasisTuple& t);

/// The splits of `t` whose two parts both satisfy the group constraints.
/// Parts are not subject to any degree cap. Throws std::invalid_argument if
/// `t` itself violates the constraints.
std::vector<Decomposition> invariant_decompositions(const BasisTuple& t, Group g);

enum class Dependence { dependent, independent };

/// Dependent iff `t` has an invariant decomposition. Tuples of order 1 are
/// independent.
Dependence classify(const BasisTuple& t, Group g);

struct SetCounts {
  std::size_t total = 0;
  std::size_t dependent = 0;
  std::size_t independent = 0;
};

SetCounts count_sets(Group g, int nu, const DegreeSpec& spec);

}  // namespace acedag
