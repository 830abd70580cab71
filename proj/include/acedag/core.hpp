#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace acedag {

/// Symmetry group governing the constraints on basis tuples.
///
///  - T    : particles on the unit circle, index m
///  - SO2  : planar particles, index (n, m)
///  - O3   : three-dimensional particles, index (n, l, m)
///  - O3F  : O3 with one additional invariant scalar feature, index (n, l, m, f)
enum class Group { T, SO2, O3, O3F };

std::string_view group_name(Group g);
Group parse_group(std::string_view name);

/// Number of integer components that label a one-particle index of `g`.
int component_count(Group g);

/// A single one-particle basis label. Components that do not exist for a
/// group are held at zero, so the defaulted lexicographic order on
/// (n, l, m, f) is the total order used for canonical tuples.
struct OneParticleIndex {
  int n = 0;
  int l = 0;
  int m = 0;
  int f = 0;

  auto operator<=>(const OneParticleIndex&) const = default;
};

inline OneParticleIndex torus_index(int m) { return {0, 0, m, 0}; }
inline OneParticleIndex so2_index(int n, int m) { return {n, 0, m, 0}; }
inline OneParticleIndex o3_index(int n, int l, int m) { return {n, l, m, 0}; }
inline OneParticleIndex o3f_index(int n, int l, int m, int f) { return {n, l, m, f}; }

/// Per-element degree: |m| (T), n+|m| (SO2), n+l (O3), n+l+f (O3F).
int element_degree(Group g, const OneParticleIndex& k);

/// True if `k` is a well-formed label for `g` (non-negative n, l, f;
/// |m| <= l for O3/O3F; unused components zero).
bool is_valid_index(Group g, const OneParticleIndex& k);

/// Canonical multiset of one-particle indices.
///
/// Elements are kept sorted in non-decreasing index order, so two tuples
/// compare equal iff they are the same multiset. Tuples are ordered first by
/// correlation order and then lexicographically.
class BasisTuple {
 public:
  BasisTuple() = default;
  explicit BasisTuple(std::vector<OneParticleIndex> elements);
  BasisTuple(std::initializer_list<OneParticleIndex> elements);

  /// Wraps an already sorted sequence without re-sorting.
  static BasisTuple from_sorted(std::vector<OneParticleIndex> elements);

  std::size_t order() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  std::span<const OneParticleIndex> elements() const { return elements_; }
  const OneParticleIndex& operator[](std::size_t i) const { return elements_[i]; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  /// Multiset union.
  BasisTuple merged(const BasisTuple& other) const;

  friend bool operator==(const BasisTuple&, const BasisTuple&) = default;
  friend std::strong_ordering operator<=>(const BasisTuple& a, const BasisTuple& b);

 private:
  std::vector<OneParticleIndex> elements_;
};

/// Builds a T tuple from a list of m values.
BasisTuple torus_tuple(std::initializer_list<int> ms);

struct BasisTupleHash {
  std::size_t operator()(const BasisTuple& t) const noexcept;
};

enum class Norm { One, Two, Inf };

std::string_view norm_name(Norm p);
Norm parse_norm(std::string_view name);

/// Sparse-grid cut ||k||_p <= D.
struct DegreeSpec {
  Norm p = Norm::One;
  int D = 0;
};

/// Exact integer surrogate for the p-degree: sum d (p=1), sum d^2 (p=2),
/// max d (p=inf). Comparing against `degree_bound_key` decides membership
/// without floating point.
std::int64_t degree_key(const BasisTuple& t, Group g, Norm p);
std::int64_t degree_bound_key(const DegreeSpec& spec);

/// (sum_t d_t^p)^(1/p), or max_t d_t for p = inf.
double degree(const BasisTuple& t, Group g, Norm p);

bool within_degree(const BasisTuple& t, Group g, const DegreeSpec& spec);

/// Sum of m is zero, and for O3/O3F the sum of l is even.
bool satisfies_constraints(const BasisTuple& t, Group g);

/// Flat comma-separated component list, e.g. "-1,0,1" for T or
/// "0,1,-1,0,1,1" for O3.
std::string format_tuple(const BasisTuple& t, Group g);
BasisTuple parse_tuple(std::string_view text, Group g);

std::string format_index(const OneParticleIndex& k, Group g);

}  // namespace acedag
