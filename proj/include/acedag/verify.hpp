#pragma once

#include <cstdint>
#include <string>

#include "acedag/core.hpp"
#include "acedag/partitions.hpp"

namespace acedag {

/// 2 * sum_{k=2}^{nu_max-1} sum_{n=1}^{floor(D/2)} pi(k, n): the number of
/// auxiliary nodes the original heuristic inserts for T with p = 1.
BigInt torus_aux_formula(int nu_max, int D);

/// Reference classifier: tries every proper subset of tuple positions
/// (2^nu - 2 bitmasks) without exploiting repeated elements.
bool is_dependent_exhaustive(const BasisTuple& t, Group g);

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Original-heuristic auxiliary counts on T against the closed form, for
/// nu_max in [3, nu_max] and D in [1, D_max].
SuiteResult verify_torus_exact_count(int nu_max, int D_max);

/// classify vs is_dependent_exhaustive on K_G(nu, D) for nu in [2, nu_max].
SuiteResult verify_classifier(Group g, int nu_max, const DegreeSpec& spec);

/// Graph evaluation vs direct products on every node, for both heuristics
/// (n = 1 and n = 2), over random configurations with J <= 8.
SuiteResult verify_eval_oracle(Group g, int nu_max, const DegreeSpec& spec, int configs, std::uint64_t seed);

/// Rotation (and for O3/O3F inversion) invariance of every target node plus
/// the non-invariant control.
SuiteResult verify_invariance(Group g, int nu_max, const DegreeSpec& spec, int configs, std::uint64_t seed);

}  // namespace acedag
