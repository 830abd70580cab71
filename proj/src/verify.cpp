#include "acedag/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "acedag/dependency.hpp"
#include "acedag/evaluator.hpp"
#include "acedag/graph.hpp"
#include "acedag/indexsets.hpp"

namespace acedag {

BigInt torus_aux_formula(int nu_max, int D) {
  BigInt total = 0;
  for (int k = 2; k <= nu_max - 1; ++k)
    for (int n = 1; n <= D / 2; ++n) total += partition_count(k, n);
  return 2 * total;
}

bool is_dependent_exhaustive(const BasisTuple& t, Group g) {
  const auto nu = t.order();
  if (nu < 2) return false;
  const std::uint32_t full = (1u << nu) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    std::vector<OneParticleIndex> left;
    std::vector<OneParticleIndex> right;
    for (std::size_t i = 0; i < nu; ++i) ((mask >> i) & 1u ? left : right).push_back(t[i]);
    if (satisfies_constraints(BasisTuple(left), g) && satisfies_constraints(BasisTuple(right), g)) return true;
  }
  return false;
}

SuiteResult verify_torus_exact_count(int nu_max, int D_max) {
  SuiteResult r{"t-exact-count", true, {}};
  std::ostringstream detail;
  int cases = 0;
  for (int nu = 3; nu <= nu_max; ++nu) {
    for (int D = 1; D <= D_max; ++D) {
      const auto graph = build(Group::T, {Norm::One, D}, nu, Algorithm::original);
      const auto got = stats(graph).num_aux;
      const auto want = torus_aux_formula(nu, D);
      ++cases;
      if (BigInt(got) != want) {
        r.passed = false;
        detail << "numax=" << nu << " D=" << D << ": got " << got << ", formula " << want << "; ";
      }
    }
  }
  if (r.passed) detail << cases << " (numax, D) cases match";
  r.detail = detail.str();
  return r;
}

SuiteResult verify_classifier(Group g, int nu_max, const DegreeSpec& spec) {
  SuiteResult r{"classifier", true, {}};
  std::size_t checked = 0;
  std::ostringstream detail;
  for (int nu = 2; nu <= nu_max && r.passed; ++nu) {
    for (const auto& t : enumerate_K(g, nu, spec)) {
      ++checked;
      const bool fast = classify(t, g) == Dependence::dependent;
      if (fast != is_dependent_exhaustive(t, g)) {
        r.passed = false;
        detail << "mismatch on [" << format_tuple(t, g) << "]";
        break;
      }
    }
  }
  if (r.passed) detail << checked << " tuples agree";
  r.detail = detail.str();
  return r;
}

SuiteResult verify_eval_oracle(Group g, int nu_max, const DegreeSpec& spec, int configs, std::uint64_t seed) {
  SuiteResult r{"oracle", true, {}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> particles(1, 8);
  std::vector<ParticleConfig> samples;
  for (int c = 0; c < configs; ++c) samples.push_back(random_config(g, particles(rng), rng));

  double worst = 0.0;
  struct Variant {
    Algorithm alg;
    int n;
  };
  for (const auto v : {Variant{Algorithm::original, 1}, Variant{Algorithm::generalized, 1},
                       Variant{Algorithm::generalized, 2}}) {
    const auto graph = build(g, spec, nu_max, v.alg, v.n);
    for (const auto& config : samples) {
      const auto pooled = pool(g, spec, config);
      const auto values = eval_graph(graph, pooled);
      for (std::size_t i = 0; i < graph.size(); ++i) {
        const auto ref = naive_eval(graph.nodes()[i].tuple, pooled);
        const auto dev = std::abs(values(static_cast<Eigen::Index>(i)) - ref) / (1.0 + std::abs(ref));
        worst = std::max(worst, dev);
      }
    }
  }
  r.passed = worst <= 1e-12;
  std::ostringstream detail;
  detail << "max relative deviation " << worst << " over " << configs << " configurations";
  r.detail = detail.str();
  return r;
}

SuiteResult verify_invariance(Group g, int nu_max, const DegreeSpec& spec, int configs, std::uint64_t seed) {
  SuiteResult r{"invariance", true, {}};
  const auto graph = build(g, spec, nu_max, Algorithm::original);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> particles(1, 8);
  double rot = 0.0;
  double inv = 0.0;
  double control = 1e300;
  for (int c = 0; c < configs; ++c) {
    const auto config = random_config(g, particles(rng), rng);
    const auto rep = invariance_check(graph, config, 3, rng());
    rot = std::max(rot, rep.rotation_deviation);
    inv = std::max(inv, rep.inversion_deviation);
    control = std::min(control, rep.control_deviation);
  }
  r.passed = rot < 1e-10 && inv < 1e-10 && control > 1e-2;
  std::ostringstream detail;
  detail << "rotation " << rot << ", inversion " << inv << ", control " << control;
  r.detail = detail.str();
  return r;
}

}  // namespace acedag
