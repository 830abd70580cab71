#include <doctest.h>

#include <algorithm>

#include "acedag/dependency.hpp"
#include "acedag/indexsets.hpp"
#include "oracles.hpp"

using namespace acedag;

namespace {

bool has_split(const std::vector<Decomposition>& ds, const BasisTuple& a, const BasisTuple& b) {
  return std::any_of(ds.begin(), ds.end(), [&](const Decomposition& d) {
    return (d.left == a && d.right == b) || (d.left == b && d.right == a);
  });
}

}  // namespace

TEST_SUITE("dependency") {
  TEST_CASE("named examples") {
    const auto ds = invariant_decompositions(torus_tuple({1, 0, -1}), Group::T);
    REQUIRE(ds.size() == 1);
    CHECK(ds[0].left == torus_tuple({0}));
    CHECK(ds[0].right == torus_tuple({-1, 1}));
    CHECK(classify(torus_tuple({1, 0, -1}), Group::T) == Dependence::dependent);

    CHECK(invariant_decompositions(torus_tuple({1, 1, -2}), Group::T).empty());
    CHECK(classify(torus_tuple({1, 1, -2}), Group::T) == Dependence::independent);

    const auto six = invariant_decompositions(torus_tuple({-3, -2, -1, 1, 2, 3}), Group::T);
    CHECK(has_split(six, torus_tuple({-3, 3}), torus_tuple({-2, -1, 1, 2})));
    CHECK(has_split(six, torus_tuple({-2, 2}), torus_tuple({-3, -1, 1, 3})));

    for (int nu = 2; nu <= 6; ++nu)
      CHECK(classify(BasisTuple(std::vector(nu, torus_index(0))), Group::T) == Dependence::dependent);
    CHECK(classify(torus_tuple({0}), Group::T) == Dependence::independent);
    CHECK_THROWS_AS(invariant_decompositions(torus_tuple({1, 1}), Group::T), std::invalid_argument);
  }

  TEST_CASE("splits are canonical and complete") {
    const auto t = torus_tuple({-2, 1, 1, 0});
    const auto splits = all_splits(t);
    // multiplicities (1,1,2) give 2*2*3 - 2 proper sub-multisets, each unordered pair once
    CHECK(splits.size() == 5);
    for (const auto& d : splits) {
      CHECK(d.left <= d.right);
      CHECK(d.left.merged(d.right) == t);
      CHECK_FALSE(d.left.empty());
    }
    CHECK(std::is_sorted(splits.begin(), splits.end(),
                         [](const Decomposition& a, const Decomposition& b) { return a.left < b.left; }));
  }

  TEST_CASE("counts") {
    const auto c = count_sets(Group::T, 2, {Norm::One, 4});
    CHECK(c.total == 3);
    CHECK(c.dependent == 1);
    CHECK(c.independent == 2);
    const auto z = count_sets(Group::T, 3, {Norm::One, 1});
    CHECK(z.total == 1);
    CHECK(z.dependent == 1);

    std::size_t dep = 0;
    const auto ref = oracle::K(Group::O3, 3, 1, 4);
    for (const auto& ks : ref) dep += oracle::dependent(Group::O3, ks);
    const auto o = count_sets(Group::O3, 3, {Norm::One, 4});
    CHECK(o.total == ref.size());
    CHECK(o.dependent == dep);
    CHECK(o.dependent + o.independent == o.total);
  }

  TEST_CASE("classifier agrees with subset oracle") {
    struct Case {
      Group g;
      int nu_max;
      int D;
    };
    for (const auto c : {Case{Group::T, 5, 12}, Case{Group::SO2, 4, 6}, Case{Group::O3, 4, 5}, Case{Group::O3F, 3, 4}}) {
      for (auto p : {Norm::One, Norm::Inf}) {
        for (int nu = 2; nu <= c.nu_max; ++nu) {
          for (const auto& t : enumerate_K(c.g, nu, {p, c.D})) {
            CAPTURE(format_tuple(t, c.g));
            REQUIRE((classify(t, c.g) == Dependence::dependent) == oracle::dependent(c.g, oracle::elems(t)));
          }
        }
      }
    }
  }

  TEST_CASE("padding with a zero makes a tuple dependent") {
    for (int nu = 2; nu <= 5; ++nu)
      for (const auto& m : enumerate_K(Group::T, nu - 1, {Norm::One, 10}))
        REQUIRE(classify(m.merged(torus_tuple({0})), Group::T) == Dependence::dependent);
  }

  TEST_CASE("D times dependent fraction stays in a band") {
    for (int nu = 3; nu <= 5; ++nu) {
      double lo = 1e300;
      double hi = 0;
      for (int D = 8; D <= 40; ++D) {
        const auto c = count_sets(Group::T, nu, {Norm::One, D});
        const double v = D * double(c.dependent) / double(c.total);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      CAPTURE(nu);
      CHECK(hi / lo < 3.0);
    }
  }
}
