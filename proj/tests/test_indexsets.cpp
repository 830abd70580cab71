#include <doctest.h>

#include <algorithm>

#include "acedag/indexsets.hpp"
#include "oracles.hpp"

using namespace acedag;

namespace {

std::set<std::vector<OneParticleIndex>> as_set(const std::vector<BasisTuple>& ts) {
  std::set<std::vector<OneParticleIndex>> out;
  for (const auto& t : ts) out.insert(oracle::elems(t));
  return out;
}

int oracle_p(Norm p) { return p == Norm::One ? 1 : p == Norm::Two ? 2 : 0; }

}  // namespace

TEST_SUITE("indexsets") {
  TEST_CASE("one-particle indices") {
    CHECK(one_particle_indices(Group::T, 2).size() == 5);
    CHECK(one_particle_indices(Group::T, 0).size() == 1);
    const auto o3 = one_particle_indices(Group::O3, 1);
    const std::vector<OneParticleIndex> want{o3_index(0, 0, 0), o3_index(0, 1, -1), o3_index(0, 1, 0),
                                             o3_index(0, 1, 1), o3_index(1, 0, 0)};
    CHECK(o3 == want);
    for (auto g : {Group::T, Group::SO2, Group::O3, Group::O3F}) {
      auto ref = oracle::indices(g, 5);
      std::sort(ref.begin(), ref.end());
      CHECK(one_particle_indices(g, 5) == ref);
    }
  }

  TEST_CASE("small torus sets") {
    const auto k2 = enumerate_K(Group::T, 2, {Norm::One, 4});
    CHECK(k2 == std::vector{torus_tuple({-2, 2}), torus_tuple({-1, 1}), torus_tuple({0, 0})});
    CHECK(enumerate_K(Group::T, 3, {Norm::One, 1}) == std::vector{torus_tuple({0, 0, 0})});
    CHECK(enumerate_K(Group::T, 4, {Norm::One, 4}).size() == oracle::K(Group::T, 4, 1, 4).size());
    CHECK_THROWS_AS(enumerate_K(Group::T, 0, {Norm::One, 4}), std::invalid_argument);
  }

  TEST_CASE("O3 order one: m = 0 and even l") {
    const auto k1 = enumerate_K(Group::O3, 1, {Norm::One, 3});
    const std::vector<BasisTuple> want{BasisTuple{o3_index(0, 0, 0)}, BasisTuple{o3_index(0, 2, 0)},
                                       BasisTuple{o3_index(1, 0, 0)}, BasisTuple{o3_index(1, 2, 0)},
                                       BasisTuple{o3_index(2, 0, 0)}, BasisTuple{o3_index(3, 0, 0)}};
    CHECK(k1 == want);
  }

  TEST_CASE("enumeration matches brute force") {
    struct Case {
      Group g;
      int nu;
      int D;
    };
    const Case cases[] = {{Group::T, 1, 6},   {Group::T, 3, 8},   {Group::T, 5, 7},   {Group::SO2, 2, 5},
                          {Group::SO2, 3, 4}, {Group::SO2, 4, 3}, {Group::O3, 2, 4},  {Group::O3, 3, 3},
                          {Group::O3, 4, 2},  {Group::O3F, 2, 3}, {Group::O3F, 3, 2}};
    for (const auto& c : cases) {
      for (auto p : {Norm::One, Norm::Two, Norm::Inf}) {
        CAPTURE(group_name(c.g));
        CAPTURE(c.nu);
        CAPTURE(c.D);
        CAPTURE(norm_name(p));
        const auto got = enumerate_K(c.g, c.nu, {p, c.D});
        CHECK(std::is_sorted(got.begin(), got.end()));
        CHECK(std::adjacent_find(got.begin(), got.end()) == got.end());
        CHECK(as_set(got) == oracle::K(c.g, c.nu, oracle_p(p), c.D));
      }
    }
  }

  TEST_CASE("norm and degree monotonicity") {
    for (auto g : {Group::T, Group::SO2, Group::O3}) {
      for (int nu = 2; nu <= 3; ++nu) {
        const auto k1 = as_set(enumerate_K(g, nu, {Norm::One, 4}));
        const auto k2 = as_set(enumerate_K(g, nu, {Norm::Two, 4}));
        const auto ki = as_set(enumerate_K(g, nu, {Norm::Inf, 4}));
        const auto k1_up = as_set(enumerate_K(g, nu, {Norm::One, 5}));
        CHECK(std::includes(k2.begin(), k2.end(), k1.begin(), k1.end()));
        CHECK(std::includes(ki.begin(), ki.end(), k2.begin(), k2.end()));
        CHECK(std::includes(k1_up.begin(), k1_up.end(), k1.begin(), k1.end()));
      }
    }
  }

  TEST_CASE("every enumerated tuple passes the re-check") {
    for (auto g : {Group::T, Group::SO2, Group::O3, Group::O3F}) {
      for (auto p : {Norm::One, Norm::Two, Norm::Inf}) {
        const DegreeSpec spec{p, 4};
        for (const auto& t : enumerate_K(g, 3, spec)) {
          CHECK(satisfies_constraints(t, g));
          CHECK(within_degree(t, g, spec));
        }
      }
    }
  }

  TEST_CASE("E slices") {
    CHECK(enumerate_E_slice(2, 5).empty());
    CHECK(enumerate_E_slice(2, 4) == std::vector{torus_tuple({-2, 2})});
    std::size_t ref = 0;
    for (const auto& ks : oracle::K(Group::T, 3, 1, 6)) {
      int s = 0;
      bool zero = false;
      for (const auto& k : ks) {
        s += std::abs(k.m);
        zero = zero || k.m == 0;
      }
      ref += s == 6 && !zero;
    }
    CHECK(enumerate_E_slice(3, 6).size() == ref);
    for (int nu = 1; nu <= 6; ++nu)
      for (int D = 1; D <= 29; D += 2) CHECK(enumerate_E_slice(nu, D).empty());
  }

  TEST_CASE("slice identity: #K(nu,D) - #K(nu,D-1) = sum_k #E(k,D)") {
    for (int nu = 1; nu <= 6; ++nu) {
      for (int D = 1; D <= 30; ++D) {
        const auto diff = enumerate_K(Group::T, nu, {Norm::One, D}).size() -
                          enumerate_K(Group::T, nu, {Norm::One, D - 1}).size();
        std::size_t slices = 0;
        for (int k = 1; k <= nu; ++k) slices += enumerate_E_slice(k, D).size();
        CAPTURE(nu);
        CAPTURE(D);
        CHECK(diff == slices);
      }
    }
  }
}
