#include <doctest.h>

#include <cmath>

#include "acedag/core.hpp"
#include "acedag/errors.hpp"

using namespace acedag;

TEST_SUITE("core") {
  TEST_CASE("canonical form is order independent") {
    const BasisTuple a = torus_tuple({1, -2, 1});
    const BasisTuple b = torus_tuple({-2, 1, 1});
    CHECK(a == b);
    CHECK(a[0].m == -2);
    CHECK(a.order() == 3);
    CHECK(BasisTuple(std::vector(a.begin(), a.end())) == a);
  }

  TEST_CASE("tuple order compares length first") {
    CHECK(torus_tuple({5}) < torus_tuple({-1, 1}));
    CHECK(torus_tuple({-2, 2}) < torus_tuple({-1, 1}));
    CHECK(torus_tuple({-1, 1}).merged(torus_tuple({0})) == torus_tuple({1, 0, -1}));
  }

  TEST_CASE("degree") {
    const auto t = torus_tuple({1, 1, -2});
    CHECK(degree(t, Group::T, Norm::One) == 4.0);
    CHECK(degree(t, Group::T, Norm::Inf) == 2.0);
    CHECK(degree(t, Group::T, Norm::Two) == doctest::Approx(std::sqrt(6.0)));
    const BasisTuple o{o3_index(0, 2, -1), o3_index(1, 2, 1)};
    CHECK(degree(o, Group::O3, Norm::One) == 5.0);
    CHECK(element_degree(Group::O3F, o3f_index(1, 2, 0, 3)) == 6);
    CHECK(element_degree(Group::SO2, so2_index(2, -3)) == 5);
  }

  TEST_CASE("p = 2 boundary is exact") {
    const auto t = torus_tuple({-4, -3, 7});
    CHECK_FALSE(within_degree(t, Group::T, {Norm::Two, 8}));
    // 3^2 + 4^2 == 5^2 sits exactly on the cap
    const auto u = torus_tuple({3, -4});
    CHECK(within_degree(u, Group::T, {Norm::Two, 5}));
    CHECK_FALSE(within_degree(u, Group::T, {Norm::Two, 4}));
  }

  TEST_CASE("constraints") {
    CHECK(satisfies_constraints(torus_tuple({1, 0, -1}), Group::T));
    CHECK_FALSE(satisfies_constraints(torus_tuple({1, 1, -1}), Group::T));
    CHECK(satisfies_constraints(BasisTuple{o3_index(0, 1, 0), o3_index(0, 1, 0)}, Group::O3));
    CHECK_FALSE(satisfies_constraints(BasisTuple{o3_index(0, 1, 0), o3_index(0, 2, 0)}, Group::O3));
    CHECK(satisfies_constraints(BasisTuple{o3_index(0, 1, 0), o3_index(0, 2, 0)}, Group::SO2));
  }

  TEST_CASE("text form round-trips") {
    const BasisTuple t{o3f_index(0, 1, -1, 2), o3f_index(1, 1, 1, 0)};
    const auto s = format_tuple(t, Group::O3F);
    CHECK(s == "0,1,-1,2,1,1,1,0");
    CHECK(parse_tuple(s, Group::O3F) == t);
    CHECK(parse_tuple("-1,0,1", Group::T) == torus_tuple({1, 0, -1}));
    CHECK_THROWS_AS(parse_tuple("1,2,3", Group::SO2), FormatError);
    CHECK_THROWS_AS(parse_tuple("0,0,1", Group::O3), FormatError);
    CHECK_THROWS_AS(parse_tuple("x", Group::T), FormatError);
  }

  TEST_CASE("names") {
    for (auto g : {Group::T, Group::SO2, Group::O3, Group::O3F}) CHECK(parse_group(group_name(g)) == g);
    for (auto p : {Norm::One, Norm::Two, Norm::Inf}) CHECK(parse_norm(norm_name(p)) == p);
    CHECK_THROWS_AS(parse_group("SO3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_norm("3"), std::invalid_argument);
  }
}
