#include <doctest.h>

#include "helpers.hpp"

using namespace onerel;
using test::P;
using test::S;
using test::W;

TEST_CASE("side graphs") {
  CHECK(left_cycle_free(P("a,b | baaba = aba")));
  CHECK_FALSE(right_cycle_free(P("a,b | baaba = aba")));
  CHECK_FALSE(left_cycle_free(P("a,b | ab = aab")));  // loop at a
  CHECK_THROWS_AS(left_cycle_free(P("a,b | ab = 1")), precondition_error);
}

TEST_CASE("self overlap") {
  auto p = P("a,b | a = b");
  CHECK(is_self_overlap_free(W(p, "aab")));
  CHECK_FALSE(is_self_overlap_free(W(p, "aba")));
  CHECK(is_self_overlap_free(W(p, "a")));
  CHECK(longest_border(W(p, "abaab")) == 2);
  CHECK(is_primitive(W(p, "aab")));
  CHECK_FALSE(is_primitive(W(p, "abab")));
}

TEST_CASE("small overlap index") {
  auto s1 = small_overlap_index(P("a,b | baaba = aba"));
  REQUIRE(s1.index);
  CHECK(*s1.index == 1);
  auto s2 = small_overlap_index(P("a,b | aabb = baba"));
  REQUIRE(s2.index);
  CHECK(*s2.index == 2);
}

TEST_CASE("classification flags") {
  auto c = classify(P("a,b | aba = a"));
  CHECK(c.subspecial);
  CHECK_FALSE(c.monadic);
  CHECK(classify(P("a,b | baaba = a")).monadic);
  CHECK(c.has_nontrivial_idempotent == Tri::yes);
  auto s = classify(P("a,b | ab = 1"));
  CHECK(s.special);
  CHECK_FALSE(s.left_cycle_free.has_value());
  CHECK(s.group_sufficient == Tri::unknown);
  CHECK(classify(P("a,b | aba = 1")).group_sufficient == Tri::yes);
  auto t = classify(P("a,b | abab = 1"));
  REQUIRE(t.torsion);
  CHECK(t.torsion->m == 2);
  CHECK(classify(P("a,b | ab = ba")).equal_length);
  CHECK(classify(P("a,b | aab = b")).lhs_sof);
}
