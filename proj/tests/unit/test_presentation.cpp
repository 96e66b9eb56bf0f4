#include <doctest.h>

#include "helpers.hpp"

using namespace onerel;
using test::P;
using test::S;
using test::W;

TEST_CASE("canonical orientation") {
  auto p = P("a,b | a = abb");
  CHECK(S(p.lhs()) == "abb");
  CHECK(S(p.rhs()) == "a");
  auto q = P("a,b | ba = ab");
  CHECK(S(q.lhs()) == "ab");
  CHECK(q.equal_length());
  CHECK(P("a,b | ab = 1").special());
  CHECK(to_string(P("a,b | 1 = ab")) == "a,b | ab = 1");
}

TEST_CASE("presentation parse errors") {
  CHECK_THROWS(P("a,b | 1 = 1"));
  CHECK_THROWS(P("a,b | ab = c"));
  CHECK_THROWS_AS(P("a,b | ab = b = a"), parse_error);
  CHECK_THROWS_AS(P("a,b | a b = a"), parse_error);
}

TEST_CASE("reversal and renaming") {
  auto p = P("a,b | aab = ba");
  auto r = reverse_presentation(p);
  CHECK(S(r.lhs()) == "baa");
  CHECK(S(r.rhs()) == "ab");
  CHECK(reverse_presentation(r) == p);
  CHECK(isomorphic_up_to_renaming(P("a,b | abb = a"), P("c,d | cdd = c")));
  CHECK(isomorphic_up_to_renaming(P("a,b | abb = a"), P("a,b | baa = b")));
  CHECK_FALSE(isomorphic_up_to_renaming(P("a,b | abb = a"), P("a,b | aab = a")));
}

TEST_CASE("elementary steps") {
  auto p = P("a,b | ab = ba");
  Word w = W(p, "aab");
  CHECK(S(apply_step(w, p, {1, Direction::forward})) == "aba");
  CHECK_THROWS(apply_step(w, p, {0, Direction::forward}));
  auto n = neighbours(w, p);
  CHECK(n.size() == 1);
  auto s = P("a,b | ab = 1");
  CHECK(neighbours(W(s, "a"), s).size() == 2);  // insert ab before or after a
}

TEST_CASE("traces compose, invert and mirror") {
  auto  p = P("a,b | aab = ba");
  Trace t = identity_trace(W(p, "aaab"));
  push_step(t, p, {1, Direction::forward});
  CHECK(S(t.end) == "aba");
  CHECK(is_valid(t, p));
  Trace inv = inverse(t, p);
  CHECK(inv.start == t.end);
  CHECK(inv.end == t.start);
  CHECK(is_valid(inv, p));
  Trace both = concatenate(t, inv);
  CHECK(both.length() == 2);
  CHECK(both.end == both.start);
  Trace e = embed(t, W(p, "b"), W(p, "a"));
  CHECK(S(e.start) == "baaaba");
  CHECK(is_valid(e, p));
  auto  r = reverse_presentation(p);
  Trace m = mirror(t, p, r);
  CHECK(m.start == t.start.reversed());
  CHECK(m.end == t.end.reversed());
  CHECK(is_valid(m, r));
  CHECK_THROWS(concatenate(t, t));
}
