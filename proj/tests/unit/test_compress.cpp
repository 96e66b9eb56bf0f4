#include <doctest.h>

#include "helpers.hpp"

using namespace onerel;
using test::P;
using test::S;
using test::W;

TEST_CASE("weak compression") {
  auto wc = weak_compress(P("a,b | abbaabbbabbbab = abbaab"));
  REQUIRE(wc);
  CHECK(isomorphic_up_to_renaming(wc->left_monoid(), P("c,d | cdd = c")));
  auto const& src = wc->source();
  Word        w   = W(src, "abbbabbab");
  CHECK(wc->decode(wc->encode(w)) == w);
  CHECK_FALSE(weak_compress(P("a,b | ab = 1")));
}

TEST_CASE("strong compression windows") {
  auto sc = strong_compress(P("a,b | abaababb = abbaabb"));
  REQUIRE(sc);
  CHECK(sc->k() == 3);
  auto const& p = sc->source();
  CHECK(sc->window_index(W(p, "aaa")) == 1);
  CHECK(sc->window_index(W(p, "bbb")) == 8);
  CHECK(sc->window_letter(W(p, "aba")).name() == "e3");
  CHECK(S(sc->window_of(Letter("e6"))) == "bab");
  Word w = W(p, "abbab");
  CHECK(sc->decode(sc->encode(w)) == w);
  CHECK(sc->encode(W(p, "ab")).empty());
}

TEST_CASE("collapse keeps lengths") {
  auto [map, q] = collapse_generators(P("a,b,c | acb = bc"));
  CHECK(q.lhs().size() == 3);
  CHECK(q.rhs().size() == 2);
  CHECK(map.collapsed.name() == "c1");
  CHECK(left_cycle_free(q));
}

TEST_CASE("reduction pipeline") {
  auto r = reduce_to_canonical(P("a,b,c,d | abdadadacbaca = abdadabdaca"));
  REQUIRE(r.steps.size() == 4);
  CHECK(r.steps[1].after.lhs().size() == 4);
  CHECK(isomorphic_up_to_renaming(r.final, P("a,b | baaa = aaa")));
}

TEST_CASE("decide through compression") {
  auto   p  = P("a,b | abbaabbbabbbab = abbaab");
  auto   wc = weak_compress(p);
  REQUIRE(wc);
  Solver s  = [](Presentation const& q, Word const& u, Word const& v) {
    return to_verdict(bfs_decide(u, v, q));
  };
  auto v = decide_weak(*wc, p.lhs(), p.rhs(), s);
  CHECK(v.outcome == Outcome::equal);
  auto n = decide_weak(*wc, W(p, "a"), W(p, "b"), s);
  CHECK(n.outcome == Outcome::not_equal);
}
