#include <doctest.h>

#include "helpers.hpp"

using namespace onerel;
using test::P;
using test::S;
using test::W;

TEST_CASE("prefix decomposition") {
  auto p = P("a,b | baababa = aba");
  auto d = prefix_decompose(W(p, "abbaaababab"), p);
  CHECK(to_string(d) == "ab | baa | [aba] bab");
  CHECK(d.reassemble() == W(p, "abbaaababab"));
  auto q = P("a,b,c | ab = ba");
  auto h = prefix_decompose(W(q, "abbc"), q);
  CHECK(S(*h.head) == "ab");
  auto dead = prefix_decompose(W(q, "cab"), q);
  CHECK(dead.headless());
  CHECK(S(dead.tail) == "cab");
}

TEST_CASE("divisibility outcomes") {
  auto p = P("a,b | baababa = aba");
  auto r = adian_divisibility(W(p, "abbaaababab"), Letter("b"), p);
  CHECK(r.kind == AdianKind::divisible);
  CHECK(S(r.witness) == "aabababaababababab");
  CHECK(is_valid(r.trace, p));
  CHECK(r.trace.end == Word{Letter("b")} + r.witness);
  auto loop = adian_divisibility(W(P("a,b | baabbaa = a"), "bbaaa"), Letter("a"),
                                 P("a,b | baabbaa = a"));
  CHECK(loop.kind == AdianKind::loop_heuristic);
  auto q = P("a,b,c | ab = ba");
  CHECK(adian_divisibility(W(q, "cab"), Letter("a"), q).kind == AdianKind::headless);
}

TEST_CASE("word problem through divisibility") {
  auto p = P("a,b | baababa = aba");
  auto v = solve_left_cycle_free(W(p, "abbaaababab"),
                                 W(p, "baabababaababababab"), p);
  CHECK(v.outcome == Outcome::equal);
  REQUIRE(v.certificate.trace);
  CHECK(is_valid(*v.certificate.trace, p));
  auto strict = solve_left_cycle_free(W(P("a,b | baabbaa = a"), "bbaaa"),
                                      W(P("a,b | baabbaa = a"), "a"),
                                      P("a,b | baabbaa = a"), AdianOptions{{}, true});
  CHECK(strict.confidence != Confidence::heuristic);
  auto r = P("a,b | abaab = aba");
  auto m = solve_right_cycle_free(W(r, "abaabb"), W(r, "abab"), r);
  CHECK(m.outcome == Outcome::equal);
  REQUIRE(m.certificate.trace);
  CHECK(is_valid(*m.certificate.trace, r));
}
