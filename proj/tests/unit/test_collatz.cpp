#include <doctest.h>

#include "helpers.hpp"

using namespace onerel;
using test::P;
using test::S;
using test::W;

TEST_CASE("system parameters") {
  auto s = build_system(P("a,b | abaab = a"));
  CHECK(s.K == 3);
  CHECK(s.L == 3);
  CHECK_FALSE(s.reversed);
  auto r = build_system(P("a,b | baaba = a"));
  CHECK(r.reversed);
  CHECK_THROWS_AS(build_system(P("a,b | ab = ba")), precondition_error);
}

TEST_CASE("G function") {
  auto s = build_system(P("a,b | abaab = a"));
  CHECK(g_function(s, 54, 1) == std::pair<Natural, Natural>{27, 11});
  CHECK(g_function(s, 2, 2) == std::pair<Natural, Natural>{1, 1});
  auto t = build_system(P("a,b | aabbaab = a"));
  CHECK(t.K == 19);
  CHECK(g_function(t, 28, 1) == std::pair<Natural, Natural>{14, 51});
}

TEST_CASE("pair dynamics") {
  auto p = P("a,b | abaab = a");
  auto s = build_system(p);
  CHECK(render_state(s, PairState{W(p, "aabaab"), W(p, "a")})
        == "(aabaab, a)  [num: (54, 1)]");
  CHECK(step(s, PairState{W(p, "ab"), W(p, "ab")}).terminal == Terminal::success);
  CHECK(step(s, PairState{W(p, "aa"), W(p, "a")}).terminal == Terminal::failure);
  auto r = run_trace(s, W(p, "aabaab"), W(p, "a"));
  CHECK(r.outcome == RunOutcome::failure);
  for (std::size_t i = 2; i < r.states.size(); ++i) {
    bool flip1 = r.states[i - 1].x == r.states[i - 2].y;
    bool flip2 = r.states[i].x == r.states[i - 1].y;
    CHECK_FALSE((flip1 && flip2 && r.states[i] == r.states[i - 2]));
  }
  auto strict = run_trace(build_system(P("a,b | aabbaab = a")),
                          W(p, "aaabb"), W(p, "a"))
                    .verdict(true);
  CHECK(strict.outcome == Outcome::unknown);
}

TEST_CASE("divisibility profile") {
  auto prof = guba_profile(P("a,b | baa = a"), test::W(P("a,b | baa = a"), "ba"), 3);
  CHECK(prof.size() == 3);
}
