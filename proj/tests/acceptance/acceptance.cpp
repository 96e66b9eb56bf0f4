// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "onerel/onerel.hpp"
#include "oracles.hpp"

using namespace onerel;

namespace {

  using Clock = std::chrono::steady_clock;

  // Wall-clock limits per criterion, seconds.
  constexpr double golden_limit      = 1.0;
  constexpr double equivalence_limit = 600.0;
  constexpr double property_limit    = 300.0;
  constexpr double shortest_limit    = 600.0;

  // Oracle closure parameters for the equivalence sweep.
  constexpr std::size_t query_max_length  = 6;
  constexpr std::size_t closure_node_cap  = 60000;
  constexpr std::size_t fallback_node_cap = 20000;
  // Route budgets for the sweep; exhaustion yields Unknown, which is not
  // compared.
  constexpr AdianBudget sweep_adian{100, 5000};
  constexpr AdianBudget shortest_adian{1000, 100000};
  constexpr std::size_t sweep_nodes = 20000;

  struct Check {
    bool               ok = true;
    std::ostringstream why;

    void expect(bool cond, std::string const& what) {
      if (!cond) {
        if (ok) {
          why << what;
        } else if (why.tellp() < 400) {
          why << "; " << what;
        }
        ok = false;
      }
    }
  };

  Presentation P(std::string const& s) {
    return parse_presentation(s);
  }

  Word W(Presentation const& p, std::string const& s) {
    return s.empty() ? Word() : parse_word(s, p.alphabet());
  }

  std::string code_string(Code const& c) {
    std::string out;
    for (auto const& w : c.words) {
      out += (out.empty() ? "" : ",") + to_string(w);
    }
    return "{" + out + "}";
  }

  std::string rel(Presentation const& p) {
    return to_string(p.lhs()) + " = " + to_string(p.rhs());
  }

  // Plain string of a word whose letters are single characters.
  std::string plain(Word const& w) {
    std::string out;
    for (auto x : w) {
      out += x.name();
    }
    return out;
  }

  Presentation from_pair(std::string const& l, std::string const& r) {
    return P("a,b | " + (l.empty() ? std::string("1") : l) + " = "
             + (r.empty() ? std::string("1") : r));
  }

  int failures = 0;

  void report(int n, std::string const& title, Check const& c, double seconds,
              double limit) {
    bool in_time = seconds < limit;
    bool pass    = c.ok && in_time;
    failures += !pass;
    std::printf("[%s] %2d %s (%.3fs, limit %.0fs)", pass ? "PASS" : "FAIL", n,
                title.c_str(), seconds, limit);
    if (!c.ok) {
      std::printf(": %s", c.why.str().c_str());
    } else if (!in_time) {
      std::printf(": over time limit");
    }
    std::printf("\n");
    std::fflush(stdout);
  }

  void run(int n, std::string const& title, double limit,
           std::function<void(Check&)> const& body) {
    Check c;
    auto  t0 = Clock::now();
    try {
      body(c);
    } catch (std::exception const& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(Clock::now() - t0).count();
    report(n, title, c, s, limit);
  }

  ////////////////////////////////////////////////////////////////////////
  // 1-7: golden examples
  ////////////////////////////////////////////////////////////////////////

  void golden_code(Check& c) {
    auto p1 = P("a,b | abbaab = 1");
    c.expect(code_string(sof_code(p1.lhs())) == "{a,b}",
             "C(abbaab) = " + code_string(sof_code(p1.lhs())));
    auto p2 = P("a,b,c,d | abcabdab = 1");
    c.expect(code_string(sof_code(p2.lhs())) == "{ab,cabd}",
             "C(abcabdab) = " + code_string(sof_code(p2.lhs())));
    auto g = unit_group_presentation(p2);
    c.expect(to_string(g) == "x1,x2 | x1.x2.x1", "unit group " + to_string(g));
    auto o = builtin_oracle(g);
    c.expect(o && o->description == "free group of rank 1",
             "oracle " + (o ? o->description : std::string("none")));
  }

  void golden_weak(Check& c) {
    auto w1 = weak_compress(P("a,b | abbaabbbabbbab = abbaab"));
    c.expect(w1.has_value(), "first presentation not weakly compressible");
    if (w1) {
      c.expect(isomorphic_up_to_renaming(w1->left_monoid(), P("c,d | cdd = c")),
               "L(M) = " + to_string(w1->left_monoid()));
    }
    auto w2 = weak_compress(P("a,b | abaabbab = abbabaab"));
    c.expect(w2.has_value(), "second presentation not weakly compressible");
    if (w2) {
      c.expect(isomorphic_up_to_renaming(w2->left_monoid(), P("c,d | cd = dc")),
               "L(M) = " + to_string(w2->left_monoid()));
    }
  }

  void golden_strong(Check& c) {
    auto s = strong_compress(P("a,b | abaababb = abbaabb"));
    c.expect(s.has_value(), "not strongly compressible");
    if (!s) {
      return;
    }
    c.expect(s->k() == 3, "k = " + std::to_string(s->k()));
    c.expect(rel(s->m_tau()) == "e3.e5.e2.e3.e6.e4 = e4.e7.e5.e2.e4",
             "M_tau relation " + rel(s->m_tau()));
    c.expect(left_cycle_free(s->m_tau()), "M_tau has left cycles");
  }

  void golden_pipeline(Check& c) {
    auto r = reduce_to_canonical(P("a,b,c,d | abdadadacbaca = abdadabdaca"));
    std::vector<StepKind> want{StepKind::weak, StepKind::strong, StepKind::reverse,
                               StepKind::collapse};
    std::string kinds;
    for (auto const& s : r.steps) {
      kinds += std::string(kinds.empty() ? "" : ",") + to_string(s.kind);
    }
    c.expect(r.steps.size() == want.size(), "steps " + kinds);
    for (std::size_t i = 0; i < std::min(want.size(), r.steps.size()); ++i) {
      c.expect(r.steps[i].kind == want[i], "steps " + kinds);
    }
    if (r.steps.size() >= 2) {
      auto const* wc = std::get_if<WeakCompression>(&r.steps[0].record);
      c.expect(wc && to_string(wc->alpha()) == "a", "alpha is not a");
      auto const* sc = std::get_if<StrongCompression>(&r.steps[1].record);
      c.expect(sc && sc->k() == 2, "k is not 2");
      c.expect(rel(r.steps[1].after) == "e2.e6.e7.e12 = e2.e5.e4",
               "strong step gives " + rel(r.steps[1].after));
    }
    c.expect(isomorphic_up_to_renaming(r.final, P("a,b | baaa = aaa")),
             "final " + to_string(r.final));
  }

  void golden_adian_success(Check& c) {
    auto p = P("a,b | baababa = aba");
    auto b = Letter("b");
    auto r = adian_divisibility(W(p, "abbaaababab"), b, p);
    c.expect(r.kind == AdianKind::divisible, std::string("outcome ") + to_string(r.kind));
    c.expect(to_string(r.witness) == "aabababaababababab",
             "witness " + to_string(r.witness));
    c.expect(is_valid(r.trace, p), "trace does not replay");
    c.expect(r.replacements == 6,
             "head replacements " + std::to_string(r.replacements) + ", expected 6");
    std::vector<std::string> const expected{
        "ab | baa | [aba] bab → abbaabaabababab",
        "ab | baaba | [aba] babab → abbaababaababababab",
        "ab | [baababa] ababababab → ababaababababab",
        "ab | [aba] ababababab → abbaababaababababab",
        "ab | [baababa] ababababab → ababaababababab",
        "[aba] baababababab → baabababaababababab",
    };
    c.expect(r.lines == expected,
             "trace has " + std::to_string(r.lines.size())
                 + " lines; first mismatch at line "
                 + std::to_string([&] {
                     std::size_t i = 0;
                     while (i < r.lines.size() && i < expected.size()
                            && r.lines[i] == expected[i]) {
                       ++i;
                     }
                     return i + 1;
                   }()));
  }

  void golden_adian_loop(Check& c) {
    auto p = P("a,b | baabbaa = a");
    auto r = adian_divisibility(W(p, "bbaaa"), Letter("a"), p);
    c.expect(r.kind == AdianKind::loop_heuristic,
             std::string("outcome ") + to_string(r.kind));
    c.expect(r.lines.size() <= 4,
             "fired after " + std::to_string(r.lines.size()) + " iterations");
    cli::Options strict;
    strict.strict = true;
    auto lax = cli::run_command("a,b | baabbaa = a", "divides", {"bbaaa", "a"});
    auto str = cli::run_command("a,b | baabbaa = a", "divides", {"bbaaa", "a"}, strict);
    c.expect(lax.verdict == "not_divisible" && lax.confidence == "heuristic",
             "default mode gives " + lax.verdict);
    c.expect(str.verdict == "unknown", "strict mode gives " + str.verdict);
  }

  void golden_collatz(Check& c) {
    auto numeric = [](CollatzSystem const& s, RunResult const& r) {
      std::string out;
      for (auto const& st : r.states) {
        auto x = numeric_view(s, st.x);
        auto y = numeric_view(s, st.y);
        out += "(" + (x ? x->str() : "-") + "," + (y ? y->str() : "-") + ")";
      }
      return out;
    };
    auto p1 = P("a,b | abaab = a");
    auto s1 = build_system(p1);
    auto r1 = run_trace(s1, W(p1, "aabaab"), W(p1, "a"));
    c.expect(numeric(s1, r1) == "(54,1)(27,11)(13,5)(6,2)(3,1)",
             "first trace " + numeric(s1, r1));
    c.expect(r1.outcome == RunOutcome::failure,
             std::string("first outcome ") + to_string(r1.outcome));
    auto p2 = P("a,b | aabbaab = a");
    auto s2 = build_system(p2);
    auto r2 = run_trace(s2, W(p2, "aaabb"), W(p2, "a"));
    c.expect(numeric(s2, r2) == "(28,1)(14,51)(7,1651)(3,825)(1,412)(412,1)",
             "second trace " + numeric(s2, r2));
    c.expect(r2.outcome == RunOutcome::loop_heuristic,
             std::string("second outcome ") + to_string(r2.outcome));
    c.expect(s2.L == 5 && (Natural(412) - 28) % 32 == 0, "modulus check");
    // Numeric projection follows G on these runs.
    for (auto const* rr : {&r1, &r2}) {
      auto const& s = rr == &r1 ? s1 : s2;
      for (std::size_t i = 0; i + 1 < rr->states.size(); ++i) {
        auto x = numeric_view(s, rr->states[i].x);
        auto y = numeric_view(s, rr->states[i].y);
        auto nx = numeric_view(s, rr->states[i + 1].x);
        auto ny = numeric_view(s, rr->states[i + 1].y);
        if (x && y && nx && ny) {
          auto g = g_function(s, *x, *y);
          c.expect(g.first == *nx && g.second == *ny, "G disagrees at step "
                                                          + std::to_string(i));
        }
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // 8: oracle equivalence
  ////////////////////////////////////////////////////////////////////////

  struct RouteStats {
    std::size_t decided       = 0;
    std::size_t compared      = 0;
    std::size_t disagreements = 0;
    std::size_t bad_traces    = 0;
    double      seconds       = 0;
  };

  void equivalence(Check& c) {
    auto const rels    = oracle::relations("ab", 2, 8);
    auto const queries = oracle::words("ab", 0, query_max_length);
    std::map<std::string, RouteStats> stats;
    std::size_t                       presentations = 0;
    std::size_t                       oracle_unknown = 0;
    cli::Options                      opts;
    opts.adian         = sweep_adian;
    opts.bfs.max_nodes = sweep_nodes;
    AdianOptions const adian_opts{sweep_adian, false};
    Solver recurse = [&opts](Presentation const& q, Word const& a, Word const& b) {
      return cli::dispatch_solve(q, a, b, opts);
    };
    std::set<std::string> done;
    for (auto const& [l, r] : rels) {
      Presentation p = from_pair(l, r);
      if (!done.insert(to_string(p)).second) {
        continue;
      }
      ++presentations;
      std::string   pl = plain(p.lhs());
      std::string   pr = plain(p.rhs());
      oracle::Closure closure(pl, pr, query_max_length + 2 * pl.size(),
                              closure_node_cap);

      using Route = std::function<Verdict(Word const&, Word const&)>;
      std::vector<std::pair<std::string, Route>> routes;
      if (p.equal_length()) {
        routes.emplace_back("equal-length", [&p](Word const& u, Word const& v) {
          return equal_length_decide(u, v, p);
        });
      }
      if (p.lhs().size() > p.rhs().size() && is_self_overlap_free(p.lhs())) {
        routes.emplace_back("sof-rewrite", [&p](Word const& u, Word const& v) {
          return sof_rewrite_decide(u, v, p);
        });
      }
      std::optional<SpecialSolver> special;
      if (p.special()) {
        if (auto group = builtin_oracle(unit_group_presentation(p))) {
          special.emplace(p, *group);
          routes.emplace_back("special", [&special](Word const& u, Word const& v) {
            return special->decide(u, v);
          });
        }
      }
      auto wc = weak_compress(p);
      if (wc) {
        routes.emplace_back("weak", [&wc, &recurse](Word const& u, Word const& v) {
          return decide_weak(*wc, u, v, recurse);
        });
      }
      auto sc = strong_compress(p);
      if (sc) {
        routes.emplace_back("strong", [&sc, &recurse](Word const& u, Word const& v) {
          return decide_strong(*sc, u, v, recurse);
        });
      }
      if (!p.special() && left_cycle_free(p)) {
        routes.emplace_back("adian", [&](Word const& u, Word const& v) {
          return solve_left_cycle_free(u, v, p, adian_opts);
        });
      }
      if (!p.special() && right_cycle_free(p)) {
        routes.emplace_back("adian-reversed", [&](Word const& u, Word const& v) {
          return solve_right_cycle_free(u, v, p, adian_opts);
        });
      }
      if (routes.empty()) {
        continue;
      }
      if (std::getenv("ONEREL_ACCEPTANCE_PROGRESS")) {
        std::fprintf(stderr, "%zu %s\n", presentations, to_string(p).c_str());
      }
      for (std::size_t i = 0; i < queries.size(); ++i) {
        Word u = W(p, queries[i]);
        for (std::size_t j = i + 1; j < queries.size(); ++j) {
          Word v = W(p, queries[j]);
          std::optional<oracle::Closure::Answer> truth;
          for (auto const& [name, route] : routes) {
            auto    t0  = Clock::now();
            Verdict got = route(u, v);
            auto&   st  = stats[name];
            st.seconds += std::chrono::duration<double>(Clock::now() - t0).count();
            if (!got.decided()) {
              continue;
            }
            ++st.decided;
            if (got.outcome == Outcome::equal && got.certificate.trace) {
              auto const& t = *got.certificate.trace;
              if (!is_valid(t, p) || t.start != u || t.end != v) {
                ++st.bad_traces;
                c.expect(false, name + " trace invalid for " + queries[i] + " = "
                                    + queries[j] + " in " + to_string(p));
              }
            }
            if (!truth) {
              truth = closure.query(queries[i], queries[j]);
              // The search's automatic length cap never exceeds the closure's,
              // so an exhausted side leaves nothing for it to find.
              if (*truth == oracle::Closure::Answer::unknown
                  && !closure.exhausted(queries[i]) && !closure.exhausted(queries[j])) {
                SearchBudget b;
                b.max_nodes = fallback_node_cap;
                auto bfs    = bfs_decide(u, v, p, b);
                truth = bfs.kind == BfsKind::equal ? oracle::Closure::Answer::equal
                        : bfs.kind == BfsKind::not_equal_closed
                            ? oracle::Closure::Answer::not_equal
                            : oracle::Closure::Answer::unknown;
              }
              oracle_unknown += *truth == oracle::Closure::Answer::unknown;
            }
            if (*truth == oracle::Closure::Answer::unknown) {
              continue;
            }
            ++st.compared;
            bool says_equal = got.outcome == Outcome::equal;
            if (says_equal != (*truth == oracle::Closure::Answer::equal)) {
              ++st.disagreements;
              c.expect(false, name + " says " + to_string(got.outcome) + " for "
                                  + queries[i] + " vs " + queries[j] + " in "
                                  + to_string(p) + " ("
                                  + to_string(got.confidence) + ")");
            }
          }
        }
      }
    }
    std::printf("     presentations %zu, pairs undecided by search %zu\n",
                presentations, oracle_unknown);
    for (auto const& [name, st] : stats) {
      std::printf("     %-15s decided %8zu compared %8zu disagreements %zu bad "
                  "traces %zu, %.1fs\n",
                  name.c_str(), st.decided, st.compared, st.disagreements,
                  st.bad_traces, st.seconds);
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // 9: property suites
  ////////////////////////////////////////////////////////////////////////

  void properties(Check& c) {
    Alphabet ab = P("a,b | a = b").alphabet();
    // sof_code: order independence, biprefix, w in C*, SOF members.
    for (auto const& s : oracle::words("ab", 1, 10)) {
      Word w = parse_word(s, ab);
      Code first = sof_code(w);
      Code last  = sof_code(w, [](std::size_t n) { return n - 1; });
      Code mid   = sof_code(w, [](std::size_t n) { return n / 2; });
      c.expect(first.words == last.words && first.words == mid.words,
               "C(" + s + ") depends on overlap order");
      c.expect(first.is_biprefix(), "C(" + s + ") is not biprefix");
      std::vector<std::string> cw;
      for (auto const& x : first.words) {
        cw.push_back(plain(x));
        c.expect(oracle::self_overlap_free(plain(x)),
                 "C(" + s + ") member " + plain(x) + " overlaps itself");
      }
      for (std::size_t i = 0; i < cw.size(); ++i) {
        for (std::size_t j = 0; j < cw.size(); ++j) {
          if (i != j) {
            c.expect(!oracle::is_prefix(cw[i], cw[j])
                         && !oracle::is_suffix(cw[i], cw[j]),
                     "C(" + s + ") not biprefix by oracle");
          }
        }
      }
      c.expect(oracle::factorizations(s, cw) == 1, s + " not uniquely in C*");
    }
    // tau_k reconstruction and window ranks.
    for (std::size_t k = 1; k <= 3; ++k) {
      std::string ak(k - 1, 'a');
      auto src = P("a,b | " + ak + "bb" + ak + " = " + ak + "b" + ak);
      StrongCompression sc(src, W(src, ak), W(src, ak));
      c.expect(sc.k() == k, "k mismatch for k = " + std::to_string(k));
      for (auto const& s : oracle::words("ab", 0, 8)) {
        Word w   = W(src, s);
        Word enc = sc.encode(w);
        if (s.size() < k) {
          c.expect(enc.empty(), "tau_k of short word " + s + " is not empty");
          continue;
        }
        c.expect(enc.size() == s.size() - k + 1, "tau_k length for " + s);
        c.expect(sc.decode(enc) == w, "tau_k does not reconstruct " + s);
        for (std::size_t i = 0; i < enc.size(); ++i) {
          std::string window = s.substr(i, k);
          c.expect(enc[i].name() == "e" + std::to_string(oracle::lex_rank(window, "ab")),
                   "window " + window + " coded as " + enc[i].name());
        }
      }
    }
    // Cycle-freeness of M_tau; replay of every lifted derivation.
    std::set<std::string> done;
    for (auto const& [l, r] : oracle::relations("ab", 2, 10)) {
      Presentation p = from_pair(l, r);
      if (!done.insert(to_string(p)).second) {
        continue;
      }
      auto sc = strong_compress(p);
      if (!sc) {
        continue;
      }
      auto cs = sc->common_prefix().size();
      auto ds = sc->common_suffix().size();
      if (sc->m_tau().special()) {
        // An empty side contributes no edge to either graph.
        continue;
      }
      if (cs <= ds) {
        c.expect(left_cycle_free(sc->m_tau()), "M_tau of " + to_string(p)
                                                    + " has left cycles");
      }
      if (cs >= ds) {
        c.expect(right_cycle_free(sc->m_tau()), "M_tau of " + to_string(p)
                                                     + " has right cycles");
      }
    }
    // Collapse preserves side lengths and left cycle-freeness; the left
    // graph becomes connected.
    done.clear();
    for (auto const& [l, r] : oracle::relations("abc", 2, 7)) {
      auto p = P("a,b,c | " + (l.empty() ? std::string("1") : l) + " = "
                 + (r.empty() ? std::string("1") : r));
      if (!done.insert(to_string(p)).second || p.special() || !left_cycle_free(p)) {
        continue;
      }
      auto [map, q] = collapse_generators(p);
      c.expect(q.lhs().size() == p.lhs().size() && q.rhs().size() == p.rhs().size(),
               "collapse changes lengths for " + to_string(p));
      c.expect(left_cycle_free(q), "collapse introduces left cycles for "
                                       + to_string(p));
    }
    // Every Equal certificate from the dispatcher replays.
    cli::Options opts;
    auto         queries = oracle::words("ab", 0, 4);
    done.clear();
    for (auto const& [l, r] : oracle::relations("ab", 2, 6)) {
      Presentation p = from_pair(l, r);
      if (!done.insert(to_string(p)).second) {
        continue;
      }
      for (std::size_t i = 0; i < queries.size(); ++i) {
        for (std::size_t j = i + 1; j < queries.size(); ++j) {
          Word u = W(p, queries[i]);
          Word v = W(p, queries[j]);
          auto got = cli::dispatch_solve(p, u, v, opts);
          if (got.outcome == Outcome::equal && got.certificate.trace) {
            auto const& t = *got.certificate.trace;
            c.expect(is_valid(t, p) && t.start == u && t.end == v,
                     "certificate does not replay: " + queries[i] + " = "
                         + queries[j] + " in " + to_string(p));
          }
        }
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // 10: shortest proofs
  ////////////////////////////////////////////////////////////////////////

  void shortest(Check& c) {
    std::size_t instances = 0;
    std::size_t shorter   = 0;
    std::set<std::string> done;
    std::string first;
    for (auto const& [l, r] : oracle::relations("ab", 2, 8)) {
      Presentation p = from_pair(l, r);
      if (!done.insert(to_string(p)).second || p.special() || !left_cycle_free(p)) {
        continue;
      }
      std::string pl = plain(p.lhs());
      std::string pr = plain(p.rhs());
      for (auto const& s : oracle::words("ab", 1, query_max_length)) {
        for (char x : std::string("ab")) {
          auto res = adian_divisibility(W(p, s), Letter(std::string(1, x)), p,
                                        shortest_adian, false);
          if (res.kind != AdianKind::divisible) {
            continue;
          }
          std::size_t cap = std::max(s.size(), res.trace.end.size()) + 2 * pl.size();
          for (auto const& w : replay(res.trace, p)) {
            cap = std::max(cap, w.size() + pl.size());
          }
          auto best = oracle::prefix_distance(s, x, pl, pr, cap, fallback_node_cap);
          if (!best) {
            continue;
          }
          ++instances;
          if (*best < res.replacements) {
            ++shorter;
            if (first.empty()) {
              first = s + " by " + x + " in " + to_string(p) + ": "
                      + std::to_string(res.replacements) + " vs "
                      + std::to_string(*best);
            }
          }
        }
      }
    }
    std::printf("     divisible instances %zu, strictly shorter derivations %zu\n",
                instances, shorter);
    c.expect(shorter == 0, std::to_string(shorter) + " instances beat the head "
                                                     "replacement count, e.g. " + first);
  }

}  // namespace

int main() {
  run(1, "golden C(w) and unit group", golden_limit, golden_code);
  run(2, "golden weak compression", golden_limit, golden_weak);
  run(3, "golden strong compression", golden_limit, golden_strong);
  run(4, "golden reduction pipeline", golden_limit, golden_pipeline);
  run(5, "golden divisibility by head replacement", golden_limit,
      golden_adian_success);
  run(6, "golden head replacement loop", golden_limit, golden_adian_loop);
  run(7, "golden Collatz traces", golden_limit, golden_collatz);
  run(8, "route verdicts agree with search", equivalence_limit, equivalence);
  run(9, "property suites", property_limit, properties);
  run(10, "head replacement proofs are shortest", shortest_limit, shortest);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures;
}
