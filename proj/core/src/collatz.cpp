#include "onerel/collatz.hpp"

#include <set>

#include "onerel/classify.hpp"

namespace onerel {

  namespace {
    std::optional<CollatzSystem> shape(Presentation const& p) {
      if (p.rhs().size() != 1 || p.lhs().size() < 2) {
        return std::nullopt;
      }
      Letter      a = p.rhs()[0];
      Word const& w = p.lhs();
      if (w.front() != a || w.back() == a) {
        return std::nullopt;
      }
      Letter b = w.back();
      for (auto x : w) {
        if (x != a && x != b) {
          return std::nullopt;
        }
      }
      CollatzSystem s;
      s.presentation = p;
      s.a            = a;
      s.b            = b;
      s.u            = w.substr(1, w.size() - 2);
      s.L            = s.u.size();
      s.K            = 0;
      for (auto x : s.u) {
        s.K = s.K * 2 + (x == a ? 1 : 0);
      }
      return s;
    }

    std::string show(Word const& w) {
      return w.empty() ? std::string("ε") : to_string(w);
    }
  }  // namespace

  CollatzSystem build_system(Presentation const& p) {
    if (auto s = shape(p)) {
      return *s;
    }
    if (auto s = shape(reverse_presentation(p))) {
      s->reversed = true;
      return *s;
    }
    throw precondition_error("relation " + to_string(p.lhs()) + " = "
                             + to_string(p.rhs()) + " is not of the form a.u.b = a");
  }

  std::optional<Natural> numeric_view(CollatzSystem const& s, Word const& w) {
    if (w.empty() || w.front() != s.a) {
      return std::nullopt;
    }
    Natural n = 0;
    for (auto x : w) {
      n = n * 2 + (x == s.a ? 1 : 0);
    }
    return n;
  }

  StepResult step(CollatzSystem const& s, PairState const& st) {
    StepResult r;
    Word const& x = st.x;
    Word const& y = st.y;
    if (x == y) {
      r.terminal = Terminal::success;
      return r;
    }
    // Both relation sides are nonempty, so only 1 equals 1.
    if (x.empty() || y.empty()) {
      r.terminal = Terminal::failure;
      return r;
    }
    if ((x.size() == 1 && y.ends_with(x)) || (y.size() == 1 && x.ends_with(y))) {
      r.terminal = Terminal::failure;
      return r;
    }
    if (x.back() == y.back()) {
      r.kind = PairMove::cancel;
      r.next = PairState{x.prefix(x.size() - 1), y.prefix(y.size() - 1)};
      return r;
    }
    if (x.back() == s.b) {
      r.kind = PairMove::transform;
      r.next = PairState{x.prefix(x.size() - 1), y + s.u};
      return r;
    }
    r.kind = PairMove::flip;
    r.next = PairState{y, x};
    return r;
  }

  char const* to_string(RunOutcome r) noexcept {
    switch (r) {
      case RunOutcome::success:
        return "success";
      case RunOutcome::failure:
        return "failure";
      case RunOutcome::loop_exact:
        return "loop_exact";
      case RunOutcome::loop_heuristic:
        return "loop_heuristic";
      case RunOutcome::budget:
        return "budget";
    }
    return "?";
  }

  Verdict RunResult::verdict(bool strict) const {
    switch (outcome) {
      case RunOutcome::success:
        return via("collatz", Verdict::equal(Certificate{CertificateKind::reduction,
                                                         detail, {}}));
      case RunOutcome::failure:
        return via("collatz", Verdict::not_equal(Certificate{
                                  CertificateKind::invariant, detail, {}}));
      case RunOutcome::loop_exact:
        return via("collatz", Verdict::not_equal(Certificate{
                                  CertificateKind::loop_exact, detail, {}}));
      case RunOutcome::loop_heuristic: {
        Verdict v = Verdict::not_equal(
            Certificate{CertificateKind::loop_heuristic, detail, {}},
            Confidence::heuristic);
        return via("collatz", strict ? demote_heuristic(v) : v);
      }
      case RunOutcome::budget:
        break;
    }
    return via("collatz", Verdict::unknown(detail));
  }

  RunResult run_trace(CollatzSystem const& s,
                      Word const&          x,
                      Word const&          y,
                      std::size_t          max_steps) {
    RunResult out;
    out.states.push_back(PairState{x, y});
    std::set<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>> seen;
    auto key = [](PairState const& st) {
      std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> k;
      for (auto l : st.x) {
        k.first.push_back(l.id());
      }
      for (auto l : st.y) {
        k.second.push_back(l.id());
      }
      return k;
    };
    Word const single_a{s.a};
    Natural    modulus = Natural(1) << s.L;
    seen.insert(key(out.states.back()));
    for (std::size_t i = 0; i < max_steps; ++i) {
      auto r = step(s, out.states.back());
      if (r.terminal) {
        out.outcome = *r.terminal == Terminal::success ? RunOutcome::success
                                                       : RunOutcome::failure;
        out.detail  = std::string(*r.terminal == Terminal::success ? "terminated "
                                                                     "successfully"
                                                                   : "terminated "
                                                                     "unsuccessfully")
                     + " after " + std::to_string(i) + " steps";
        return out;
      }
      out.states.push_back(*r.next);
      auto const& cur = out.states.back();
      if (!seen.insert(key(cur)).second) {
        out.outcome = RunOutcome::loop_exact;
        out.detail  = "pair " + render_state(s, cur) + " recurred";
        return out;
      }
      if (s.L > 0 && cur.y == single_a) {
        auto xn = numeric_view(s, cur.x);
        for (std::size_t j = 0; xn && j + 1 < out.states.size(); ++j) {
          auto const& old = out.states[j];
          if (old.y != single_a) {
            continue;
          }
          auto xo = numeric_view(s, old.x);
          if (xo && *xn > *xo && (*xn - *xo) % modulus == 0) {
            out.outcome = RunOutcome::loop_heuristic;
            out.detail  = xn->str() + " ≡ " + xo->str() + " mod 2^"
                         + std::to_string(s.L) + " with second word a";
            return out;
          }
        }
      }
    }
    out.outcome = RunOutcome::budget;
    out.detail  = "step budget exhausted";
    return out;
  }

  std::string render_state(CollatzSystem const& s, PairState const& st) {
    auto num = [&s](Word const& w) {
      if (w.empty()) {
        return std::string("ε");
      }
      auto n = numeric_view(s, w);
      return n ? n->str() : std::string("-");
    };
    return "(" + show(st.x) + ", " + show(st.y) + ")  [num: (" + num(st.x) + ", "
           + num(st.y) + ")]";
  }

  std::pair<Natural, Natural> g_function(CollatzSystem const& s,
                                         Natural const&       x,
                                         Natural const&       y) {
    bool xodd = (x & 1) != 0;
    bool yodd = (y & 1) != 0;
    if (xodd == yodd) {
      return {x >> 1, y >> 1};
    }
    if (!xodd) {
      return {x >> 1, (y << s.L) + s.K};
    }
    return {y, x};
  }

  std::vector<AdianKind> guba_profile(Presentation const& p,
                                      Word const&         w,
                                      std::size_t         n,
                                      AdianBudget const&  budget) {
    if (p.special() || !left_cycle_free(p) || p.rhs().size() != 1) {
      throw precondition_error("guba_profile needs a relation b.u.a = a");
    }
    Letter                 a = p.rhs()[0];
    std::vector<AdianKind> out;
    Word                   cur = w;
    for (std::size_t k = 1; k <= n; ++k) {
      if (!out.empty() && out.back() != AdianKind::divisible) {
        out.push_back(out.back());
        continue;
      }
      auto r = adian_divisibility(cur, a, p, budget);
      out.push_back(r.kind);
      if (r.kind == AdianKind::divisible) {
        cur = r.witness;
      }
    }
    return out;
  }

}  // namespace onerel
