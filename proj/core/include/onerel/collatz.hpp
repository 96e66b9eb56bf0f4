#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "onerel/adian.hpp"

namespace onerel {

  using Natural = boost::multiprecision::cpp_int;

  // <a,b | a.u.b = a>. K is u read in binary with a = 1, b = 0; L = |u|.
  struct CollatzSystem {
    Presentation presentation;
    Letter       a;
    Letter       b;
    Word         u;
    Natural      K;
    std::size_t  L        = 0;
    bool         reversed = false;  // built from b.u'.a = a
  };

  CollatzSystem build_system(Presentation const& p);

  struct PairState {
    Word x;
    Word y;

    friend bool operator==(PairState const&, PairState const&) = default;
  };

  // Defined when the word begins with a.
  std::optional<Natural> numeric_view(CollatzSystem const& s, Word const& w);

  enum class PairMove { cancel, transform, flip };

  enum class Terminal { success, failure };

  struct StepResult {
    std::optional<PairState> next;      // set unless terminal
    std::optional<Terminal>  terminal;  // set when the state is a base case
    PairMove                 kind = PairMove::cancel;
  };

  StepResult step(CollatzSystem const& s, PairState const& st);

  enum class RunOutcome { success, failure, loop_exact, loop_heuristic, budget };
  char const* to_string(RunOutcome r) noexcept;

  struct RunResult {
    RunOutcome             outcome = RunOutcome::budget;
    std::vector<PairState> states;  // including the start
    std::string            detail;

    Verdict verdict(bool strict = false) const;
  };

  RunResult run_trace(CollatzSystem const& s,
                      Word const&          x,
                      Word const&          y,
                      std::size_t          max_steps = 10000);

  // "(aabaab, a)  [num: (54, 1)]"
  std::string render_state(CollatzSystem const& s, PairState const& st);

  std::pair<Natural, Natural> g_function(CollatzSystem const& s,
                                         Natural const&       x,
                                         Natural const&       y);

  // Left divisibility of w by a^k for k = 1..n in the left cycle-free form
  // b.u'.a = a; entry k-1 holds the outcome for a^k.
  std::vector<AdianKind> guba_profile(Presentation const& p,
                                      Word const&         w,
                                      std::size_t         n,
                                      AdianBudget const&  budget = {});

}  // namespace onerel
