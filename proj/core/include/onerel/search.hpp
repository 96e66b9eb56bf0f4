#pragma once

#include <cstddef>
#include <optional>

#include "onerel/verdict.hpp"

namespace onerel {

  struct SearchBudget {
    std::size_t max_nodes       = 200000;
    // 0 means max(|u|, |v|) + 2 * |lhs|.
    std::size_t max_word_length = 0;
    std::size_t max_depth       = 256;
  };

  enum class BfsKind { equal, not_equal_closed, unknown };

  struct BfsResult {
    BfsKind              kind = BfsKind::unknown;
    std::optional<Trace> trace;
    std::size_t          nodes = 0;
    std::string          detail;
  };

  // Bidirectional breadth-first search over elementary transformations.
  // not_equal_closed only when one class was enumerated completely: no word
  // was skipped by the length cap and no limit was hit.
  BfsResult bfs_decide(Word const&         u,
                       Word const&         v,
                       Presentation const& p,
                       SearchBudget const& b = {});

  Verdict to_verdict(BfsResult const& r);

  // Shortest derivation length from w to any word beginning with x, or
  // nullopt if none within the budget.
  std::optional<std::size_t> bfs_prefix_distance(Word const&         w,
                                                 Letter              x,
                                                 Presentation const& p,
                                                 SearchBudget const& b = {});

  // Requires |lhs| == |rhs|. Complete.
  Verdict equal_length_decide(Word const& u, Word const& v, Presentation const& p);

  // Requires |lhs| > |rhs| and lhs self-overlap free. Complete.
  Verdict sof_rewrite_decide(Word const& u, Word const& v, Presentation const& p);

  // Leftmost-innermost lhs -> rhs rewriting to an irreducible word; the trace
  // runs from w to the result.
  Trace rewrite_to_normal_form(Word const& w, Presentation const& p);

}  // namespace onerel
