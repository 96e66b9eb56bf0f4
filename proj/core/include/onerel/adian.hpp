#pragma once

#include <optional>
#include <string>
#include <vector>

#include "onerel/verdict.hpp"

namespace onerel {

  // blocks . head . tail reassembles the decomposed word.
  struct PrefixDecomposition {
    std::vector<Word>        blocks;
    std::optional<Word>      head;
    std::optional<Direction> head_side;  // forward: head is lhs
    std::size_t              head_position = 0;
    Word                     tail;

    bool headless() const noexcept {
      return !head.has_value();
    }
    Word reassemble() const;
  };

  // Requires a left cycle-free presentation with nonempty sides.
  PrefixDecomposition prefix_decompose(Word const& w, Presentation const& p);

  // "ab | bab | [aba] b"
  std::string to_string(PrefixDecomposition const& d);

  struct AdianBudget {
    std::size_t max_replacements = 10000;
    std::size_t max_letters      = 1000000;
  };

  enum class AdianKind {
    divisible,
    headless,
    loop_exact,
    loop_heuristic,
    budget_exhausted
  };

  char const* to_string(AdianKind k) noexcept;

  struct AdianOutcome {
    AdianKind                kind = AdianKind::budget_exhausted;
    Word                     witness;       // divisible only
    std::size_t              replacements = 0;
    std::size_t              letters      = 0;  // counted against max_letters
    Trace                    trace;         // input -> current word
    std::vector<std::string> lines;         // one per head replacement
    std::string              detail;

    bool decisive() const noexcept {
      return kind == AdianKind::divisible || kind == AdianKind::headless
             || kind == AdianKind::loop_exact;
    }
  };

  // `lines` is filled only when record_lines is set.
  AdianOutcome adian_divisibility(Word const&         w,
                                  Letter              x,
                                  Presentation const& p,
                                  AdianBudget const&  budget       = {},
                                  bool                record_lines = true);

  struct AdianOptions {
    AdianBudget budget;
    bool        strict = false;  // heuristic loops give Unknown
  };

  // Word problem in a left cycle-free presentation by first-letter peeling.
  // The budget covers the whole solve, all divisions included.
  Verdict solve_left_cycle_free(Word const&         u,
                                Word const&         v,
                                Presentation const& p,
                                AdianOptions const& opts = {});

  // Same, for right cycle-free presentations via reversal.
  Verdict solve_right_cycle_free(Word const&         u,
                                 Word const&         v,
                                 Presentation const& p,
                                 AdianOptions const& opts = {});

}  // namespace onerel
