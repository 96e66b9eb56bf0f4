#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "onerel/classify.hpp"
#include "onerel/verdict.hpp"

namespace onerel {

  // Biprefix set of words, sorted shortlex by letter name.
  struct Code {
    std::vector<Word> words;

    bool contains(Word const& w) const;
    std::size_t index_of(Word const& w) const;  // throws if absent
    bool is_biprefix() const;
  };

  // Picks which overlapping pair to split next; receives the candidate count
  // and returns an index. The default always picks the first.
  using OverlapChooser = std::function<std::size_t(std::size_t)>;

  Code sof_code(Word const& w, OverlapChooser const& choose = {});

  // Unique factorization of w over c, as indices into c.words. Throws
  // precondition_error naming the first unfactorable position.
  std::vector<std::size_t> factor_over_code(Word const& w, Code const& c);
  std::optional<std::vector<std::size_t>> try_factor_over_code(Word const& w,
                                                               Code const& c);

  // Group word: generator i is +(i+1), its inverse -(i+1).
  using GroupWord = std::vector<int>;

  GroupWord free_reduce(GroupWord w);
  GroupWord group_inverse(GroupWord const& w);

  struct GroupPresentation {
    std::size_t              generators = 0;
    std::vector<std::size_t> relator;  // positive word, 0-based generators
    Code                     code;     // generator i stands for code.words[i]

    friend bool operator==(GroupPresentation const& x, GroupPresentation const& y) {
      return x.generators == y.generators && x.relator == y.relator
             && x.code.words == y.code.words;
    }
  };

  // "x1,x2 | x1.x2.x1"
  std::string to_string(GroupPresentation const& g);

  // Generators follow first occurrence in the factorization of lhs.
  GroupPresentation unit_group_presentation(Presentation const& p);

  struct UnitGroupOracle {
    GroupPresentation                   group;
    std::string                         description;
    std::function<Tri(GroupWord const&)> is_identity;
  };

  // Recognizes: a generator occurring once (free group after elimination),
  // a power of a single generator (cyclic), the empty relator (trivial).
  std::optional<UnitGroupOracle> builtin_oracle(GroupPresentation const& g);

  struct SpecialLimits {
    // Candidate replacement words examined per factor before giving up.
    std::size_t max_candidates = 200000;
  };

  // Normal form under replacement of C(lhs)*-factors by their shortlex-least
  // equal C(lhs)*-word; nullopt if the oracle could not answer.
  std::optional<Word> special_normal_form(Presentation const&    p,
                                          Word const&            w,
                                          UnitGroupOracle const& oracle,
                                          SpecialLimits const&   limits = {});

  Verdict special_word_problem(Presentation const&    p,
                               Word const&            u,
                               Word const&            v,
                               UnitGroupOracle const& oracle,
                               SpecialLimits const&   limits = {});

  // Reusable form of special_word_problem; memo tables persist across
  // queries. Not thread-safe.
  class SpecialSolver {
   public:
    SpecialSolver(Presentation p, UnitGroupOracle oracle, SpecialLimits limits = {});
    ~SpecialSolver();
    SpecialSolver(SpecialSolver&&) noexcept;
    SpecialSolver& operator=(SpecialSolver&&) noexcept;

    std::optional<Word> normal_form(Word const& w);
    Verdict             decide(Word const& u, Word const& v);

   private:
    struct Impl;
    std::unique_ptr<Impl> _impl;
  };

}  // namespace onerel
