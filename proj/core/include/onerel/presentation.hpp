#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "onerel/word.hpp"

namespace onerel {

  // One-relation presentation <A | lhs = rhs> in canonical orientation:
  // |lhs| >= |rhs|, equal lengths broken by lexicographic order (lhs first).
  class Presentation {
   public:
    Presentation() = default;
    Presentation(Alphabet alphabet, Word u, Word v);

    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    Word const& lhs() const noexcept {
      return _lhs;
    }
    Word const& rhs() const noexcept {
      return _rhs;
    }

    bool special() const noexcept {
      return _rhs.empty();
    }
    bool equal_length() const noexcept {
      return _lhs.size() == _rhs.size();
    }
    bool trivial_relation() const noexcept {
      return _lhs == _rhs;
    }

    // Copy with extra letters appended to the alphabet.
    Presentation with_letters(Word const& w) const;

    friend bool operator==(Presentation const&, Presentation const&) = default;

   private:
    Alphabet _alphabet;
    Word     _lhs;
    Word     _rhs;
  };

  // Grammar: "a,b,c | word = word".
  Presentation parse_presentation(std::string_view text);
  std::string  to_string(Presentation const& p);

  Presentation reverse_presentation(Presentation const& p);

  // Relation-level isomorphism: some bijection between the letters that
  // occur maps one relation onto the other (as an unordered pair of sides).
  bool isomorphic_up_to_renaming(Presentation const& p, Presentation const& q);

  enum class Direction { forward, backward };  // lhs->rhs, rhs->lhs

  struct ElementaryStep {
    std::size_t position  = 0;
    Direction   direction = Direction::forward;

    friend bool operator==(ElementaryStep const&, ElementaryStep const&)
        = default;
  };

  Word const& replaced_side(Presentation const& p, Direction d) noexcept;
  Word const& inserted_side(Presentation const& p, Direction d) noexcept;

  // Throws precondition_error if the replaced side does not occur at the
  // position.
  Word apply_step(Word const& w, Presentation const& p, ElementaryStep s);

  // All words reachable by one elementary transformation, with the step used.
  std::vector<std::pair<ElementaryStep, Word>>
  neighbours(Word const& w, Presentation const& p);

}  // namespace onerel
