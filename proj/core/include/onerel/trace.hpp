#pragma once

#include <string>
#include <vector>

#include "onerel/presentation.hpp"

namespace onerel {

  // Derivation certificate: replaying steps from start yields end.
  struct Trace {
    Word                        start;
    std::vector<ElementaryStep> steps;
    Word                        end;

    std::size_t length() const noexcept {
      return steps.size();
    }

    friend bool operator==(Trace const&, Trace const&) = default;
  };

  // Empty derivation w -> w.
  Trace identity_trace(Word const& w);

  // All intermediate words, start first and end last. Throws on a rejected
  // step.
  std::vector<Word> replay(Trace const& t, Presentation const& p);

  bool is_valid(Trace const& t, Presentation const& p);

  // Appends a step, computing the new end.
  void push_step(Trace& t, Presentation const& p, ElementaryStep s);

  Trace inverse(Trace const& t, Presentation const& p);

  // Requires a.end == b.start.
  Trace concatenate(Trace const& a, Trace const& b);

  // The same derivation performed inside prefix . w . suffix.
  Trace embed(Trace const& t, Word const& prefix, Word const& suffix);

  // Mirror image: a derivation in p becomes one in reverse_presentation(p)
  // between the reversed words.
  Trace mirror(Trace const& t, Presentation const& p, Presentation const& rev);

  std::vector<std::string> render(Trace const& t, Presentation const& p);

}  // namespace onerel
