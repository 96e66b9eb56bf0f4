#include "onerel/trace.hpp"

namespace onerel {

  Trace identity_trace(Word const& w) {
    return Trace{w, {}, w};
  }

  std::vector<Word> replay(Trace const& t, Presentation const& p) {
    std::vector<Word> out{t.start};
    for (auto const& s : t.steps) {
      out.push_back(apply_step(out.back(), p, s));
    }
    if (out.back() != t.end) {
      throw precondition_error("trace replay ends at " + to_string(out.back())
                               + ", expected " + to_string(t.end));
    }
    return out;
  }

  bool is_valid(Trace const& t, Presentation const& p) {
    try {
      replay(t, p);
      return true;
    } catch (precondition_error const&) {
      return false;
    }
  }

  void push_step(Trace& t, Presentation const& p, ElementaryStep s) {
    t.end = apply_step(t.end, p, s);
    t.steps.push_back(s);
  }

  namespace {
    Direction flip(Direction d) {
      return d == Direction::forward ? Direction::backward : Direction::forward;
    }
  }  // namespace

  Trace inverse(Trace const& t, Presentation const& p) {
    Trace out{t.end, {}, t.end};
    for (std::size_t i = t.steps.size(); i-- > 0;) {
      push_step(out, p, ElementaryStep{t.steps[i].position, flip(t.steps[i].direction)});
    }
    return out;
  }

  Trace concatenate(Trace const& a, Trace const& b) {
    if (a.end != b.start) {
      throw precondition_error("traces do not compose: " + to_string(a.end)
                               + " vs " + to_string(b.start));
    }
    Trace out = a;
    out.steps.insert(out.steps.end(), b.steps.begin(), b.steps.end());
    out.end = b.end;
    return out;
  }

  Trace embed(Trace const& t, Word const& prefix, Word const& suffix) {
    Trace out{prefix + t.start + suffix, {}, prefix + t.end + suffix};
    out.steps.reserve(t.steps.size());
    for (auto s : t.steps) {
      out.steps.push_back(ElementaryStep{s.position + prefix.size(), s.direction});
    }
    return out;
  }

  Trace mirror(Trace const& t, Presentation const& p, Presentation const& rev) {
    auto  words = replay(t, p);
    Trace out{t.start.reversed(), {}, t.start.reversed()};
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
      auto const& s    = t.steps[i];
      Word const& from = replaced_side(p, s.direction);
      Word        rfrom = from.reversed();
      std::size_t pos   = words[i].size() - s.position - from.size();
      // Canonicalisation of rev may have swapped the sides.
      Direction d = rev.lhs() == rfrom ? Direction::forward : Direction::backward;
      push_step(out, rev, ElementaryStep{pos, d});
    }
    return out;
  }

  std::vector<std::string> render(Trace const& t, Presentation const& p) {
    std::vector<std::string> out;
    auto                     words = replay(t, p);
    for (std::size_t i = 0; i < words.size(); ++i) {
      std::string line = to_string(words[i]);
      if (i < t.steps.size()) {
        line += "  [" + std::to_string(t.steps[i].position)
                + (t.steps[i].direction == Direction::forward ? " ->" : " <-")
                + "]";
      }
      out.push_back(std::move(line));
    }
    return out;
  }

}  // namespace onerel
