#include "onerel/adian.hpp"

#include <unordered_set>

#include "onerel/classify.hpp"

namespace onerel {

  Word PrefixDecomposition::reassemble() const {
    Word out;
    for (auto const& b : blocks) {
      out += b;
    }
    if (head) {
      out += *head;
    }
    return out + tail;
  }

  namespace {
    PrefixDecomposition decompose(Word const& w, Presentation const& p);
  }

  PrefixDecomposition prefix_decompose(Word const& w, Presentation const& p) {
    if (p.special() || !left_cycle_free(p)) {
      throw precondition_error("prefix_decompose needs a left cycle-free "
                               "presentation with nonempty sides");
    }
    return decompose(w, p);
  }

  namespace {
  PrefixDecomposition decompose(Word const& w, Presentation const& p) {
    PrefixDecomposition d;
    std::size_t         i = 0;
    while (i < w.size()) {
      Word const* side = nullptr;
      Direction   dir  = Direction::forward;
      if (w[i] == p.lhs().front()) {
        side = &p.lhs();
      } else if (w[i] == p.rhs().front()) {
        side = &p.rhs();
        dir  = Direction::backward;
      } else {
        // Dead letter: no transformation can ever reach this position from
        // the left.
        d.tail = w.substr(i);
        return d;
      }
      std::size_t n = 0;
      while (n < side->size() && i + n < w.size() && w[i + n] == (*side)[n]) {
        ++n;
      }
      if (n == side->size()) {
        d.head          = *side;
        d.head_side     = dir;
        d.head_position = i;
        d.tail          = w.substr(i + n);
        return d;
      }
      d.blocks.push_back(w.substr(i, n));
      i += n;
    }
    return d;
  }
  }  // namespace

  std::string to_string(PrefixDecomposition const& d) {
    std::string out;
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
      out += (i == 0 ? "" : " | ") + to_string(d.blocks[i]);
    }
    if (d.head) {
      out += (d.blocks.empty() ? "[" : " | [") + to_string(*d.head) + "]";
    }
    if (!d.tail.empty()) {
      out += (out.empty() ? "" : " ") + to_string(d.tail);
    }
    return out;
  }

  char const* to_string(AdianKind k) noexcept {
    switch (k) {
      case AdianKind::divisible:
        return "divisible";
      case AdianKind::headless:
        return "headless";
      case AdianKind::loop_exact:
        return "loop_exact";
      case AdianKind::loop_heuristic:
        return "loop_heuristic";
      case AdianKind::budget_exhausted:
        return "budget_exhausted";
    }
    return "?";
  }

  namespace {
    using Pieces = std::vector<Word>;

    // h occurs in cur as a strict suffix of the block sequence ending at the
    // head.
    bool embeds_at_end(Pieces const& h, Pieces const& cur) {
      if (h.size() >= cur.size()) {
        return false;
      }
      return std::equal(h.rbegin(), h.rend(), cur.rbegin());
    }
  }  // namespace

  namespace {
  AdianOutcome divide(Word const&         w,
                      Letter              x,
                      Presentation const& p,
                      AdianBudget const&  budget,
                      bool                record_lines) {
    AdianOutcome             out;
    out.trace = identity_trace(w);
    std::unordered_set<Word> seen;
    std::vector<Pieces>      history;
    std::size_t              letters = w.size();
    out.letters                      = letters;
    while (true) {
      Word const& cur = out.trace.end;
      if (!cur.empty() && cur.front() == x) {
        out.kind    = AdianKind::divisible;
        out.witness = cur.substr(1);
        if (record_lines) {
          out.detail = to_string(w) + " = " + x.name() + " . " + to_string(out.witness);
        }
        return out;
      }
      if (!seen.insert(cur).second) {
        out.kind   = AdianKind::loop_exact;
        out.detail = "word " + to_string(cur) + " recurred";
        return out;
      }
      auto d = decompose(cur, p);
      if (d.headless()) {
        out.kind = AdianKind::headless;
        out.detail = "headless decomposition " + to_string(d);
        if (record_lines) {
          out.lines.push_back(to_string(d));
        }
        return out;
      }
      Pieces seq = d.blocks;
      seq.push_back(*d.head);
      for (std::size_t j = 0; j < history.size(); ++j) {
        if (embeds_at_end(history[j], seq)) {
          out.kind = AdianKind::loop_heuristic;
          if (record_lines) {
            out.lines.push_back(to_string(d) + " → ⋯");
          }
          out.detail = "decomposition " + std::to_string(j + 1)
                       + " recurs inside decomposition "
                       + std::to_string(history.size() + 1);
          return out;
        }
      }
      history.push_back(std::move(seq));
      if (out.replacements >= budget.max_replacements) {
        out.kind   = AdianKind::budget_exhausted;
        out.detail = "replacement budget exhausted";
        return out;
      }
      push_step(out.trace, p, ElementaryStep{d.head_position, *d.head_side});
      ++out.replacements;
      if (record_lines) {
        out.lines.push_back(to_string(d) + " → " + to_string(out.trace.end));
      }
      letters += out.trace.end.size();
      out.letters = letters;
      if (letters > budget.max_letters) {
        out.kind   = AdianKind::budget_exhausted;
        out.detail = "letter budget exhausted";
        return out;
      }
    }
  }

  }  // namespace

  AdianOutcome adian_divisibility(Word const&         w,
                                  Letter              x,
                                  Presentation const& p,
                                  AdianBudget const&  budget,
                                  bool                record_lines) {
    if (!p.alphabet().contains(x)) {
      throw precondition_error("letter " + x.name() + " is not in the alphabet");
    }
    if (p.special() || !left_cycle_free(p)) {
      throw precondition_error("adian_divisibility needs a left cycle-free "
                               "presentation with nonempty sides");
    }
    return divide(w, x, p, budget, record_lines);
  }

  namespace {

    Verdict refuted(AdianOutcome const& r, std::string const& what) {
      CertificateKind k = r.kind == AdianKind::headless ? CertificateKind::headless
                                                        : CertificateKind::loop_exact;
      return Verdict::not_equal(Certificate{k, what + ": " + r.detail, {}});
    }

  }  // namespace

  Verdict solve_left_cycle_free(Word const&         u,
                                Word const&         v,
                                Presentation const& p,
                                AdianOptions const& opts) {
    if (p.special() || !left_cycle_free(p)) {
      throw precondition_error("solve_left_cycle_free needs a left cycle-free "
                               "presentation with nonempty sides");
    }
    Word        prefix;
    Word        a = u;
    Word        b = v;
    // Division traces with the prefix length they act behind; u -> prefix.a
    // and v -> prefix.b are assembled from these on success.
    std::vector<std::pair<Trace, std::size_t>> du;
    std::vector<std::pair<Trace, std::size_t>> dv;
    auto assemble = [&prefix](Word const& start,
                              std::vector<std::pair<Trace, std::size_t>> const& ds) {
      Trace t = identity_trace(start);
      for (auto const& [d, len] : ds) {
        for (auto const& st : d.steps) {
          t.steps.push_back(ElementaryStep{st.position + len, st.direction});
        }
        t.end = prefix.prefix(len) + d.end;
      }
      return t;
    };
    std::size_t rounds  = 0;
    std::size_t letters = 0;
    std::size_t spent   = 0;  // replacements over all divisions
    auto        charge  = [&](AdianOutcome const& r) {
      spent += r.replacements;
      letters += r.letters;
    };
    auto remaining = [&] {
      return AdianBudget{opts.budget.max_replacements
                             - std::min(spent, opts.budget.max_replacements),
                         opts.budget.max_letters
                             - std::min(letters, opts.budget.max_letters)};
    };
    // Peeling is deterministic in (a, b), so a repeated pair never resolves.
    std::unordered_set<Word> seen;
    while (true) {
      if (a == b) {
        return via("adian",
                   Verdict::equal(Certificate{CertificateKind::trace,
                                              "derivation assembled from divisions",
                                              concatenate(assemble(u, du),
                                                          inverse(assemble(v, dv), p))}));
      }
      if (a.empty() || b.empty()) {
        return via("adian",
                   Verdict::not_equal(Certificate{
                       CertificateKind::invariant,
                       "after cancelling " + to_string(prefix)
                           + " one word is empty and no nonempty word equals 1",
                       {}}));
      }
      if (a.front() == b.front()) {
        prefix.push_back(a.front());
        a = a.substr(1);
        b = b.substr(1);
        continue;
      }
      letters += a.size() + b.size();
      if (++rounds > opts.budget.max_replacements || letters > opts.budget.max_letters
          || spent >= opts.budget.max_replacements) {
        return via("adian", Verdict::unknown("peeling budget exhausted"));
      }
      Word key = a;
      key.push_back(Letter());
      key += b;
      if (!seen.insert(key).second) {
        return via("adian", Verdict::unknown("peeling revisits " + to_string(a) + ", "
                                             + to_string(b)));
      }
      auto rb = divide(b, a.front(), p, remaining(), false);
      charge(rb);
      if (rb.kind == AdianKind::divisible) {
        dv.emplace_back(std::move(rb.trace), prefix.size());
        prefix.push_back(a.front());
        a = a.substr(1);
        b = rb.witness;
        continue;
      }
      if (rb.decisive()) {
        return via("adian", refuted(rb, to_string(b) + " is not left divisible by "
                                            + a.front().name()));
      }
      auto ra = divide(a, b.front(), p, remaining(), false);
      charge(ra);
      if (ra.kind == AdianKind::divisible) {
        du.emplace_back(std::move(ra.trace), prefix.size());
        prefix.push_back(b.front());
        a = ra.witness;
        b = b.substr(1);
        continue;
      }
      if (ra.decisive()) {
        return via("adian", refuted(ra, to_string(a) + " is not left divisible by "
                                            + b.front().name()));
      }
      auto const& h = rb.kind == AdianKind::loop_heuristic ? rb : ra;
      if (h.kind == AdianKind::loop_heuristic) {
        Verdict out = Verdict::not_equal(
            Certificate{CertificateKind::loop_heuristic, h.detail, {}},
            Confidence::heuristic);
        return via("adian", opts.strict ? demote_heuristic(out) : out);
      }
      return via("adian", Verdict::unknown(rb.detail));
    }
  }

  Verdict solve_right_cycle_free(Word const&         u,
                                 Word const&         v,
                                 Presentation const& p,
                                 AdianOptions const& opts) {
    Presentation rev = reverse_presentation(p);
    Verdict out = solve_left_cycle_free(u.reversed(), v.reversed(), rev, opts);
    if (out.certificate.trace) {
      out.certificate.trace = mirror(*out.certificate.trace, rev, p);
    }
    return via("reverse", std::move(out));
  }

}  // namespace onerel
