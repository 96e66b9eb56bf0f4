#include "onerel/search.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "onerel/classify.hpp"

namespace onerel {

  namespace {

    struct Origin {
      Word           parent;
      ElementaryStep step;
      bool           root = false;
    };

    using Visited = std::unordered_map<Word, Origin>;

    // Derivation from the root of `seen` to w.
    Trace path_to(Visited const& seen, Word const& w, Presentation const& p) {
      std::vector<ElementaryStep> rev;
      Word                        cur = w;
      while (true) {
        auto const& o = seen.at(cur);
        if (o.root) {
          break;
        }
        rev.push_back(o.step);
        cur = o.parent;
      }
      Trace t = identity_trace(cur);
      for (auto it = rev.rbegin(); it != rev.rend(); ++it) {
        push_step(t, p, *it);
      }
      return t;
    }

    struct Side {
      Visited          seen;
      std::deque<Word> frontier;
      bool             truncated = false;
      std::size_t      depth     = 0;
    };

  }  // namespace

  BfsResult bfs_decide(Word const&         u,
                       Word const&         v,
                       Presentation const& p,
                       SearchBudget const& b) {
    BfsResult out;
    if (u == v) {
      out.kind  = BfsKind::equal;
      out.trace = identity_trace(u);
      out.nodes = 1;
      return out;
    }
    std::size_t cap = b.max_word_length != 0
                          ? b.max_word_length
                          : std::max(u.size(), v.size()) + 2 * p.lhs().size();
    if (u.size() > cap || v.size() > cap) {
      out.detail = "query word longer than the length cap";
      return out;
    }
    Side sides[2];
    sides[0].seen.emplace(u, Origin{{}, {}, true});
    sides[0].frontier.push_back(u);
    sides[1].seen.emplace(v, Origin{{}, {}, true});
    sides[1].frontier.push_back(v);
    bool limit_hit = false;

    while (true) {
      for (int s = 0; s < 2; ++s) {
        if (sides[s].frontier.empty() && !sides[s].truncated && !limit_hit) {
          out.kind   = BfsKind::not_equal_closed;
          out.nodes  = sides[0].seen.size() + sides[1].seen.size();
          out.detail = "class of " + to_string(s == 0 ? u : v) + " closed with "
                       + std::to_string(sides[s].seen.size()) + " elements";
          return out;
        }
      }
      // Expand one full layer of the smaller nonempty frontier.
      int s;
      if (sides[0].frontier.empty()) {
        s = 1;
      } else if (sides[1].frontier.empty()) {
        s = 0;
      } else {
        s = sides[0].frontier.size() <= sides[1].frontier.size() ? 0 : 1;
      }
      Side& me    = sides[s];
      Side& other = sides[1 - s];
      if (me.frontier.empty()) {
        out.nodes  = sides[0].seen.size() + sides[1].seen.size();
        out.detail = "search truncated by the budget";
        return out;
      }
      if (me.depth >= b.max_depth) {
        limit_hit = true;
        out.nodes = sides[0].seen.size() + sides[1].seen.size();
        out.detail = "depth limit reached";
        return out;
      }
      ++me.depth;
      std::deque<Word> next;
      for (auto const& w : me.frontier) {
        for (auto& [step, nb] : neighbours(w, p)) {
          if (nb.size() > cap) {
            me.truncated = true;
            continue;
          }
          if (me.seen.count(nb) != 0) {
            continue;
          }
          me.seen.emplace(nb, Origin{w, step, false});
          if (other.seen.count(nb) != 0) {
            Trace a = path_to(me.seen, nb, p);
            Trace c = path_to(other.seen, nb, p);
            out.kind  = BfsKind::equal;
            out.trace = s == 0 ? concatenate(a, inverse(c, p))
                               : concatenate(c, inverse(a, p));
            out.nodes = sides[0].seen.size() + sides[1].seen.size();
            return out;
          }
          if (sides[0].seen.size() + sides[1].seen.size() > b.max_nodes) {
            out.nodes  = b.max_nodes;
            out.detail = "node limit reached";
            return out;
          }
          next.push_back(std::move(nb));
        }
      }
      me.frontier = std::move(next);
    }
  }

  Verdict to_verdict(BfsResult const& r) {
    switch (r.kind) {
      case BfsKind::equal:
        return via("bfs", Verdict::equal(Certificate{CertificateKind::trace,
                                                     "derivation found by search",
                                                     r.trace}));
      case BfsKind::not_equal_closed:
        return via("bfs",
                   Verdict::not_equal(
                       Certificate{CertificateKind::closure, r.detail, {}}));
      case BfsKind::unknown:
        break;
    }
    return via("bfs", Verdict::unknown(r.detail));
  }

  std::optional<std::size_t> bfs_prefix_distance(Word const&         w,
                                                 Letter              x,
                                                 Presentation const& p,
                                                 SearchBudget const& b) {
    std::size_t cap = b.max_word_length != 0 ? b.max_word_length
                                             : w.size() + 2 * p.lhs().size();
    std::unordered_map<Word, std::size_t> dist{{w, 0}};
    std::deque<Word>                      queue{w};
    while (!queue.empty()) {
      Word cur = std::move(queue.front());
      queue.pop_front();
      std::size_t d = dist.at(cur);
      if (!cur.empty() && cur.front() == x) {
        return d;
      }
      if (d >= b.max_depth || dist.size() > b.max_nodes) {
        continue;
      }
      for (auto& [step, nb] : neighbours(cur, p)) {
        if (nb.size() <= cap && dist.emplace(nb, d + 1).second) {
          queue.push_back(std::move(nb));
        }
      }
    }
    return std::nullopt;
  }

  Verdict equal_length_decide(Word const& u, Word const& v, Presentation const& p) {
    if (!p.equal_length()) {
      throw precondition_error("equal_length_decide: sides differ in length");
    }
    if (u.size() != v.size()) {
      return via("equal-length",
                 Verdict::not_equal(Certificate{
                     CertificateKind::invariant, "lengths differ and length is invariant", {}}));
    }
    SearchBudget b;
    b.max_nodes       = static_cast<std::size_t>(-1);
    b.max_word_length = u.size();
    b.max_depth       = static_cast<std::size_t>(-1);
    auto r = bfs_decide(u, v, p, b);
    auto verdict = to_verdict(r);
    verdict.route.front() = "equal-length";
    return verdict;
  }

  Trace rewrite_to_normal_form(Word const& w, Presentation const& p) {
    Trace t = identity_trace(w);
    if (p.lhs().size() <= p.rhs().size()) {
      throw precondition_error("rewriting needs |lhs| > |rhs|");
    }
    while (auto pos = t.end.find(p.lhs())) {
      push_step(t, p, ElementaryStep{*pos, Direction::forward});
    }
    return t;
  }

  Verdict sof_rewrite_decide(Word const& u, Word const& v, Presentation const& p) {
    if (p.lhs().size() <= p.rhs().size() || !is_self_overlap_free(p.lhs())) {
      throw precondition_error(
          "sof_rewrite_decide: needs |lhs| > |rhs| and self-overlap free lhs");
    }
    Trace tu = rewrite_to_normal_form(u, p);
    Trace tv = rewrite_to_normal_form(v, p);
    if (tu.end == tv.end) {
      return via("sof-rewrite",
                 Verdict::equal(Certificate{CertificateKind::trace,
                                            "common normal form " + to_string(tu.end),
                                            concatenate(tu, inverse(tv, p))}));
    }
    return via("sof-rewrite",
               Verdict::not_equal(Certificate{CertificateKind::normal_form,
                                              "normal forms " + to_string(tu.end)
                                                  + " and " + to_string(tv.end)
                                                  + " differ",
                                              {}}));
  }

}  // namespace onerel
