#include "onerel/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "onerel/compress.hpp"
#include "onerel/units.hpp"

namespace onerel {

  bool SideGraph::has_cycle() const {
    std::vector<std::size_t> parent(vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    };
    for (auto [x, y] : edges) {
      auto rx = find(vertices.rank(x));
      auto ry = find(vertices.rank(y));
      if (rx == ry) {
        return true;
      }
      parent[rx] = ry;
    }
    return false;
  }

  std::pair<SideGraph, SideGraph>
  side_graphs(Alphabet const& a, std::vector<std::pair<Word, Word>> const& relations) {
    SideGraph left{a, {}};
    SideGraph right{a, {}};
    for (auto const& [u, v] : relations) {
      if (u.empty() || v.empty()) {
        throw precondition_error("special");
      }
      left.edges.emplace_back(u.front(), v.front());
      right.edges.emplace_back(u.back(), v.back());
    }
    return {left, right};
  }

  std::pair<SideGraph, SideGraph> side_graphs(Presentation const& p) {
    return side_graphs(p.alphabet(), {{p.lhs(), p.rhs()}});
  }

  bool left_cycle_free(Presentation const& p) {
    return !side_graphs(p).first.has_cycle();
  }

  bool right_cycle_free(Presentation const& p) {
    return !side_graphs(p).second.has_cycle();
  }

  std::size_t longest_border(Word const& w) {
    if (w.empty()) {
      return 0;
    }
    std::vector<std::size_t> fail(w.size(), 0);
    for (std::size_t i = 1, k = 0; i < w.size(); ++i) {
      while (k > 0 && w[i] != w[k]) {
        k = fail[k - 1];
      }
      if (w[i] == w[k]) {
        ++k;
      }
      fail[i] = k;
    }
    return fail.back();
  }

  bool is_self_overlap_free(Word const& w) {
    if (w.empty()) {
      throw precondition_error("is_self_overlap_free: empty word");
    }
    return longest_border(w) == 0;
  }

  bool is_primitive(Word const& w) {
    if (w.empty()) {
      throw precondition_error("is_primitive: empty word");
    }
    Word ww  = w + w;
    auto pos = ww.find(w, 1);
    return *pos == w.size();
  }

  SmallOverlap small_overlap_index(Presentation const& p) {
    if (p.special()) {
      throw precondition_error("special");
    }
    Word const* sides[2] = {&p.lhs(), &p.rhs()};
    // Occurrence counts over (side, position) pairs.
    std::map<std::vector<std::uint32_t>, std::pair<Word, std::size_t>> counts;
    for (auto const* w : sides) {
      for (std::size_t i = 0; i < w->size(); ++i) {
        for (std::size_t n = 1; i + n <= w->size(); ++n) {
          Word                       f = w->substr(i, n);
          std::vector<std::uint32_t> key;
          for (auto x : f) {
            key.push_back(x.id());
          }
          auto& entry = counts[key];
          entry.first = f;
          ++entry.second;
        }
      }
    }
    SmallOverlap out;
    for (auto const& [key, entry] : counts) {
      if (entry.second >= 2) {
        out.pieces.push_back(entry.first);
      }
    }
    std::sort(out.pieces.begin(), out.pieces.end(), [&p](Word const& x, Word const& y) {
      return p.alphabet().shortlex_less(x, y);
    });
    auto min_pieces = [&out](Word const& w) -> std::optional<std::size_t> {
      constexpr std::size_t inf = static_cast<std::size_t>(-1);
      std::vector<std::size_t> best(w.size() + 1, inf);
      best[0] = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (best[i] == inf) {
          continue;
        }
        for (auto const& piece : out.pieces) {
          if (w.occurs_at(piece, i)) {
            auto& b = best[i + piece.size()];
            b       = std::min(b, best[i] + 1);
          }
        }
      }
      if (best.back() == inf) {
        return std::nullopt;
      }
      return best.back();
    };
    out.lhs_pieces = min_pieces(p.lhs());
    out.rhs_pieces = min_pieces(p.rhs());
    for (auto const& m : {out.lhs_pieces, out.rhs_pieces}) {
      if (m && (!out.index || *m < *out.index)) {
        out.index = m;
      }
    }
    return out;
  }

  char const* to_string(Tri t) noexcept {
    switch (t) {
      case Tri::no:
        return "no";
      case Tri::yes:
        return "yes";
      case Tri::unknown:
        return "unknown";
    }
    return "?";
  }

  bool is_subspecial(Presentation const& p) {
    return !p.special() && p.lhs().size() > p.rhs().size()
           && p.lhs().starts_with(p.rhs()) && p.lhs().ends_with(p.rhs());
  }

  bool is_monadic(Presentation const& p) {
    if (p.rhs().size() != 1 || p.lhs().size() < 2) {
      return false;
    }
    Letter      a = p.rhs()[0];
    Word const& w = p.lhs();
    return (w.front() != a && w.back() == a) || (w.front() == a && w.back() != a);
  }

  std::optional<TorsionWitness> torsion_witness(Presentation const& p) {
    Word const& l = p.lhs();
    Word const& r = p.rhs();
    for (std::size_t period = 1; period <= l.size(); ++period) {
      Word t = l.prefix(period);
      if (!is_primitive(t)) {
        continue;
      }
      bool periodic = true;
      for (std::size_t i = period; i < l.size() && periodic; ++i) {
        periodic = l[i] == l[i - period];
      }
      if (!periodic) {
        continue;
      }
      std::size_t m = l.size() / period;
      std::size_t U = l.size() % period;
      if (r.size() < U || (r.size() - U) % period != 0) {
        continue;
      }
      std::size_t n = (r.size() - U) / period;
      if (n >= m || !l.starts_with(r)) {
        continue;
      }
      return TorsionWitness{t.prefix(U), t.substr(U), m, n};
    }
    return std::nullopt;
  }

  namespace {

    Tri special_idempotent(Presentation const& p, Tri group) {
      if (group == Tri::yes) {
        return Tri::no;
      }
      // A letter outside the relation is never invertible.
      for (auto x : p.alphabet()) {
        if (!p.lhs().contains(Word{x})) {
          return Tri::yes;
        }
      }
      // In a group xy = 1 forces yx = 1.
      auto oracle = builtin_oracle(unit_group_presentation(p));
      if (!oracle) {
        return Tri::unknown;
      }
      Word const& w = p.lhs();
      for (std::size_t i = 1; i < w.size(); ++i) {
        Word rot = w.substr(i) + w.prefix(i);
        auto v   = special_word_problem(p, rot, Word(), *oracle);
        if (v.outcome == Outcome::not_equal) {
          return Tri::yes;
        }
      }
      return Tri::unknown;
    }

  }  // namespace

  Classification classify(Presentation const& p) {
    Classification c;
    c.special      = p.special();
    c.equal_length = p.equal_length();
    c.lhs_sof      = is_self_overlap_free(p.lhs());
    c.subspecial   = is_subspecial(p);
    c.monadic      = is_monadic(p);
    c.torsion      = torsion_witness(p);
    if (!c.special) {
      c.left_cycle_free  = left_cycle_free(p);
      c.right_cycle_free = right_cycle_free(p);
      c.small_overlap    = small_overlap_index(p);
      if (auto wc = weak_compress(p)) {
        c.weak_compressible = wc->alpha();
      }
      if (auto sc = strong_compress(p)) {
        c.strong_compressible
            = StrongShape{sc->common_prefix(), sc->common_suffix(), sc->k()};
      }
    }
    if (c.special) {
      auto code   = sof_code(p.lhs());
      bool letters = std::all_of(code.words.begin(), code.words.end(),
                                 [](Word const& w) { return w.size() == 1; });
      bool covers  = std::all_of(p.alphabet().begin(), p.alphabet().end(),
                                 [&p](Letter x) { return p.lhs().contains(Word{x}); });
      c.group_sufficient          = letters && covers ? Tri::yes : Tri::unknown;
      c.has_nontrivial_idempotent = special_idempotent(p, c.group_sufficient);
    } else {
      c.group_sufficient          = Tri::unknown;
      c.has_nontrivial_idempotent = c.subspecial ? Tri::yes : Tri::no;
    }
    return c;
  }

}  // namespace onerel
