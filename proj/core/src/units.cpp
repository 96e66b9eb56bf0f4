#include "onerel/units.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace onerel {

  namespace {

    bool name_shortlex_less(Word const& x, Word const& y) {
      if (x.size() != y.size()) {
        return x.size() < y.size();
      }
      return std::lexicographical_compare(
          x.begin(), x.end(), y.begin(), y.end(), [](Letter a, Letter b) {
            return a.name() < b.name();
          });
    }

    void normalize(std::vector<Word>& words) {
      std::sort(words.begin(), words.end(), name_shortlex_less);
      words.erase(std::unique(words.begin(), words.end()), words.end());
    }

    struct Split {
      std::size_t x;
      std::size_t y;
      std::size_t overlap;
    };

    // x = v.s and y = s.w with s nonempty and not x = y = s.
    std::vector<Split> overlapping_pairs(std::vector<Word> const& c) {
      std::vector<Split> out;
      for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = 0; j < c.size(); ++j) {
          auto const& x = c[i];
          auto const& y = c[j];
          for (std::size_t s = 1; s <= std::min(x.size(), y.size()); ++s) {
            if (i == j && s == x.size()) {
              continue;
            }
            if (x.ends_with(y.prefix(s))) {
              out.push_back(Split{i, j, s});
            }
          }
        }
      }
      return out;
    }

  }  // namespace

  bool Code::contains(Word const& w) const {
    return std::find(words.begin(), words.end(), w) != words.end();
  }

  std::size_t Code::index_of(Word const& w) const {
    auto it = std::find(words.begin(), words.end(), w);
    if (it == words.end()) {
      throw precondition_error("word " + to_string(w) + " is not in the code");
    }
    return static_cast<std::size_t>(it - words.begin());
  }

  bool Code::is_biprefix() const {
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = 0; j < words.size(); ++j) {
        if (i != j
            && (words[j].starts_with(words[i]) || words[j].ends_with(words[i]))) {
          return false;
        }
      }
    }
    return true;
  }

  Code sof_code(Word const& w, OverlapChooser const& choose) {
    if (w.empty()) {
      throw precondition_error("sof_code: empty word");
    }
    std::vector<Word> c{w};
    while (true) {
      auto splits = overlapping_pairs(c);
      if (splits.empty()) {
        break;
      }
      std::size_t pick = choose ? choose(splits.size()) % splits.size() : 0;
      auto [i, j, s]   = splits[pick];
      Word x           = c[i];
      Word y           = c[j];
      std::vector<Word> next;
      for (std::size_t t = 0; t < c.size(); ++t) {
        if (t != i && t != j) {
          next.push_back(c[t]);
        }
      }
      for (Word part : {x.prefix(x.size() - s), y.prefix(s), y.substr(s)}) {
        if (!part.empty()) {
          next.push_back(std::move(part));
        }
      }
      normalize(next);
      c = std::move(next);
    }
    normalize(c);
    return Code{std::move(c)};
  }

  std::optional<std::vector<std::size_t>> try_factor_over_code(Word const& w,
                                                               Code const& c) {
    std::vector<std::size_t> out;
    std::size_t              i = 0;
    while (i < w.size()) {
      std::optional<std::size_t> hit;
      for (std::size_t k = 0; k < c.words.size(); ++k) {
        if (w.occurs_at(c.words[k], i)) {
          if (hit) {
            throw precondition_error("factor_over_code: code is not prefix");
          }
          hit = k;
        }
      }
      if (!hit) {
        return std::nullopt;
      }
      out.push_back(*hit);
      i += c.words[*hit].size();
    }
    return out;
  }

  std::vector<std::size_t> factor_over_code(Word const& w, Code const& c) {
    std::vector<std::size_t> out;
    std::size_t              i = 0;
    while (i < w.size()) {
      std::optional<std::size_t> hit;
      for (std::size_t k = 0; k < c.words.size(); ++k) {
        if (w.occurs_at(c.words[k], i)) {
          hit = k;
          break;
        }
      }
      if (!hit) {
        throw precondition_error("factor_over_code: " + to_string(w)
                                 + " is not factorable at position "
                                 + std::to_string(i));
      }
      out.push_back(*hit);
      i += c.words[*hit].size();
    }
    return out;
  }

  GroupWord free_reduce(GroupWord w) {
    GroupWord out;
    for (int g : w) {
      if (!out.empty() && out.back() == -g) {
        out.pop_back();
      } else {
        out.push_back(g);
      }
    }
    return out;
  }

  GroupWord group_inverse(GroupWord const& w) {
    GroupWord out(w.rbegin(), w.rend());
    for (auto& g : out) {
      g = -g;
    }
    return out;
  }

  std::string to_string(GroupPresentation const& g) {
    std::string out;
    for (std::size_t i = 0; i < g.generators; ++i) {
      out += (i == 0 ? "x" : ",x") + std::to_string(i + 1);
    }
    out += " | ";
    if (g.relator.empty()) {
      return out + "1";
    }
    for (std::size_t i = 0; i < g.relator.size(); ++i) {
      out += (i == 0 ? "x" : ".x") + std::to_string(g.relator[i] + 1);
    }
    return out;
  }

  GroupPresentation unit_group_presentation(Presentation const& p) {
    if (!p.special()) {
      throw precondition_error("unit_group_presentation: presentation is not special");
    }
    Code sorted  = sof_code(p.lhs());
    auto factors = factor_over_code(p.lhs(), sorted);
    // Renumber by first occurrence.
    std::vector<std::size_t> order;
    for (auto f : factors) {
      if (std::find(order.begin(), order.end(), f) == order.end()) {
        order.push_back(f);
      }
    }
    GroupPresentation g;
    g.generators = order.size();
    for (auto f : order) {
      g.code.words.push_back(sorted.words[f]);
    }
    for (auto f : factors) {
      g.relator.push_back(static_cast<std::size_t>(
          std::find(order.begin(), order.end(), f) - order.begin()));
    }
    return g;
  }

  std::optional<UnitGroupOracle> builtin_oracle(GroupPresentation const& g) {
    if (g.generators == 0 || g.relator.empty()) {
      return UnitGroupOracle{g, "trivial group", [](GroupWord const&) {
                               return Tri::yes;
                             }};
    }
    std::vector<std::size_t> occurrences(g.generators, 0);
    for (auto x : g.relator) {
      ++occurrences[x];
    }
    for (std::size_t x = 0; x < g.generators; ++x) {
      if (occurrences[x] != 1) {
        continue;
      }
      // relator = P x Q, so x = (Q P)^-1 and the rest generate freely.
      auto      at = std::find(g.relator.begin(), g.relator.end(), x);
      GroupWord qp;
      for (auto it = at + 1; it != g.relator.end(); ++it) {
        qp.push_back(static_cast<int>(*it) + 1);
      }
      for (auto it = g.relator.begin(); it != at; ++it) {
        qp.push_back(static_cast<int>(*it) + 1);
      }
      GroupWord image = group_inverse(qp);
      int       gx    = static_cast<int>(x) + 1;
      auto      rank  = g.generators - 1;
      return UnitGroupOracle{
          g,
          rank == 0 ? std::string("trivial group")
                    : "free group of rank " + std::to_string(rank),
          [gx, image](GroupWord const& w) {
            GroupWord sub;
            for (int y : w) {
              if (y == gx) {
                sub.insert(sub.end(), image.begin(), image.end());
              } else if (y == -gx) {
                auto inv = group_inverse(image);
                sub.insert(sub.end(), inv.begin(), inv.end());
              } else {
                sub.push_back(y);
              }
            }
            return free_reduce(std::move(sub)).empty() ? Tri::yes : Tri::no;
          }};
    }
    if (g.generators == 1) {
      auto n = static_cast<long long>(g.relator.size());
      return UnitGroupOracle{
          g, "cyclic group of order " + std::to_string(n), [n](GroupWord const& w) {
            long long sum = 0;
            for (int y : w) {
              sum += y > 0 ? 1 : -1;
            }
            return ((sum % n) + n) % n == 0 ? Tri::yes : Tri::no;
          }};
    }
    return std::nullopt;
  }

  namespace {

    class NormalFormer {
     public:
      NormalFormer(Presentation const&    p,
                   UnitGroupOracle const& oracle,
                   SpecialLimits const&   limits)
          : _p(p), _oracle(oracle), _code(oracle.group.code), _limits(limits) {}

      std::optional<Word> run(Word w) {
        while (true) {
          bool changed = false;
          for (std::size_t i = 0; i < w.size() && !changed; ++i) {
            // Boundaries of the C*-prefix of w[i..].
            std::size_t j = i;
            while (j < w.size()) {
              auto k = match_at(w, j);
              if (!k) {
                break;
              }
              j += _code.words[*k].size();
              Word x = w.substr(i, j - i);
              auto y = least_equal(x);
              if (!y) {
                return std::nullopt;
              }
              if (*y != x) {
                w       = w.replaced(i, x.size(), *y);
                changed = true;
                break;
              }
            }
          }
          if (!changed) {
            return w;
          }
        }
      }

     private:
      std::optional<std::size_t> match_at(Word const& w, std::size_t pos) const {
        for (std::size_t k = 0; k < _code.words.size(); ++k) {
          if (w.occurs_at(_code.words[k], pos)) {
            return k;
          }
        }
        return std::nullopt;
      }

      GroupWord phi(Word const& w) const {
        GroupWord out;
        for (auto k : factor_over_code(w, _code)) {
          out.push_back(static_cast<int>(k) + 1);
        }
        return out;
      }

      // C*-words of exactly length n, lexicographic in the alphabet order.
      std::vector<Word> const& layer(std::size_t n) {
        auto it = _layers.find(n);
        if (it != _layers.end()) {
          return it->second;
        }
        std::vector<Word> out;
        if (n == 0) {
          out.emplace_back();
        } else {
          for (auto const& c : _code.words) {
            if (c.size() > n) {
              continue;
            }
            for (auto const& rest : layer(n - c.size())) {
              out.push_back(c + rest);
              if (out.size() > _limits.max_candidates) {
                _overflow = true;
                break;
              }
            }
          }
          std::sort(out.begin(), out.end(), [this](Word const& a, Word const& b) {
            return _p.alphabet().lex_less(a, b);
          });
        }
        return _layers.emplace(n, std::move(out)).first->second;
      }

      std::optional<Word> least_equal(Word const& x) {
        auto memo = _least.find(x);
        if (memo != _least.end()) {
          return memo->second;
        }
        GroupWord   inv_x = group_inverse(phi(x));
        std::size_t tried = 0;
        for (std::size_t n = 0; n <= x.size(); ++n) {
          for (auto const& y : layer(n)) {
            if (_overflow) {
              return std::nullopt;
            }
            if (y == x) {
              _least.emplace(x, x);
              return x;
            }
            if (++tried > _limits.max_candidates) {
              return std::nullopt;
            }
            GroupWord q = phi(y);
            q.insert(q.end(), inv_x.begin(), inv_x.end());
            Tri t = _oracle.is_identity(q);
            if (t == Tri::unknown) {
              return std::nullopt;
            }
            if (t == Tri::yes) {
              _least.emplace(x, y);
              return y;
            }
          }
        }
        _least.emplace(x, x);
        return x;
      }

      Presentation const&                      _p;
      UnitGroupOracle const&                   _oracle;
      Code const&                              _code;
      SpecialLimits                            _limits;
      std::map<std::size_t, std::vector<Word>> _layers;
      std::unordered_map<Word, Word>           _least;
      bool                                     _overflow = false;
    };

  }  // namespace

  struct SpecialSolver::Impl {
    Presentation                   p;
    UnitGroupOracle                oracle;
    NormalFormer                   former;
    std::unordered_map<Word, Word> forms;

    Impl(Presentation q, UnitGroupOracle o, SpecialLimits limits)
        : p(std::move(q)), oracle(std::move(o)), former(p, oracle, limits) {}
  };

  SpecialSolver::SpecialSolver(Presentation p, UnitGroupOracle oracle,
                               SpecialLimits limits) {
    if (!p.special()) {
      throw precondition_error("special_word_problem: presentation is not special");
    }
    if (!(oracle.group == unit_group_presentation(p))) {
      throw precondition_error(
          "special_word_problem: oracle does not present the unit group of "
          + to_string(p));
    }
    _impl = std::make_unique<Impl>(std::move(p), std::move(oracle), limits);
  }

  SpecialSolver::~SpecialSolver()                                   = default;
  SpecialSolver::SpecialSolver(SpecialSolver&&) noexcept            = default;
  SpecialSolver& SpecialSolver::operator=(SpecialSolver&&) noexcept = default;

  std::optional<Word> SpecialSolver::normal_form(Word const& w) {
    auto it = _impl->forms.find(w);
    if (it != _impl->forms.end()) {
      return it->second;
    }
    auto nf = _impl->former.run(w);
    if (nf) {
      _impl->forms.emplace(w, *nf);
    }
    return nf;
  }

  Verdict SpecialSolver::decide(Word const& u, Word const& v) {
    auto nu = normal_form(u);
    auto nv = normal_form(v);
    if (!nu || !nv) {
      return via("special", Verdict::unknown("unit-group oracle could not decide"));
    }
    std::string detail = "normal forms " + to_string(*nu) + " and " + to_string(*nv)
                         + " over " + _impl->oracle.description;
    if (*nu == *nv) {
      return via("special",
                 Verdict::equal(Certificate{CertificateKind::normal_form, detail, {}}));
    }
    return via("special",
               Verdict::not_equal(Certificate{CertificateKind::normal_form, detail, {}}));
  }

  std::optional<Word> special_normal_form(Presentation const&    p,
                                          Word const&            w,
                                          UnitGroupOracle const& oracle,
                                          SpecialLimits const&   limits) {
    return SpecialSolver(p, oracle, limits).normal_form(w);
  }

  Verdict special_word_problem(Presentation const&    p,
                               Word const&            u,
                               Word const&            v,
                               UnitGroupOracle const& oracle,
                               SpecialLimits const&   limits) {
    return SpecialSolver(p, oracle, limits).decide(u, v);
  }

}  // namespace onerel
