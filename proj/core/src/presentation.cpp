#include "onerel/presentation.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace onerel {

  namespace {
    std::string_view trim(std::string_view s) {
      auto ws = [](char c) {
        return c == ' ' || c == '\t' || c == '\r' || c == '\n';
      };
      while (!s.empty() && ws(s.front())) {
        s.remove_prefix(1);
      }
      while (!s.empty() && ws(s.back())) {
        s.remove_suffix(1);
      }
      return s;
    }
  }  // namespace

  Presentation::Presentation(Alphabet alphabet, Word u, Word v)
      : _alphabet(std::move(alphabet)) {
    if (u.empty() && v.empty()) {
      throw precondition_error("relation 1 = 1 has no nonempty side");
    }
    for (auto const* w : {&u, &v}) {
      for (auto x : *w) {
        if (!_alphabet.contains(x)) {
          throw precondition_error("letter \"" + x.name()
                                   + "\" is not in the alphabet");
        }
      }
    }
    bool swap = u.size() < v.size()
                || (u.size() == v.size() && _alphabet.lex_less(v, u));
    if (swap) {
      std::swap(u, v);
    }
    _lhs = std::move(u);
    _rhs = std::move(v);
  }

  Presentation Presentation::with_letters(Word const& w) const {
    Presentation out = *this;
    for (auto x : w) {
      out._alphabet.insert(x);
    }
    return out;
  }

  Presentation parse_presentation(std::string_view text) {
    auto bar = text.find('|');
    if (bar == std::string_view::npos) {
      throw parse_error("expected \"letters | word = word\"");
    }
    auto head = trim(text.substr(0, bar));
    auto body = trim(text.substr(bar + 1));
    if (head.empty()) {
      throw parse_error("empty alphabet");
    }
    std::vector<Letter> letters;
    while (true) {
      auto comma = head.find(',');
      auto name  = trim(head.substr(0, comma));
      if (!is_identifier(name)) {
        throw parse_error("invalid letter name \"" + std::string(name) + "\"");
      }
      letters.emplace_back(name);
      if (comma == std::string_view::npos) {
        break;
      }
      head = head.substr(comma + 1);
    }
    Alphabet alphabet(std::move(letters));
    auto     eq = body.find('=');
    if (eq == std::string_view::npos || body.find('=', eq + 1) != body.npos) {
      throw parse_error("expected exactly one \"=\" in the relation");
    }
    auto lhs = trim(body.substr(0, eq));
    auto rhs = trim(body.substr(eq + 1));
    for (auto side : {lhs, rhs}) {
      if (side.find_first_of(" \t") != std::string_view::npos) {
        throw parse_error("whitespace inside a word");
      }
    }
    Word u = parse_word(lhs, alphabet);
    Word v = parse_word(rhs, alphabet);
    if (u.empty() && v.empty()) {
      throw parse_error("relation 1 = 1 has no nonempty side");
    }
    return Presentation(std::move(alphabet), std::move(u), std::move(v));
  }

  std::string to_string(Presentation const& p) {
    return to_string(p.alphabet()) + " | " + to_string(p.lhs())
           + " = " + to_string(p.rhs());
  }

  Presentation reverse_presentation(Presentation const& p) {
    return Presentation(p.alphabet(), p.lhs().reversed(), p.rhs().reversed());
  }

  namespace {
    std::vector<Letter> used_letters(Presentation const& p) {
      std::vector<Letter> out;
      for (auto x : p.alphabet()) {
        if (std::find(p.lhs().begin(), p.lhs().end(), x) != p.lhs().end()
            || std::find(p.rhs().begin(), p.rhs().end(), x) != p.rhs().end()) {
          out.push_back(x);
        }
      }
      return out;
    }

    Word rename(Word const& w, std::map<std::uint32_t, Letter> const& m) {
      Word out;
      for (auto x : w) {
        out.push_back(m.at(x.id()));
      }
      return out;
    }
  }  // namespace

  bool isomorphic_up_to_renaming(Presentation const& p, Presentation const& q) {
    if (p.lhs().size() != q.lhs().size() || p.rhs().size() != q.rhs().size()) {
      return false;
    }
    auto a = used_letters(p);
    auto b = used_letters(q);
    if (a.size() != b.size() || a.size() > 9) {
      return false;
    }
    std::vector<std::size_t> perm(b.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::map<std::uint32_t, Letter> m;
      for (std::size_t i = 0; i < a.size(); ++i) {
        m[a[i].id()] = b[perm[i]];
      }
      Word u = rename(p.lhs(), m);
      Word v = rename(p.rhs(), m);
      if ((u == q.lhs() && v == q.rhs()) || (u == q.rhs() && v == q.lhs())) {
        return true;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  }

  Word const& replaced_side(Presentation const& p, Direction d) noexcept {
    return d == Direction::forward ? p.lhs() : p.rhs();
  }

  Word const& inserted_side(Presentation const& p, Direction d) noexcept {
    return d == Direction::forward ? p.rhs() : p.lhs();
  }

  Word apply_step(Word const& w, Presentation const& p, ElementaryStep s) {
    Word const& from = replaced_side(p, s.direction);
    if (!w.occurs_at(from, s.position)) {
      throw precondition_error("rejected step: " + to_string(from)
                               + " does not occur in " + to_string(w)
                               + " at position " + std::to_string(s.position));
    }
    return w.replaced(s.position, from.size(), inserted_side(p, s.direction));
  }

  std::vector<std::pair<ElementaryStep, Word>>
  neighbours(Word const& w, Presentation const& p) {
    std::vector<std::pair<ElementaryStep, Word>> out;
    for (auto d : {Direction::forward, Direction::backward}) {
      Word const& from = replaced_side(p, d);
      Word const& to   = inserted_side(p, d);
      if (from == to) {
        continue;
      }
      // The empty side occurs at every position, including the end.
      std::size_t last = w.size() >= from.size() ? w.size() - from.size() : 0;
      if (from.size() > w.size()) {
        continue;
      }
      for (std::size_t i = 0; i <= last; ++i) {
        if (w.occurs_at(from, i)) {
          out.emplace_back(ElementaryStep{i, d}, w.replaced(i, from.size(), to));
        }
      }
    }
    return out;
  }

}  // namespace onerel
