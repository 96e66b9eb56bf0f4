#include "onerel/word.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>

namespace onerel {

  namespace {

    // Id 0 is reserved for the default-constructed letter.
    class symbol_table {
     public:
      symbol_table() {
        _names.emplace_back();
      }

      std::uint32_t intern(std::string_view name) {
        {
          std::shared_lock lock(_mtx);
          auto             it = _ids.find(std::string(name));
          if (it != _ids.end()) {
            return it->second;
          }
        }
        std::unique_lock lock(_mtx);
        auto [it, inserted] = _ids.try_emplace(
            std::string(name), static_cast<std::uint32_t>(_names.size()));
        if (inserted) {
          _names.emplace_back(name);
        }
        return it->second;
      }

      // Deque elements are never moved, so references stay valid.
      std::string const& name(std::uint32_t id) const {
        std::shared_lock lock(_mtx);
        return _names.at(id);
      }

     private:
      mutable std::shared_mutex                      _mtx;
      std::deque<std::string>                        _names;
      std::unordered_map<std::string, std::uint32_t> _ids;
    };

    symbol_table& symbols() {
      static symbol_table table;
      return table;
    }

  }  // namespace

  bool is_identifier(std::string_view s) noexcept {
    auto alpha = [](char c) {
      return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
    };
    auto digit = [](char c) { return c >= '0' && c <= '9'; };
    if (s.empty() || !alpha(s.front())) {
      return false;
    }
    return std::all_of(
        s.begin(), s.end(), [&](char c) { return alpha(c) || digit(c); });
  }

  Letter::Letter(std::string_view name) {
    if (!is_identifier(name)) {
      throw parse_error("invalid letter name \"" + std::string(name) + "\"");
    }
    _id = symbols().intern(name);
  }

  std::string const& Letter::name() const {
    return symbols().name(_id);
  }

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  Word Word::substr(std::size_t pos, std::size_t len) const {
    if (pos >= size()) {
      return Word();
    }
    len = std::min(len, size() - pos);
    return Word(_letters.begin() + pos, _letters.begin() + pos + len);
  }

  Word Word::suffix(std::size_t len) const {
    len = std::min(len, size());
    return Word(_letters.end() - len, _letters.end());
  }

  Word Word::reversed() const {
    return Word(_letters.rbegin(), _letters.rend());
  }

  bool Word::starts_with(Word const& w) const noexcept {
    return occurs_at(w, 0);
  }

  bool Word::ends_with(Word const& w) const noexcept {
    return w.size() <= size() && occurs_at(w, size() - w.size());
  }

  bool Word::occurs_at(Word const& w, std::size_t pos) const noexcept {
    if (pos > size() || w.size() > size() - pos) {
      return false;
    }
    return std::equal(w.begin(), w.end(), _letters.begin() + pos);
  }

  std::optional<std::size_t> Word::find(Word const& w, std::size_t from) const {
    if (from > size() || w.size() > size()) {
      return std::nullopt;
    }
    auto it = std::search(_letters.begin() + from, _letters.end(), w.begin(), w.end());
    if (it == _letters.end() && !w.empty()) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - _letters.begin());
  }

  std::vector<std::size_t> Word::occurrences(Word const& w) const {
    std::vector<std::size_t> out;
    if (w.empty() || w.size() > size()) {
      return out;
    }
    for (std::size_t i = 0; i + w.size() <= size(); ++i) {
      if (occurs_at(w, i)) {
        out.push_back(i);
      }
    }
    return out;
  }

  Word Word::replaced(std::size_t pos, std::size_t len, Word const& w) const {
    std::vector<Letter> out;
    out.reserve(size() - len + w.size());
    out.insert(out.end(), _letters.begin(), _letters.begin() + pos);
    out.insert(out.end(), w.begin(), w.end());
    out.insert(out.end(), _letters.begin() + pos + len, _letters.end());
    return Word(std::move(out));
  }

  Word pow(Word const& w, std::size_t n) {
    Word out;
    for (std::size_t i = 0; i < n; ++i) {
      out += w;
    }
    return out;
  }

  std::string to_string(Word const& w) {
    if (w.empty()) {
      return "1";
    }
    bool single = std::all_of(
        w.begin(), w.end(), [](Letter x) { return x.name().size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!single && i != 0) {
        out += '.';
      }
      out += w[i].name();
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Alphabet
  ////////////////////////////////////////////////////////////////////////

  Alphabet::Alphabet(std::vector<Letter> letters) {
    for (auto x : letters) {
      if (contains(x)) {
        throw parse_error("duplicate letter \"" + x.name() + "\" in alphabet");
      }
      insert(x);
    }
  }

  Alphabet::Alphabet(std::initializer_list<std::string_view> names) {
    for (auto n : names) {
      Letter x(n);
      if (contains(x)) {
        throw parse_error("duplicate letter \"" + x.name() + "\" in alphabet");
      }
      insert(x);
    }
  }

  bool Alphabet::contains(Word const& w) const {
    return std::all_of(
        w.begin(), w.end(), [this](Letter x) { return contains(x); });
  }

  std::size_t Alphabet::rank(Letter x) const {
    auto it = _rank.find(x.id());
    if (it == _rank.end()) {
      throw precondition_error("letter \"" + x.name() + "\" not in alphabet");
    }
    return it->second;
  }

  std::size_t Alphabet::insert(Letter x) {
    auto [it, inserted] = _rank.try_emplace(x.id(), _letters.size());
    if (inserted) {
      _letters.push_back(x);
    }
    return it->second;
  }

  bool Alphabet::single_char_names() const {
    return std::all_of(_letters.begin(), _letters.end(), [](Letter x) {
      return x.name().size() == 1;
    });
  }

  bool Alphabet::lex_less(Word const& u, Word const& v) const {
    return std::lexicographical_compare(
        u.begin(), u.end(), v.begin(), v.end(), [this](Letter x, Letter y) {
          return rank(x) < rank(y);
        });
  }

  bool Alphabet::shortlex_less(Word const& u, Word const& v) const {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    return lex_less(u, v);
  }

  std::string to_string(Alphabet const& a) {
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i != 0) {
        out += ',';
      }
      out += a[i].name();
    }
    return out;
  }

  Word parse_word(std::string_view text, Alphabet const& alphabet) {
    if (text == "1") {
      return Word();
    }
    if (text.empty()) {
      throw parse_error("empty word (use 1 for the identity)");
    }
    Word        out;
    std::size_t i = 0;
    while (i < text.size()) {
      if (text[i] == '.') {
        ++i;
        continue;
      }
      std::optional<Letter> best;
      std::size_t           best_len = 0;
      for (auto x : alphabet) {
        auto const& n = x.name();
        if (n.size() > best_len && text.substr(i, n.size()) == n) {
          best     = x;
          best_len = n.size();
        }
      }
      if (!best) {
        throw parse_error("undeclared letter at \"" + std::string(text.substr(i))
                          + "\"");
      }
      out.push_back(*best);
      i += best_len;
    }
    return out;
  }

  Word word_from_chars(std::string_view text) {
    Word out;
    for (char c : text) {
      out.push_back(Letter(std::string_view(&c, 1)));
    }
    return out;
  }

  std::vector<std::size_t> letter_counts(Word const& w, Alphabet const& a) {
    std::vector<std::size_t> out(a.size(), 0);
    for (auto x : w) {
      ++out[a.rank(x)];
    }
    return out;
  }

}  // namespace onerel
