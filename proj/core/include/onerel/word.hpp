#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace onerel {

  class parse_error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class precondition_error : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

  // Interned symbol. Two letters are equal iff their names are equal.
  class Letter {
   public:
    Letter() = default;
    explicit Letter(std::string_view name);

    std::string const& name() const;
    std::uint32_t      id() const noexcept {
      return _id;
    }

    friend bool operator==(Letter, Letter) noexcept = default;

   private:
    std::uint32_t _id = 0;
  };

  bool is_identifier(std::string_view s) noexcept;

  class Word {
   public:
    using value_type     = Letter;
    using const_iterator = std::vector<Letter>::const_iterator;

    Word() = default;
    Word(std::initializer_list<Letter> il) : _letters(il) {}
    explicit Word(std::vector<Letter> letters) : _letters(std::move(letters)) {}
    template <typename It>
    Word(It first, It last) : _letters(first, last) {}

    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    Letter operator[](std::size_t i) const {
      return _letters[i];
    }
    Letter front() const {
      return _letters.front();
    }
    Letter back() const {
      return _letters.back();
    }
    const_iterator begin() const noexcept {
      return _letters.begin();
    }
    const_iterator end() const noexcept {
      return _letters.end();
    }
    std::vector<Letter> const& letters() const noexcept {
      return _letters;
    }

    void push_back(Letter x) {
      _letters.push_back(x);
    }
    void pop_back() {
      _letters.pop_back();
    }
    Word& operator+=(Word const& other) {
      _letters.insert(_letters.end(), other.begin(), other.end());
      return *this;
    }
    Word& operator+=(Letter x) {
      _letters.push_back(x);
      return *this;
    }

    // Clamped: pos > size() yields the empty word.
    Word substr(std::size_t pos, std::size_t len = std::string::npos) const;
    Word prefix(std::size_t len) const {
      return substr(0, len);
    }
    Word suffix(std::size_t len) const;
    Word reversed() const;

    bool starts_with(Word const& w) const noexcept;
    bool ends_with(Word const& w) const noexcept;
    bool occurs_at(Word const& w, std::size_t pos) const noexcept;
    bool contains(Word const& w) const {
      return find(w).has_value();
    }
    std::optional<std::size_t> find(Word const& w, std::size_t from = 0) const;
    std::vector<std::size_t>   occurrences(Word const& w) const;

    // Replaces the factor [pos, pos + len) by w.
    Word replaced(std::size_t pos, std::size_t len, Word const& w) const;

    friend bool operator==(Word const&, Word const&) = default;

    friend Word operator+(Word lhs, Word const& rhs) {
      lhs += rhs;
      return lhs;
    }
    friend Word operator+(Word lhs, Letter x) {
      lhs += x;
      return lhs;
    }
    friend Word operator+(Letter x, Word const& rhs) {
      Word out{x};
      out += rhs;
      return out;
    }

   private:
    std::vector<Letter> _letters;
  };

  Word pow(Word const& w, std::size_t n);

  // Single-character names are juxtaposed, otherwise letters are joined by
  // '.'; the empty word renders as "1".
  std::string to_string(Word const& w);

  // Ordered finite set of letters; order drives lexicographic comparisons.
  class Alphabet {
   public:
    Alphabet() = default;
    explicit Alphabet(std::vector<Letter> letters);
    Alphabet(std::initializer_list<std::string_view> names);

    std::size_t size() const noexcept {
      return _letters.size();
    }
    Letter operator[](std::size_t i) const {
      return _letters[i];
    }
    auto begin() const noexcept {
      return _letters.begin();
    }
    auto end() const noexcept {
      return _letters.end();
    }
    std::vector<Letter> const& letters() const noexcept {
      return _letters;
    }

    bool contains(Letter x) const {
      return _rank.count(x.id()) != 0;
    }
    bool contains(Word const& w) const;
    std::size_t rank(Letter x) const;

    // Appends x if absent; returns its rank.
    std::size_t insert(Letter x);

    bool single_char_names() const;

    // Lexicographic order on words; a proper prefix is smaller.
    bool lex_less(Word const& u, Word const& v) const;
    // Shortlex: shorter first, then lexicographic.
    bool shortlex_less(Word const& u, Word const& v) const;

    friend bool operator==(Alphabet const& x, Alphabet const& y) {
      return x._letters == y._letters;
    }

   private:
    std::vector<Letter>                           _letters;
    std::unordered_map<std::uint32_t, std::size_t> _rank;
  };

  std::string to_string(Alphabet const& a);

  // Greedy longest match against the alphabet; '.' separators are skipped and
  // the literal "1" denotes the empty word.
  Word parse_word(std::string_view text, Alphabet const& alphabet);

  // Convenience for tests and examples: one letter per character.
  Word word_from_chars(std::string_view text);

  std::vector<std::size_t> letter_counts(Word const& w, Alphabet const& a);

}  // namespace onerel

template <>
struct std::hash<onerel::Letter> {
  std::size_t operator()(onerel::Letter x) const noexcept {
    return std::hash<std::uint32_t>{}(x.id());
  }
};

template <>
struct std::hash<onerel::Word> {
  std::size_t operator()(onerel::Word const& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto x : w) {
      h ^= x.id() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};
