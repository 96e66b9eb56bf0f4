#pragma once

#include <string>

#include "onerel/onerel.hpp"

namespace test {

  inline onerel::Presentation P(std::string const& s) {
    return onerel::parse_presentation(s);
  }

  inline onerel::Word W(onerel::Presentation const& p, std::string const& s) {
    return s.empty() ? onerel::Word() : onerel::parse_word(s, p.alphabet());
  }

  inline std::string S(onerel::Word const& w) {
    return onerel::to_string(w);
  }

}  // namespace test
