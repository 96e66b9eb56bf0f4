#include "onerel/verdict.hpp"

#include <array>
#include <utility>

namespace onerel {

  Verdict Verdict::equal(Certificate c, Confidence conf) {
    return Verdict{Outcome::equal, conf, std::move(c), {}};
  }

  Verdict Verdict::not_equal(Certificate c, Confidence conf) {
    return Verdict{Outcome::not_equal, conf, std::move(c), {}};
  }

  Verdict Verdict::unknown(std::string why) {
    return Verdict{Outcome::unknown,
                   Confidence::sound,
                   Certificate{CertificateKind::budget, std::move(why), {}},
                   {}};
  }

  Verdict via(std::string label, Verdict v) {
    v.route.insert(v.route.begin(), std::move(label));
    return v;
  }

  Verdict demote_heuristic(Verdict v) {
    if (v.decided() && v.confidence == Confidence::heuristic) {
      v.outcome = Outcome::unknown;
      v.certificate.detail += " (heuristic verdict withheld in strict mode)";
    }
    return v;
  }

  namespace {
    constexpr std::array outcome_names{"equal", "not_equal", "unknown"};
    constexpr std::array confidence_names{"sound", "reduced", "heuristic"};
    constexpr std::array kind_names{"none",
                                    "trace",
                                    "invariant",
                                    "headless",
                                    "loop_exact",
                                    "loop_heuristic",
                                    "closure",
                                    "normal_form",
                                    "reduction",
                                    "budget"};

    template <typename E, std::size_t N>
    std::optional<E> lookup(std::array<char const*, N> const& names,
                            std::string_view                 s) {
      for (std::size_t i = 0; i < N; ++i) {
        if (s == names[i]) {
          return static_cast<E>(i);
        }
      }
      return std::nullopt;
    }
  }  // namespace

  char const* to_string(Outcome o) noexcept {
    return outcome_names[static_cast<std::size_t>(o)];
  }
  char const* to_string(Confidence c) noexcept {
    return confidence_names[static_cast<std::size_t>(c)];
  }
  char const* to_string(CertificateKind k) noexcept {
    return kind_names[static_cast<std::size_t>(k)];
  }

  std::optional<Outcome> outcome_from_string(std::string_view s) {
    return lookup<Outcome>(outcome_names, s);
  }
  std::optional<Confidence> confidence_from_string(std::string_view s) {
    return lookup<Confidence>(confidence_names, s);
  }
  std::optional<CertificateKind> certificate_kind_from_string(std::string_view s) {
    return lookup<CertificateKind>(kind_names, s);
  }

}  // namespace onerel
