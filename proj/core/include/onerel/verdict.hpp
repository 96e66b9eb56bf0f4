#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "onerel/trace.hpp"

namespace onerel {

  enum class Outcome { equal, not_equal, unknown };

  // sound: backed by a replayable trace or an invariant.
  // reduced: Equal obtained through a reduction whose converse is cited, not
  // re-proved.
  // heuristic: rests on a loop pattern that is not known to be complete.
  enum class Confidence { sound, reduced, heuristic };

  enum class CertificateKind {
    none,
    trace,
    invariant,
    headless,
    loop_exact,
    loop_heuristic,
    closure,
    normal_form,
    reduction,
    budget
  };

  struct Certificate {
    CertificateKind      kind = CertificateKind::none;
    std::string          detail;
    std::optional<Trace> trace;
  };

  struct Verdict {
    Outcome                  outcome    = Outcome::unknown;
    Confidence               confidence = Confidence::sound;
    Certificate              certificate;
    std::vector<std::string> route;

    bool decided() const noexcept {
      return outcome != Outcome::unknown;
    }

    static Verdict equal(Certificate c, Confidence conf = Confidence::sound);
    static Verdict not_equal(Certificate c, Confidence conf = Confidence::sound);
    static Verdict unknown(std::string why);
  };

  // Prepends a route label.
  Verdict via(std::string label, Verdict v);

  // Heuristic verdicts become Unknown; the certificate is kept for reporting.
  Verdict demote_heuristic(Verdict v);

  char const* to_string(Outcome o) noexcept;
  char const* to_string(Confidence c) noexcept;
  char const* to_string(CertificateKind k) noexcept;

  std::optional<Outcome>         outcome_from_string(std::string_view s);
  std::optional<Confidence>      confidence_from_string(std::string_view s);
  std::optional<CertificateKind> certificate_kind_from_string(std::string_view s);

  using Solver
      = std::function<Verdict(Presentation const&, Word const&, Word const&)>;

}  // namespace onerel
