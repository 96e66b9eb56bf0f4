#include "onerel/compress.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <unordered_map>

#include "onerel/classify.hpp"

namespace onerel {

  ////////////////////////////////////////////////////////////////////////
  // Weak compression
  ////////////////////////////////////////////////////////////////////////

  std::vector<Word> weak_candidates(Presentation const& p) {
    std::vector<Word> out;
    if (p.special()) {
      return out;
    }
    Word const& u = p.lhs();
    Word const& v = p.rhs();
    for (std::size_t n = 1; n <= v.size(); ++n) {
      Word a = v.prefix(n);
      if (v.ends_with(a) && u.starts_with(a) && u.ends_with(a)
          && is_self_overlap_free(a)) {
        out.push_back(std::move(a));
      }
    }
    return out;
  }

  namespace {
    // Block letter names are a function of the gap; the registry inverts it.
    std::mutex                              registry_mtx;
    std::unordered_map<std::uint32_t, Word> registry;

    std::string gap_name(Word const& gap) {
      if (gap.empty()) {
        return "x_1";
      }
      bool single = std::all_of(
          gap.begin(), gap.end(), [](Letter x) { return x.name().size() == 1; });
      std::string out = "x";
      for (std::size_t i = 0; i < gap.size(); ++i) {
        if (single) {
          out += (i == 0 ? "_" : "") + gap[i].name();
        } else {
          out += "_" + gap[i].name();
        }
      }
      return out;
    }
  }  // namespace

  WeakCompression::WeakCompression(Presentation source, Word alpha)
      : _source(std::move(source)), _alpha(std::move(alpha)) {
    if (_alpha.empty() || !is_self_overlap_free(_alpha)) {
      throw precondition_error("weak compression needs a self-overlap free word");
    }
    for (auto const* w : {&_source.lhs(), &_source.rhs()}) {
      if (!w->starts_with(_alpha) || !w->ends_with(_alpha)) {
        throw precondition_error(to_string(_alpha) + " does not bound "
                                 + to_string(*w));
      }
    }
    Alphabet letters;
    Word     sides[2];
    int      s = 0;
    for (auto const* w : {&_source.lhs(), &_source.rhs()}) {
      for (auto const& b : blocks(*w)) {
        Letter x = letter_for(b);
        if (!letters.contains(x)) {
          letters.insert(x);
          _map.emplace_back(b, x);
        }
        sides[s].push_back(x);
      }
      ++s;
    }
    _left = Presentation(std::move(letters), sides[0], sides[1]);
  }

  std::vector<Word> WeakCompression::blocks(Word const& w) const {
    auto occ = w.occurrences(_alpha);
    if (occ.empty() || occ.front() != 0 || occ.back() + _alpha.size() != w.size()) {
      throw precondition_error(to_string(w) + " is not bounded by "
                               + to_string(_alpha));
    }
    std::vector<Word> out;
    for (std::size_t i = 0; i + 1 < occ.size(); ++i) {
      out.push_back(w.substr(occ[i], occ[i + 1] - occ[i]));
    }
    return out;
  }

  Letter WeakCompression::letter_for(Word const& block) const {
    Word   gap = block.substr(_alpha.size());
    Letter x(gap_name(gap));
    std::lock_guard lock(registry_mtx);
    auto [it, inserted] = registry.try_emplace(x.id(), gap);
    if (!inserted && it->second != gap) {
      throw precondition_error("block letter name clash: " + x.name());
    }
    return x;
  }

  Word WeakCompression::encode(Word const& w) const {
    Word out;
    for (auto const& b : blocks(w)) {
      out.push_back(letter_for(b));
    }
    return out;
  }

  Word WeakCompression::decode(Word const& x) const {
    Word out;
    for (auto e : x) {
      std::lock_guard lock(registry_mtx);
      auto            it = registry.find(e.id());
      if (it == registry.end()) {
        throw precondition_error("not a block letter: " + e.name());
      }
      out += _alpha;
      out += it->second;
    }
    return out + _alpha;
  }

  std::optional<WeakCompression> weak_compress(Presentation const& p,
                                               AlphaChoice         choice) {
    if (p.special() || p.trivial_relation()) {
      return std::nullopt;
    }
    auto cands = weak_candidates(p);
    if (cands.empty()) {
      return std::nullopt;
    }
    return WeakCompression(p, choice == AlphaChoice::longest ? cands.back()
                                                             : cands.front());
  }

  namespace {

    // Split at the first and last alpha occurrence:
    // prefix, middle (alpha...alpha), suffix.
    struct Split3 {
      Word prefix;
      Word middle;
      Word suffix;
    };

    Split3 split_alpha(Word const& w, Word const& alpha) {
      auto occ   = w.occurrences(alpha);
      auto first = occ.front();
      auto last  = occ.back() + alpha.size();
      return Split3{w.prefix(first), w.substr(first, last - first), w.substr(last)};
    }

    Verdict invariant_not_equal(std::string label, std::string why) {
      return via(std::move(label),
                 Verdict::not_equal(
                     Certificate{CertificateKind::invariant, std::move(why), {}}));
    }

    Verdict singleton_verdict(std::string label, Word const& u, Word const& v) {
      if (u == v) {
        return via(std::move(label),
                   Verdict::equal(Certificate{CertificateKind::trace,
                                              "graphically equal",
                                              identity_trace(u)}));
      }
      return invariant_not_equal(std::move(label),
                                 "no relation side occurs, so the class of "
                                 "such a word is a singleton");
    }

    // Wraps a sub-verdict from a reduced presentation. Equal keeps a trace
    // only if it lifted and replays in the source.
    Verdict lift_verdict(std::string               label,
                         Verdict                   sub,
                         Presentation const&       source,
                         std::optional<Trace>      lifted) {
      Verdict out = sub;
      if (sub.outcome == Outcome::equal) {
        if (lifted && is_valid(*lifted, source)) {
          out.certificate = Certificate{CertificateKind::trace,
                                        "derivation lifted from the reduced "
                                        "presentation",
                                        lifted};
        } else {
          out.certificate
              = Certificate{CertificateKind::reduction,
                            "equal in the reduced presentation: "
                                + sub.certificate.detail,
                            std::nullopt};
          if (out.confidence == Confidence::sound) {
            out.confidence = Confidence::reduced;
          }
        }
      }
      return via(std::move(label), std::move(out));
    }

  }  // namespace

  Verdict decide_weak(WeakCompression const& wc,
                      Word const&            u,
                      Word const&            v,
                      Solver const&          recurse) {
    Word const& a  = wc.alpha();
    bool        hu = u.contains(a);
    bool        hv = v.contains(a);
    if (!hu && !hv) {
      return singleton_verdict("weak", u, v);
    }
    if (hu != hv) {
      return invariant_not_equal("weak", "containing " + to_string(a)
                                             + " as a factor is invariant");
    }
    auto su = split_alpha(u, a);
    auto sv = split_alpha(v, a);
    if (su.prefix != sv.prefix) {
      return invariant_not_equal("weak", "the prefix before the first "
                                             + to_string(a) + " is invariant");
    }
    if (su.suffix != sv.suffix) {
      return invariant_not_equal("weak", "the suffix after the last "
                                             + to_string(a) + " is invariant");
    }
    Word du     = wc.encode(su.middle);
    Word dv     = wc.encode(sv.middle);
    auto target = wc.left_monoid().with_letters(du + dv);
    auto sub    = recurse(target, du, dv);

    std::optional<Trace> lifted;
    if (sub.outcome == Outcome::equal && sub.certificate.trace) {
      Trace const& t     = *sub.certificate.trace;
      Word const&  enc_l = wc.encode(wc.source().lhs());
      Trace        out   = identity_trace(u);
      try {
        auto words = replay(t, target);
        for (std::size_t i = 0; i < t.steps.size(); ++i) {
          auto const& s    = t.steps[i];
          Word const& from = replaced_side(target, s.direction);
          std::size_t pos  = su.prefix.size();
          for (std::size_t q = 0; q < s.position; ++q) {
            pos += wc.decode(Word{words[i][q]}).size() - a.size();
          }
          Direction d = from == enc_l ? Direction::forward : Direction::backward;
          push_step(out, wc.source(), ElementaryStep{pos, d});
        }
        if (out.end == v) {
          lifted = out;
        }
      } catch (precondition_error const&) {
        lifted.reset();
      }
    }
    return lift_verdict("weak", std::move(sub), wc.source(), lifted);
  }

  ////////////////////////////////////////////////////////////////////////
  // Strong compression
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::size_t common_prefix_length(Word const& x, Word const& y) {
      std::size_t n = 0;
      while (n < x.size() && n < y.size() && x[n] == y[n]) {
        ++n;
      }
      return n;
    }
  }  // namespace

  StrongCompression::StrongCompression(Presentation source, Word c, Word d)
      : _source(std::move(source)),
        _c(std::move(c)),
        _d(std::move(d)),
        _k(1 + std::min(_c.size(), _d.size())) {
    std::size_t m     = _source.alphabet().size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < _k; ++i) {
      if (total > std::numeric_limits<std::size_t>::max() / m) {
        throw precondition_error("window alphabet too large");
      }
      total *= m;
    }
    Word u = encode(_source.lhs());
    Word v = encode(_source.rhs());
    std::vector<Letter> used;
    for (auto const* w : {&u, &v}) {
      for (auto e : *w) {
        if (std::find(used.begin(), used.end(), e) == used.end()) {
          used.push_back(e);
        }
      }
    }
    std::sort(used.begin(), used.end(), [this](Letter x, Letter y) {
      return window_index(window_of(x)) < window_index(window_of(y));
    });
    _m_tau = Presentation(Alphabet(used), u, v);
  }

  std::size_t StrongCompression::window_index(Word const& window) const {
    if (window.size() != _k) {
      throw precondition_error("window of wrong length");
    }
    std::size_t m = _source.alphabet().size();
    std::size_t r = 0;
    for (auto x : window) {
      r = r * m + _source.alphabet().rank(x);
    }
    return r + 1;
  }

  Letter StrongCompression::window_letter(Word const& window) const {
    return Letter("e" + std::to_string(window_index(window)));
  }

  Word StrongCompression::window_of(Letter e) const {
    auto const& n = e.name();
    if (n.size() < 2 || n[0] != 'e'
        || n.find_first_not_of("0123456789", 1) != std::string::npos) {
      throw precondition_error("not a window letter: " + n);
    }
    std::size_t m = _source.alphabet().size();
    std::size_t r = std::stoull(n.substr(1)) - 1;
    std::vector<Letter> out(_k);
    for (std::size_t i = _k; i-- > 0;) {
      out[i] = _source.alphabet()[r % m];
      r /= m;
    }
    if (r != 0) {
      throw precondition_error("window index out of range: " + n);
    }
    return Word(std::move(out));
  }

  Word StrongCompression::encode(Word const& w) const {
    Word out;
    for (std::size_t i = 0; i + _k <= w.size(); ++i) {
      out.push_back(window_letter(w.substr(i, _k)));
    }
    return out;
  }

  Word StrongCompression::decode(Word const& e) const {
    if (e.empty()) {
      return Word();
    }
    Word out = window_of(e[0]);
    for (std::size_t i = 1; i < e.size(); ++i) {
      Word win = window_of(e[i]);
      if (win.prefix(_k - 1) != out.suffix(_k - 1)) {
        throw precondition_error("windows do not chain");
      }
      out.push_back(win.back());
    }
    return out;
  }

  std::optional<StrongCompression> strong_compress(Presentation const& p) {
    if (p.special() || p.trivial_relation()) {
      return std::nullopt;
    }
    Word const& u = p.lhs();
    Word const& v = p.rhs();
    if (u.front() != v.front() || u.back() != v.back()) {
      return std::nullopt;
    }
    std::size_t c = common_prefix_length(u, v);
    std::size_t d = common_prefix_length(u.reversed(), v.reversed());
    return StrongCompression(p, u.prefix(c), u.suffix(d));
  }

  Verdict decide_strong(StrongCompression const& sc,
                        Word const&              u,
                        Word const&              v,
                        Solver const&            recurse) {
    auto const& p = sc.source();
    if (u == v) {
      return singleton_verdict("strong", u, v);
    }
    auto touches = [&p](Word const& w) {
      return w.contains(p.lhs()) || w.contains(p.rhs());
    };
    if (!touches(u) || !touches(v)) {
      return singleton_verdict("strong", u, v);
    }
    std::size_t k1 = sc.k() - 1;
    if (u.prefix(k1) != v.prefix(k1) || u.suffix(k1) != v.suffix(k1)) {
      return invariant_not_equal(
          "strong", "the first and last " + std::to_string(k1)
                        + " letters are invariant");
    }
    Word tu     = sc.encode(u);
    Word tv     = sc.encode(v);
    auto target = sc.m_tau().with_letters(tu + tv);
    auto sub    = recurse(target, tu, tv);

    std::optional<Trace> lifted;
    if (sub.outcome == Outcome::equal && sub.certificate.trace) {
      // A window-level step at position q is the same replacement at
      // position q in the source, provided the replaced side has length >= k.
      Trace const& t     = *sub.certificate.trace;
      Word         enc_l = sc.encode(p.lhs());
      Trace        out   = identity_trace(u);
      try {
        for (auto const& s : t.steps) {
          Word const& from = replaced_side(target, s.direction);
          Direction   d    = from == enc_l ? Direction::forward : Direction::backward;
          push_step(out, p, ElementaryStep{s.position, d});
        }
        if (out.end == v) {
          lifted = out;
        }
      } catch (precondition_error const&) {
        lifted.reset();
      }
    }
    return lift_verdict("strong", std::move(sub), p, lifted);
  }

  ////////////////////////////////////////////////////////////////////////
  // Collapse
  ////////////////////////////////////////////////////////////////////////

  std::pair<CollapseMap, Presentation> collapse_generators(Presentation const& p) {
    if (p.special() || !left_cycle_free(p)) {
      throw precondition_error("collapse_generators needs a left cycle-free "
                               "presentation");
    }
    auto const& a  = p.alphabet();
    Letter      f1 = p.lhs().front();
    Letter      f2 = p.rhs().front();
    CollapseMap map;
    Letter      non_rep = a.rank(f1) < a.rank(f2) ? f2 : f1;
    for (auto x : a) {
      if (x != non_rep) {
        map.representatives.push_back(x);
      }
    }
    std::string name = "c1";
    while (Letter(name) == non_rep) {
      name += "_";
    }
    map.collapsed = Letter(name);
    auto subst    = [&](Word const& w) {
      Word out;
      for (auto x : w) {
        out.push_back(x == non_rep ? x : map.collapsed);
      }
      return out;
    };
    Alphabet out_alphabet(std::vector<Letter>{map.collapsed, non_rep});
    return {map, Presentation(out_alphabet, subst(p.lhs()), subst(p.rhs()))};
  }

  char const* to_string(StepKind k) noexcept {
    switch (k) {
      case StepKind::reverse:
        return "reverse";
      case StepKind::weak:
        return "weak";
      case StepKind::strong:
        return "strong";
      case StepKind::collapse:
        return "collapse";
    }
    return "?";
  }

  namespace {
    std::size_t distinct_letters(Presentation const& p) {
      std::vector<Letter> seen;
      for (auto const* w : {&p.lhs(), &p.rhs()}) {
        for (auto x : *w) {
          if (std::find(seen.begin(), seen.end(), x) == seen.end()) {
            seen.push_back(x);
          }
        }
      }
      return seen.size();
    }
  }  // namespace

  ReductionPipeline reduce_to_canonical(Presentation const& p) {
    ReductionPipeline out{p, {}, p};
    Presentation      cur = p;
    while (true) {
      if (auto wc = weak_compress(cur)) {
        Presentation next = wc->left_monoid();
        out.steps.push_back(PipelineStep{StepKind::weak, cur, next, true, *wc});
        cur = std::move(next);
        continue;
      }
      if (auto sc = strong_compress(cur)) {
        Presentation next = sc->m_tau();
        out.steps.push_back(PipelineStep{StepKind::strong, cur, next, true, *sc});
        cur = std::move(next);
        continue;
      }
      break;
    }
    if (!cur.special() && !cur.trivial_relation() && !left_cycle_free(cur)
        && right_cycle_free(cur)) {
      Presentation next = reverse_presentation(cur);
      out.steps.push_back(PipelineStep{StepKind::reverse, cur, next, true, {}});
      cur = std::move(next);
    }
    if (!cur.special() && !cur.trivial_relation() && left_cycle_free(cur)) {
      auto [map, next] = collapse_generators(cur);
      if (distinct_letters(next) < distinct_letters(cur)) {
        out.steps.push_back(PipelineStep{StepKind::collapse, cur, next, false, map});
        cur = std::move(next);
      }
    }
    out.final = cur;
    return out;
  }

}  // namespace onerel
