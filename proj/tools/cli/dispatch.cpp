#include "dispatch.hpp"

#include <chrono>
#include <sstream>

namespace onerel::cli {

  namespace {

    Verdict search(Presentation const& p,
                   Word const&         u,
                   Word const&         v,
                   Options const&      opts) {
      return to_verdict(bfs_decide(u, v, p, opts.bfs));
    }

    Verdict with_fallback(Verdict                 v,
                          Presentation const&     p,
                          Word const&             a,
                          Word const&             b,
                          Options const&          opts) {
      if (v.decided()) {
        return v;
      }
      Verdict s = search(p, a, b, opts);
      s.route.insert(s.route.begin(), v.route.begin(), v.route.end());
      return s;
    }

    Verdict route(Presentation const& p,
                  Word const&         u,
                  Word const&         v,
                  Options const&      opts,
                  std::size_t         depth);

    Solver recursor(Options const& opts, std::size_t depth) {
      return [&opts, depth](Presentation const& q, Word const& a, Word const& b) {
        if (depth + 1 > opts.max_depth) {
          return via("depth", Verdict::unknown("compression depth limit"));
        }
        return route(q, a, b, opts, depth + 1);
      };
    }

    Verdict route(Presentation const& p,
                  Word const&         u,
                  Word const&         v,
                  Options const&      opts,
                  std::size_t         depth) {
      if (u == v) {
        return via("identity",
                   Verdict::equal(Certificate{CertificateKind::trace,
                                              "graphically equal",
                                              identity_trace(u)}));
      }
      if (p.trivial_relation()) {
        return via("trivial",
                   Verdict::not_equal(Certificate{CertificateKind::invariant,
                                                  "the relation is u = u, so "
                                                  "the monoid is free",
                                                  {}}));
      }
      if (p.equal_length()) {
        return equal_length_decide(u, v, p);
      }
      if (is_self_overlap_free(p.lhs())) {
        return sof_rewrite_decide(u, v, p);
      }
      if (p.special()) {
        auto oracle = builtin_oracle(unit_group_presentation(p));
        if (!oracle) {
          return via("special", search(p, u, v, opts));
        }
        return with_fallback(special_word_problem(p, u, v, *oracle, opts.special),
                             p, u, v, opts);
      }
      if (auto wc = weak_compress(p)) {
        return with_fallback(decide_weak(*wc, u, v, recursor(opts, depth)), p, u,
                             v, opts);
      }
      if (auto sc = strong_compress(p)) {
        return with_fallback(decide_strong(*sc, u, v, recursor(opts, depth)), p,
                             u, v, opts);
      }
      AdianOptions ao{opts.adian, opts.strict};
      if (left_cycle_free(p)) {
        return with_fallback(solve_left_cycle_free(u, v, p, ao), p, u, v, opts);
      }
      if (right_cycle_free(p)) {
        return with_fallback(solve_right_cycle_free(u, v, p, ao), p, u, v, opts);
      }
      return search(p, u, v, opts);
    }

  }  // namespace

  Verdict dispatch_solve(Presentation const& p,
                         Word const&         u,
                         Word const&         v,
                         Options const&      opts) {
    for (auto const* w : {&u, &v}) {
      if (!p.alphabet().contains(*w)) {
        throw precondition_error("query word " + to_string(*w)
                                 + " uses a letter outside the alphabet");
      }
    }
    Verdict out = route(p, u, v, opts, 0);
    if (opts.strict) {
      out = demote_heuristic(std::move(out));
      if (out.outcome == Outcome::equal && !out.certificate.trace) {
        auto r = bfs_decide(u, v, p, opts.bfs);
        if (r.kind == BfsKind::equal) {
          out.certificate = Certificate{CertificateKind::trace,
                                        "re-verified by search: "
                                            + out.certificate.detail,
                                        r.trace};
          out.confidence  = Confidence::sound;
          out.route.push_back("bfs-verify");
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // JSON
  ////////////////////////////////////////////////////////////////////////

  void to_json(nlohmann::json& j, PipelineRecord const& r) {
    j = nlohmann::json{{"kind", r.kind},
                       {"before", r.before},
                       {"after", r.after},
                       {"translates_queries", r.translates_queries},
                       {"params", r.params}};
  }

  void from_json(nlohmann::json const& j, PipelineRecord& r) {
    j.at("kind").get_to(r.kind);
    j.at("before").get_to(r.before);
    j.at("after").get_to(r.after);
    j.at("translates_queries").get_to(r.translates_queries);
    j.at("params").get_to(r.params);
  }

  void to_json(nlohmann::json& j, CertificateRecord const& r) {
    j = nlohmann::json{{"kind", r.kind}, {"detail", r.detail}, {"trace", r.trace}};
  }

  void from_json(nlohmann::json const& j, CertificateRecord& r) {
    j.at("kind").get_to(r.kind);
    j.at("detail").get_to(r.detail);
    j.at("trace").get_to(r.trace);
  }

  void to_json(nlohmann::json& j, SolveReport const& r) {
    j = nlohmann::json{{"presentation", r.presentation},
                       {"command", r.command},
                       {"query", r.query},
                       {"verdict", r.verdict},
                       {"confidence", r.confidence},
                       {"route", r.route},
                       {"certificate", r.certificate},
                       {"steps", r.steps},
                       {"pipeline", r.pipeline},
                       {"lines", r.lines},
                       {"details", r.details},
                       {"elapsed_ms", r.elapsed_ms}};
  }

  void from_json(nlohmann::json const& j, SolveReport& r) {
    j.at("presentation").get_to(r.presentation);
    j.at("command").get_to(r.command);
    j.at("query").get_to(r.query);
    j.at("verdict").get_to(r.verdict);
    j.at("confidence").get_to(r.confidence);
    j.at("route").get_to(r.route);
    j.at("certificate").get_to(r.certificate);
    j.at("steps").get_to(r.steps);
    j.at("pipeline").get_to(r.pipeline);
    j.at("lines").get_to(r.lines);
    r.details = j.at("details");
    j.at("elapsed_ms").get_to(r.elapsed_ms);
  }

  bool SolveReport::same_content(SolveReport const& o) const {
    return presentation == o.presentation && command == o.command
           && query == o.query && verdict == o.verdict
           && confidence == o.confidence && route == o.route
           && certificate == o.certificate && steps == o.steps
           && pipeline == o.pipeline && lines == o.lines && details == o.details;
  }

  nlohmann::json classification_json(Classification const& c) {
    using nlohmann::json;
    auto opt_bool = [](std::optional<bool> b) -> json {
      return b ? json(*b) : json(nullptr);
    };
    json j;
    j["left_cycle_free"]  = opt_bool(c.left_cycle_free);
    j["right_cycle_free"] = opt_bool(c.right_cycle_free);
    j["special"]          = c.special;
    j["subspecial"]       = c.subspecial;
    j["monadic"]          = c.monadic;
    j["equal_length"]     = c.equal_length;
    j["lhs_sof"]          = c.lhs_sof;
    if (c.torsion) {
      j["torsion"] = json{{"u", to_string(c.torsion->u)},
                          {"v", to_string(c.torsion->v)},
                          {"m", c.torsion->m},
                          {"n", c.torsion->n}};
    } else {
      j["torsion"] = nullptr;
    }
    j["has_nontrivial_idempotent"] = to_string(c.has_nontrivial_idempotent);
    j["group_sufficient"]          = to_string(c.group_sufficient);
    if (c.small_overlap) {
      std::vector<std::string> pieces;
      for (auto const& w : c.small_overlap->pieces) {
        pieces.push_back(to_string(w));
      }
      j["small_overlap_index"] = c.small_overlap->index
                                     ? json(*c.small_overlap->index)
                                     : json("unbounded");
      j["pieces"] = pieces;
    } else {
      j["small_overlap_index"] = nullptr;
      j["pieces"]              = nullptr;
    }
    j["weak_compressible"] = c.weak_compressible
                                 ? json(to_string(*c.weak_compressible))
                                 : json(nullptr);
    if (c.strong_compressible) {
      j["strong_compressible"]
          = json{{"C", to_string(c.strong_compressible->common_prefix)},
                 {"D", to_string(c.strong_compressible->common_suffix)},
                 {"k", c.strong_compressible->k}};
    } else {
      j["strong_compressible"] = nullptr;
    }
    return j;
  }

  std::vector<PipelineRecord> pipeline_records(ReductionPipeline const& r) {
    std::vector<PipelineRecord> out;
    for (auto const& s : r.steps) {
      PipelineRecord rec{to_string(s.kind), to_string(s.before), to_string(s.after),
                         s.translates_queries, {}};
      if (auto const* wc = std::get_if<WeakCompression>(&s.record)) {
        rec.params["alpha"] = to_string(wc->alpha());
        for (auto const& [block, letter] : wc->letter_map()) {
          rec.params[letter.name()] = to_string(block);
        }
      } else if (auto const* sc = std::get_if<StrongCompression>(&s.record)) {
        rec.params["C"] = to_string(sc->common_prefix());
        rec.params["D"] = to_string(sc->common_suffix());
        rec.params["k"] = std::to_string(sc->k());
        for (auto e : sc->m_tau().alphabet()) {
          rec.params[e.name()] = to_string(sc->window_of(e));
        }
      } else if (auto const* cm = std::get_if<CollapseMap>(&s.record)) {
        std::string reps;
        for (auto x : cm->representatives) {
          reps += (reps.empty() ? "" : ",") + x.name();
        }
        rec.params["representatives"] = reps;
        rec.params["collapsed"]        = cm->collapsed.name();
      }
      out.push_back(std::move(rec));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Commands
  ////////////////////////////////////////////////////////////////////////

  namespace {

    void fill_verdict(SolveReport& r, Verdict const& v, Presentation const& p) {
      r.verdict            = to_string(v.outcome);
      r.confidence         = to_string(v.confidence);
      r.route              = v.route;
      r.certificate.kind   = to_string(v.certificate.kind);
      r.certificate.detail = v.certificate.detail;
      if (v.certificate.trace) {
        for (auto const& w : replay(*v.certificate.trace, p)) {
          r.certificate.trace.push_back(to_string(w));
        }
        r.steps = v.certificate.trace->length();
      }
    }

    void need(std::vector<std::string> const& args, std::size_t n,
              std::string const& usage) {
      if (args.size() != n) {
        throw parse_error("usage: " + usage);
      }
    }

    Letter parse_letter(std::string const& s, Presentation const& p) {
      Word w = parse_word(s, p.alphabet());
      if (w.size() != 1) {
        throw parse_error("expected a single letter, got \"" + s + "\"");
      }
      return w[0];
    }

    void divides(SolveReport& r, Presentation const& p, Word const& w, Letter x,
                 Options const& opts) {
      if (!p.special() && left_cycle_free(p)) {
        auto out = adian_divisibility(w, x, p, opts.adian);
        r.route  = {"adian"};
        r.steps  = out.replacements;
        r.lines  = out.lines;
        r.certificate.detail = out.detail;
        r.confidence         = "sound";
        switch (out.kind) {
          case AdianKind::divisible:
            r.verdict          = "divisible";
            r.certificate.kind = "trace";
            for (auto const& t : replay(out.trace, p)) {
              r.certificate.trace.push_back(to_string(t));
            }
            r.details["witness"] = to_string(out.witness);
            return;
          case AdianKind::headless:
            r.verdict          = "not_divisible";
            r.certificate.kind = "headless";
            return;
          case AdianKind::loop_exact:
            r.verdict          = "not_divisible";
            r.certificate.kind = "loop_exact";
            return;
          case AdianKind::loop_heuristic:
            r.certificate.kind = "loop_heuristic";
            r.confidence       = "heuristic";
            r.verdict          = opts.strict ? "unknown" : "not_divisible";
            return;
          case AdianKind::budget_exhausted:
            r.verdict          = "unknown";
            r.certificate.kind = "budget";
            return;
        }
      }
      SearchBudget b = opts.bfs;
      auto         d = bfs_prefix_distance(w, x, p, b);
      r.route        = {"bfs"};
      r.confidence   = "sound";
      if (d) {
        r.verdict            = "divisible";
        r.steps              = *d;
        r.certificate.kind   = "trace";
        r.certificate.detail = "reached a word beginning with " + x.name()
                               + " in " + std::to_string(*d) + " steps";
      } else {
        r.verdict            = "unknown";
        r.certificate.kind   = "budget";
        r.certificate.detail = "no word beginning with " + x.name()
                               + " found within the search budget";
      }
    }

  }  // namespace

  SolveReport run_command(std::string const&              presentation,
                          std::string const&              command,
                          std::vector<std::string> const& args,
                          Options const&                  opts) {
    auto        start = std::chrono::steady_clock::now();
    SolveReport r;
    Presentation p = parse_presentation(presentation);
    r.presentation = to_string(p);
    r.command      = command;
    r.query        = args;
    r.details      = nlohmann::json::object();
    if (command == "classify") {
      need(args, 0, "classify");
      r.verdict    = "ok";
      r.confidence = "sound";
      r.details    = classification_json(classify(p));
    } else if (command == "reduce") {
      need(args, 0, "reduce");
      auto pipe   = reduce_to_canonical(p);
      r.verdict    = "ok";
      r.confidence = "sound";
      r.pipeline   = pipeline_records(pipe);
      r.details["final"] = to_string(pipe.final);
    } else if (command == "solve") {
      need(args, 2, "solve <u> <v>");
      Word u = parse_word(args[0], p.alphabet());
      Word v = parse_word(args[1], p.alphabet());
      fill_verdict(r, dispatch_solve(p, u, v, opts), p);
      r.pipeline = pipeline_records(reduce_to_canonical(p));
    } else if (command == "divides") {
      need(args, 2, "divides <w> <letter>");
      divides(r, p, parse_word(args[0], p.alphabet()), parse_letter(args[1], p),
              opts);
    } else if (command == "adian-trace") {
      need(args, 2, "adian-trace <w> <letter>");
      if (p.special() || !left_cycle_free(p)) {
        throw precondition_error("adian-trace needs a left cycle-free presentation");
      }
      divides(r, p, parse_word(args[0], p.alphabet()), parse_letter(args[1], p),
              opts);
    } else if (command == "collatz-trace") {
      need(args, 2, "collatz-trace <X> <Y>");
      auto s   = build_system(p);
      Word x   = parse_word(args[0], p.alphabet());
      Word y   = parse_word(args[1], p.alphabet());
      if (s.reversed) {
        x = x.reversed();
        y = y.reversed();
      }
      auto run = run_trace(s, x, y, opts.collatz_steps);
      for (auto const& st : run.states) {
        r.lines.push_back(render_state(s, st));
      }
      auto v = run.verdict(opts.strict);
      r.verdict            = to_string(v.outcome);
      r.confidence         = to_string(v.confidence);
      r.route              = v.route;
      r.certificate.kind   = to_string(v.certificate.kind);
      r.certificate.detail = v.certificate.detail;
      r.steps              = run.states.size() - 1;
      r.details["system"]  = to_string(s.presentation);
      r.details["K"]       = s.K.str();
      r.details["L"]       = s.L;
      r.details["reversed"] = s.reversed;
    } else {
      throw parse_error("unknown command \"" + command + "\"");
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    return r;
  }

  std::string render_text(SolveReport const& r, bool with_trace) {
    std::ostringstream os;
    os << r.presentation << " ;; " << r.command;
    for (auto const& a : r.query) {
      os << ' ' << a;
    }
    os << "\n  verdict: " << r.verdict;
    if (!r.confidence.empty()) {
      os << " (" << r.confidence << ")";
    }
    os << '\n';
    if (!r.route.empty()) {
      os << "  route: ";
      for (std::size_t i = 0; i < r.route.size(); ++i) {
        os << (i == 0 ? "" : " > ") << r.route[i];
      }
      os << '\n';
    }
    if (!r.certificate.kind.empty()) {
      os << "  certificate: " << r.certificate.kind;
      if (!r.certificate.detail.empty()) {
        os << ": " << r.certificate.detail;
      }
      os << '\n';
    }
    if (r.command == "classify") {
      for (auto const& [k, v] : r.details.items()) {
        os << "  " << k << ": " << v.dump() << '\n';
      }
    } else if (r.details.contains("witness")) {
      os << "  witness: " << r.details["witness"].get<std::string>() << '\n';
    }
    if (!r.pipeline.empty() && (r.command == "reduce" || with_trace)) {
      os << "  pipeline:\n";
      for (auto const& s : r.pipeline) {
        os << "    " << s.kind << ": " << s.after << '\n';
      }
    }
    if (r.command == "reduce" && r.details.contains("final")) {
      os << "  final: " << r.details["final"].get<std::string>() << '\n';
    }
    bool show_lines = with_trace || r.command == "adian-trace"
                      || r.command == "collatz-trace";
    if (show_lines) {
      for (auto const& l : r.lines) {
        os << "    " << l << '\n';
      }
    }
    if (with_trace && !r.certificate.trace.empty()) {
      os << "  derivation:\n";
      for (auto const& w : r.certificate.trace) {
        os << "    " << w << '\n';
      }
    }
    return os.str();
  }

}  // namespace onerel::cli
