#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "corpus.hpp"

namespace {

  constexpr int exit_ok        = 0;
  constexpr int exit_mismatch  = 1;
  constexpr int exit_usage     = 2;
  constexpr int exit_undecided = 3;

  struct Flags {
    bool        json             = false;
    bool        strict           = false;
    bool        trace            = false;
    bool        require_decision = false;
    std::size_t budget_steps     = 0;
    std::size_t budget_nodes     = 0;
    std::size_t jobs             = 0;
  };

  onerel::cli::Options options_from(Flags const& f) {
    onerel::cli::Options o;
    o.strict = f.strict;
    if (f.budget_steps) {
      o.adian.max_replacements = f.budget_steps;
      o.collatz_steps          = f.budget_steps;
    }
    if (f.budget_nodes) {
      o.bfs.max_nodes = f.budget_nodes;
    }
    return o;
  }

  int print_report(onerel::cli::SolveReport const& r, Flags const& f) {
    if (f.json) {
      std::cout << nlohmann::json(r).dump(2) << '\n';
    } else {
      std::cout << onerel::cli::render_text(r, f.trace);
    }
    if (f.require_decision && !r.decided()) {
      return exit_undecided;
    }
    return exit_ok;
  }

  int print_corpus(onerel::cli::CorpusSummary const& s, Flags const& f) {
    if (f.json) {
      std::cout << onerel::cli::summary_json(s).dump(2) << '\n';
    } else {
      for (auto const& r : s.results) {
        std::cout << "line " << r.entry.line << ": " << r.actual();
        if (r.entry.expect) {
          std::cout << (r.mismatch() ? "  MISMATCH, expected " : "  ok, expected ")
                    << *r.entry.expect;
        }
        if (!r.report) {
          std::cout << "  (" << r.error << ")";
        }
        std::cout << '\n';
        if (r.report && f.trace) {
          std::cout << onerel::cli::render_text(*r.report, true);
        }
      }
      std::cout << "entries: " << s.results.size() << ", decided: " << s.decided
                << ", mismatches: " << s.mismatches << ", errors: " << s.errors
                << ", steps: " << s.total_steps << '\n';
      for (auto const& [v, n] : s.verdicts) {
        std::cout << "  " << v << ": " << n << '\n';
      }
    }
    if (s.mismatches > 0) {
      return exit_mismatch;
    }
    if (s.errors > 0) {
      return exit_usage;
    }
    if (f.require_decision && !s.results.empty() && s.decided == 0) {
      return exit_undecided;
    }
    return exit_ok;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word problems and divisibility in one-relation monoids"};
  app.require_subcommand(1);
  Flags f;
  app.add_flag("--json", f.json, "Emit JSON reports");
  app.add_flag("--strict", f.strict, "Demote heuristic verdicts to unknown");
  app.add_flag("--trace", f.trace, "Print derivations and traces");
  app.add_flag("--require-decision", f.require_decision,
               "Exit 3 when nothing was decided");
  app.add_option("--budget-steps", f.budget_steps,
                 "Replacement / iteration budget");
  app.add_option("--budget-nodes", f.budget_nodes, "Search node budget");
  app.add_option("--jobs", f.jobs, "Corpus worker threads (0 = hardware)");

  std::string              presentation;
  std::vector<std::string> args;
  std::string              corpus_path;

  struct Cmd {
    char const* name;
    char const* help;
    std::size_t arity;
    char const* arg_help;
  };
  Cmd const cmds[] = {
      {"classify", "Structural properties of the presentation", 0, ""},
      {"reduce", "Compression pipeline towards a canonical form", 0, ""},
      {"solve", "Decide u = v", 2, "u v"},
      {"divides", "Decide left divisibility of w by a letter", 2, "w letter"},
      {"adian-trace", "Head-replacement trace for divisibility", 2, "w letter"},
      {"collatz-trace", "Pair dynamics for a.u.b = a", 2, "X Y"},
  };
  for (auto const& c : cmds) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("presentation", presentation,
                    "Presentation, e.g. \"a,b | ab = ba\"")
        ->required();
    if (c.arity > 0) {
      sub->add_option("args", args, c.arg_help)->expected(static_cast<int>(c.arity))
          ->required();
    }
  }
  auto* corpus = app.add_subcommand("corpus", "Run a corpus file");
  corpus->add_option("path", corpus_path, "Corpus file")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_usage;
  }

  auto opts = options_from(f);
  try {
    if (corpus->parsed()) {
      auto        entries = onerel::cli::load_corpus(corpus_path);
      std::size_t jobs    = f.jobs ? f.jobs
                                   : std::max(1u, std::thread::hardware_concurrency());
      return print_corpus(onerel::cli::run_corpus(entries, opts, jobs), f);
    }
    auto* sub = app.get_subcommands().front();
    return print_report(
        onerel::cli::run_command(presentation, sub->get_name(), args, opts), f);
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
}
