#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "onerel/onerel.hpp"

namespace onerel::cli {

  struct Options {
    bool          strict = false;
    AdianBudget   adian;
    SearchBudget  bfs;
    SpecialLimits special;
    std::size_t   collatz_steps = 10000;
    std::size_t   max_depth     = 32;  // nested compression levels
  };

  // Routing: identity, trivial relation, equal length, self-overlap free
  // rewriting, special, weak, strong, left/right cycle-free, search. A route
  // answering Unknown falls through to search.
  Verdict dispatch_solve(Presentation const& p,
                         Word const&         u,
                         Word const&         v,
                         Options const&      opts = {});

  struct PipelineRecord {
    std::string                        kind;
    std::string                        before;
    std::string                        after;
    bool                               translates_queries = false;
    std::map<std::string, std::string> params;

    friend bool operator==(PipelineRecord const&, PipelineRecord const&) = default;
  };

  struct CertificateRecord {
    std::string              kind;
    std::string              detail;
    std::vector<std::string> trace;

    friend bool operator==(CertificateRecord const&, CertificateRecord const&)
        = default;
  };

  struct SolveReport {
    std::string                 presentation;
    std::string                 command;
    std::vector<std::string>    query;
    std::string                 verdict;  // equal, not_equal, unknown,
                                          // divisible, not_divisible, ok
    std::string                 confidence;
    std::vector<std::string>    route;
    CertificateRecord           certificate;
    std::size_t                 steps = 0;
    std::vector<PipelineRecord> pipeline;
    std::vector<std::string>    lines;
    nlohmann::json              details;  // classification etc.
    double                      elapsed_ms = 0;

    bool decided() const {
      return verdict != "unknown";
    }

    // Equality ignoring timing.
    bool same_content(SolveReport const& other) const;
  };

  void to_json(nlohmann::json& j, PipelineRecord const& r);
  void from_json(nlohmann::json const& j, PipelineRecord& r);
  void to_json(nlohmann::json& j, CertificateRecord const& r);
  void from_json(nlohmann::json const& j, CertificateRecord& r);
  void to_json(nlohmann::json& j, SolveReport const& r);
  void from_json(nlohmann::json const& j, SolveReport& r);

  nlohmann::json                classification_json(Classification const& c);
  std::vector<PipelineRecord>   pipeline_records(ReductionPipeline const& r);

  // Runs one command: classify, reduce, solve, divides, adian-trace,
  // collatz-trace. Throws parse_error / precondition_error on bad input.
  SolveReport run_command(std::string const&              presentation,
                          std::string const&              command,
                          std::vector<std::string> const& args,
                          Options const&                  opts = {});

  std::string render_text(SolveReport const& r, bool with_trace);

}  // namespace onerel::cli
