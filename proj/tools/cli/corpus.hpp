#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dispatch.hpp"

namespace onerel::cli {

  // "<presentation> ;; <command> <args> [;; expect <verdict>]"
  struct CorpusEntry {
    std::size_t                line = 0;
    std::string                presentation;
    std::string                command;
    std::vector<std::string>   args;
    std::optional<std::string> expect;
  };

  // Throws parse_error naming the line.
  std::vector<CorpusEntry> parse_corpus(std::string const& text);
  std::vector<CorpusEntry> load_corpus(std::string const& path);

  struct CorpusResult {
    CorpusEntry                entry;
    std::optional<SolveReport> report;  // unset when the entry raised
    std::string                error;

    std::string actual() const {
      return report ? report->verdict : "error";
    }
    bool mismatch() const {
      return entry.expect && *entry.expect != actual();
    }
  };

  struct CorpusSummary {
    std::vector<CorpusResult>          results;  // input order
    std::map<std::string, std::size_t> verdicts;
    std::size_t                        mismatches = 0;
    std::size_t                        errors     = 0;
    std::size_t                        decided    = 0;
    std::size_t                        total_steps = 0;
  };

  CorpusSummary run_corpus(std::vector<CorpusEntry> const& entries,
                           Options const&                  opts,
                           std::size_t                     jobs = 1);

  nlohmann::json summary_json(CorpusSummary const& s);

}  // namespace onerel::cli
