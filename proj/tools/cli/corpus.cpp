#include "corpus.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

namespace onerel::cli {

  namespace {

    std::string trim(std::string const& s) {
      auto b = s.find_first_not_of(" \t\r");
      if (b == std::string::npos) {
        return "";
      }
      auto e = s.find_last_not_of(" \t\r");
      return s.substr(b, e - b + 1);
    }

    std::vector<std::string> split_fields(std::string const& s) {
      std::vector<std::string> out;
      std::size_t              from = 0;
      while (true) {
        auto at = s.find(";;", from);
        out.push_back(trim(s.substr(from, at - from)));
        if (at == std::string::npos) {
          return out;
        }
        from = at + 2;
      }
    }

    std::vector<std::string> tokens(std::string const& s) {
      std::istringstream       is(s);
      std::vector<std::string> out;
      for (std::string t; is >> t;) {
        out.push_back(t);
      }
      return out;
    }

  }  // namespace

  std::vector<CorpusEntry> parse_corpus(std::string const& text) {
    std::vector<CorpusEntry> out;
    std::istringstream       is(text);
    std::size_t              n = 0;
    for (std::string raw; std::getline(is, raw);) {
      ++n;
      auto hash = raw.find('#');
      std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
      if (line.empty()) {
        continue;
      }
      auto fail = [n](std::string const& why) {
        throw parse_error("corpus line " + std::to_string(n) + ": " + why);
      };
      auto fields = split_fields(line);
      if (fields.size() < 2 || fields.size() > 3) {
        fail("expected \"<presentation> ;; <command> <args> [;; expect <verdict>]\"");
      }
      CorpusEntry e;
      e.line         = n;
      e.presentation = fields[0];
      auto cmd       = tokens(fields[1]);
      if (e.presentation.empty() || cmd.empty()) {
        fail("missing presentation or command");
      }
      e.command = cmd.front();
      e.args.assign(cmd.begin() + 1, cmd.end());
      if (fields.size() == 3) {
        auto ex = tokens(fields[2]);
        if (ex.size() != 2 || ex[0] != "expect") {
          fail("expected \"expect <verdict>\"");
        }
        e.expect = ex[1];
      }
      out.push_back(std::move(e));
    }
    return out;
  }

  std::vector<CorpusEntry> load_corpus(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw parse_error("cannot open corpus file " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_corpus(ss.str());
  }

  CorpusSummary run_corpus(std::vector<CorpusEntry> const& entries,
                           Options const&                  opts,
                           std::size_t                     jobs) {
    CorpusSummary s;
    s.results.resize(entries.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i; (i = next++) < entries.size();) {
        CorpusResult& r = s.results[i];
        r.entry         = entries[i];
        try {
          r.report = run_command(r.entry.presentation, r.entry.command, r.entry.args,
                                 opts);
        } catch (std::exception const& ex) {
          r.error = ex.what();
        }
      }
    };
    jobs = std::max<std::size_t>(1, std::min(jobs, entries.size()));
    std::vector<std::thread> pool;
    for (std::size_t j = 1; j < jobs; ++j) {
      pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
      t.join();
    }
    for (auto const& r : s.results) {
      ++s.verdicts[r.actual()];
      s.mismatches += r.mismatch();
      s.errors += !r.report;
      if (r.report) {
        s.decided += r.report->decided();
        s.total_steps += r.report->steps;
      }
    }
    return s;
  }

  nlohmann::json summary_json(CorpusSummary const& s) {
    nlohmann::json entries = nlohmann::json::array();
    for (auto const& r : s.results) {
      nlohmann::json e{{"line", r.entry.line},
                       {"actual", r.actual()},
                       {"mismatch", r.mismatch()}};
      e["expect"] = r.entry.expect ? nlohmann::json(*r.entry.expect)
                                   : nlohmann::json(nullptr);
      if (r.report) {
        e["report"] = *r.report;
      } else {
        e["error"] = r.error;
      }
      entries.push_back(std::move(e));
    }
    return nlohmann::json{{"entries", entries},
                          {"verdicts", s.verdicts},
                          {"mismatches", s.mismatches},
                          {"errors", s.errors},
                          {"decided", s.decided},
                          {"total_steps", s.total_steps}};
  }

}  // namespace onerel::cli
