#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "onerel/verdict.hpp"

namespace onerel {

  enum class AlphaChoice { longest, shortest };

  // Self-overlap free words that are a prefix and a suffix of both sides,
  // shortest first.
  std::vector<Word> weak_candidates(Presentation const& p);

  class WeakCompression {
   public:
    WeakCompression(Presentation source, Word alpha);

    Presentation const& source() const noexcept {
      return _source;
    }
    Word const& alpha() const noexcept {
      return _alpha;
    }
    Presentation const& left_monoid() const noexcept {
      return _left;
    }
    // Blocks of the relation, in first-occurrence order (lhs then rhs).
    std::vector<std::pair<Word, Letter>> const& letter_map() const noexcept {
      return _map;
    }

    // Blocks alpha.g of w (w in alpha.A* and A*.alpha), trailing alpha
    // dropped.
    std::vector<Word> blocks(Word const& w) const;

    // Letter x_g for the block alpha.g; deterministic in g.
    Letter letter_for(Word const& block) const;

    Word encode(Word const& w) const;
    Word decode(Word const& x) const;

   private:
    Presentation                          _source;
    Word                                  _alpha;
    std::vector<std::pair<Word, Letter>>  _map;
    Presentation                          _left;
  };

  std::optional<WeakCompression> weak_compress(Presentation const& p,
                                               AlphaChoice choice = AlphaChoice::longest);

  Verdict decide_weak(WeakCompression const& wc,
                      Word const&            u,
                      Word const&            v,
                      Solver const&          recurse);

  class StrongCompression {
   public:
    StrongCompression(Presentation source, Word c, Word d);

    Presentation const& source() const noexcept {
      return _source;
    }
    Word const& common_prefix() const noexcept {
      return _c;
    }
    Word const& common_suffix() const noexcept {
      return _d;
    }
    std::size_t k() const noexcept {
      return _k;
    }
    Presentation const& m_tau() const noexcept {
      return _m_tau;
    }

    // 1-based lexicographic rank of a length-k window.
    std::size_t window_index(Word const& window) const;
    Letter      window_letter(Word const& window) const;
    Word        window_of(Letter e) const;

    // tau_k; empty when |w| < k.
    Word encode(Word const& w) const;
    // Inverse of encode given the first window chain; requires a valid chain.
    Word decode(Word const& e) const;

   private:
    Presentation _source;
    Word         _c;
    Word         _d;
    std::size_t  _k = 0;
    Presentation _m_tau;
  };

  std::optional<StrongCompression> strong_compress(Presentation const& p);

  Verdict decide_strong(StrongCompression const& sc,
                        Word const&              u,
                        Word const&              v,
                        Solver const&            recurse);

  struct CollapseMap {
    std::vector<Letter> representatives;  // one per left-graph component
    Letter              collapsed;        // c1
  };

  std::pair<CollapseMap, Presentation> collapse_generators(Presentation const& p);

  enum class StepKind { reverse, weak, strong, collapse };
  char const* to_string(StepKind k) noexcept;

  struct PipelineStep {
    StepKind     kind;
    Presentation before;
    Presentation after;
    bool         translates_queries = false;
    std::variant<std::monostate, WeakCompression, StrongCompression, CollapseMap>
        record;
  };

  struct ReductionPipeline {
    Presentation              source;
    std::vector<PipelineStep> steps;
    Presentation              final;
  };

  ReductionPipeline reduce_to_canonical(Presentation const& p);

}  // namespace onerel
