#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "onerel/presentation.hpp"

namespace onerel {

  // Undirected multigraph on the alphabet; loops and parallel edges allowed.
  struct SideGraph {
    Alphabet                             vertices;
    std::vector<std::pair<Letter, Letter>> edges;

    bool has_cycle() const;
  };

  // Left graph joins first letters of the two sides, right graph last
  // letters. Throws precondition_error("special") if a side is empty.
  std::pair<SideGraph, SideGraph> side_graphs(Presentation const& p);
  std::pair<SideGraph, SideGraph>
  side_graphs(Alphabet const& a, std::vector<std::pair<Word, Word>> const& relations);

  bool left_cycle_free(Presentation const& p);
  bool right_cycle_free(Presentation const& p);

  // No proper nonempty prefix equals a suffix. Throws on the empty word.
  bool is_self_overlap_free(Word const& w);

  // Length of the longest proper border (prefix that is also a suffix).
  std::size_t longest_border(Word const& w);

  bool is_primitive(Word const& w);

  struct SmallOverlap {
    std::vector<Word> pieces;  // shortlex order
    // Minimum number of pieces per side (lhs, rhs); nullopt if that side is
    // not a product of pieces.
    std::optional<std::size_t> lhs_pieces;
    std::optional<std::size_t> rhs_pieces;
    // Largest n with C(n); nullopt when neither side factors into pieces.
    std::optional<std::size_t> index;
    bool unbounded() const noexcept {
      return !index.has_value();
    }
  };

  SmallOverlap small_overlap_index(Presentation const& p);

  enum class Tri { no, yes, unknown };
  char const* to_string(Tri t) noexcept;

  struct TorsionWitness {
    Word        u;
    Word        v;
    std::size_t m = 0;
    std::size_t n = 0;
  };

  struct StrongShape {
    Word        common_prefix;
    Word        common_suffix;
    std::size_t k = 0;
  };

  struct Classification {
    std::optional<bool>           left_cycle_free;   // nullopt when special
    std::optional<bool>           right_cycle_free;  // nullopt when special
    bool                          special      = false;
    bool                          subspecial   = false;
    bool                          monadic      = false;
    bool                          equal_length = false;
    bool                          lhs_sof      = false;
    std::optional<TorsionWitness> torsion;
    Tri                           has_nontrivial_idempotent = Tri::unknown;
    Tri                           group_sufficient          = Tri::unknown;
    std::optional<SmallOverlap>   small_overlap;  // nullopt when special
    std::optional<Word>           weak_compressible;
    std::optional<StrongShape>    strong_compressible;
  };

  // rhs is a proper prefix and a proper suffix of lhs (both sides nonempty).
  bool is_subspecial(Presentation const& p);

  // rhs is a single letter a and lhs is b.u.a or a.u.b with b != a.
  bool is_monadic(Presentation const& p);

  std::optional<TorsionWitness> torsion_witness(Presentation const& p);

  Classification classify(Presentation const& p);

}  // namespace onerel
