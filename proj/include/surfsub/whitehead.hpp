// Whitehead's algorithm: length minimization in the Aut(F_n) orbit of a
// cyclic word, the Whitehead graph, and the decision whether w lies in a
// proper free factor (equivalently, whether the double D_n(w) is
// one-ended).

#ifndef SURFSUB_WHITEHEAD_HPP_
#define SURFSUB_WHITEHEAD_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "surfsub/words.hpp"

namespace surfsub {

  // Letters are also graph vertices: x_g is 2(g-1), x_g^-1 is 2(g-1)+1.
  constexpr int letter_vertex(Letter l) noexcept {
    return 2 * (generator_of(l) - 1) + (l < 0 ? 1 : 0);
  }
  constexpr Letter vertex_letter(int v) noexcept {
    return (v % 2 == 0) ? v / 2 + 1 : -(v / 2 + 1);
  }

  //! Type-II Whitehead automorphism (A, a): a in A, a^-1 not in A. Every
  //! other generator x becomes
  //!   x a      if x in A, x^-1 not in A
  //!   a^-1 x   if x^-1 in A, x not in A
  //!   a^-1 x a if both are in A
  //! and a is fixed.
  struct WhiteheadMove {
    Letter        a   = 1;
    std::uint32_t set = 0;  // bitmask over letter_vertex

    bool contains(Letter l) const noexcept {
      return (set >> letter_vertex(l)) & 1U;
    }
    friend bool operator==(WhiteheadMove const&, WhiteheadMove const&) = default;
  };

  std::string to_string(WhiteheadMove const& m, std::size_t rank);

  // All nontrivial type-II moves of F_rank other than conjugation by a
  // single letter, in a fixed order. Rank must be 1..8.
  std::vector<WhiteheadMove> whitehead_moves(std::size_t rank);

  // Image of w under the automorphism (not cyclically reduced).
  Word apply(WhiteheadMove const& m, Word const& w);

  // Cyclic core of the image of the cyclic word w.
  Word apply_cyclic(WhiteheadMove const& m, Word const& w);

  struct Minimization {
    Word                       minimal;  // cyclically reduced
    std::vector<WhiteheadMove> log;
  };

  // Greedy strict descent; by peak reduction the result has least cyclic
  // length in the orbit. Throws std::invalid_argument on the empty word.
  Minimization whitehead_minimize(Word const& w);

  //! Whitehead graph of a cyclic word: 2n vertices, one edge {x^-1, y}
  //! for each cyclically adjacent pair x y.
  class WhiteheadGraph {
   public:
    explicit WhiteheadGraph(Word const& w);

    std::size_t vertex_count() const noexcept {
      return n_;
    }
    std::size_t edge_count() const noexcept {
      return edges_;
    }
    // Multiplicity of the edge {u, v}.
    int multiplicity(int u, int v) const {
      return adj_[u * n_ + v];
    }
    bool connected() const;
    std::vector<int> cut_vertices() const;

   private:
    bool connected_without(int removed) const;

    std::size_t      n_     = 0;
    std::size_t      edges_ = 0;
    std::vector<int> adj_;
  };

  std::string to_string(WhiteheadGraph const& g);

  enum class FreeFactorMethod {
    omits_after_minimization,
    graph_without_cut_vertex,
    orbit_search
  };

  std::string to_string(FreeFactorMethod m);

  struct OrbitSearchResult {
    bool                witness_found = false;
    std::optional<Word> witness;  // a minimal orbit element omitting a generator
    std::size_t         explored = 0;
  };

  // Breadth-first search over the cyclic words of the same length reachable
  // from w_min by length-preserving type-II moves, deduplicated by
  // cyclic_canonical. w_min must already be minimal. Throws
  // std::runtime_error if more than max_states classes are visited.
  OrbitSearchResult orbit_search(Word const& w_min, std::size_t max_states = 2'000'000);

  struct FreeFactorVerdict {
    bool             in_proper_free_factor = false;
    FreeFactorMethod method                = FreeFactorMethod::orbit_search;
    Minimization     minimization;
    std::optional<Word> witness;      // representative omitting a generator
    std::size_t         explored = 0; // orbit classes visited (orbit search only)
  };

  // Throws std::invalid_argument on the empty word or rank > 8.
  FreeFactorVerdict in_proper_free_factor(Word const& w);

  bool is_one_ended_double(Word const& w);

}  // namespace surfsub

#endif  // SURFSUB_WHITEHEAD_HPP_
