// Finite-index subgroups of F_n as basepointed Schreier graphs, the
// homology of the covering one-relator complex Y', and β₂ of the pulled
// back subgroup of the double.

#ifndef SURFSUB_COVERS_HPP_
#define SURFSUB_COVERS_HPP_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "surfsub/intlinalg.hpp"
#include "surfsub/words.hpp"

namespace surfsub {

  //! An oriented edge of a Schreier graph: source --gen--> source·gen.
  struct CoverEdge {
    int source = 0;
    int gen    = 1;  // 1..rank

    friend auto operator<=>(CoverEdge const&, CoverEdge const&) = default;
  };

  //! Schreier graph of a finite-index subgroup of F_n, with a spanning tree
  //! and the non-tree edges as an ordered basis of H_1 (and free basis of
  //! the subgroup).
  class CoverGraph {
   public:
    // action[g-1][v] = v·g, vertices 0..d-1. Throws std::invalid_argument if
    // some generator does not act as a permutation or the action is not
    // transitive. Without an explicit tree, the tree is breadth-first from
    // the basepoint, trying at each vertex g = 1..n forwards then backwards.
    CoverGraph(std::vector<std::vector<int>> action,
               int                           basepoint = 0,
               std::optional<std::vector<CoverEdge>> tree = std::nullopt);

    std::size_t rank() const noexcept {
      return action_.size();
    }
    std::size_t index() const noexcept {
      return action_.empty() ? 1 : action_[0].size();
    }
    int basepoint() const noexcept {
      return basepoint_;
    }
    int act(int v, Letter l) const;
    int act(int v, Word const& w) const;

    std::vector<CoverEdge> const& basis_edges() const noexcept {
      return basis_;
    }
    std::size_t h1_rank() const noexcept {
      return basis_.size();
    }
    // Position of e among basis_edges(), or nullopt for a tree edge.
    std::optional<std::size_t> basis_index(CoverEdge e) const;

    // Tree path from the basepoint to v, as a word in F_n.
    Word tree_path(int v) const;
    // The free generator of the subgroup carried by basis edge i.
    Word schreier_generator(std::size_t i) const;

   private:
    std::vector<std::vector<int>> action_;
    std::vector<std::vector<int>> inverse_;
    int                           basepoint_ = 0;
    // parent_[v]: letter read along the tree from parent to v (0 at root)
    std::vector<Letter>         parent_letter_;
    std::vector<std::size_t>    edge_slot_;  // (gen-1)*d + v -> basis index or npos
    std::vector<CoverEdge>      basis_;
  };

  // Schreier graph of φ^-1(kZ): vertices Z/k, g sends v to v + φ(g).
  CoverGraph cyclic_cover(std::size_t n, PhiMap const& phi, long long k);

  // perms[g-1] is a permutation of {0..d-1}.
  CoverGraph permrep_cover(std::size_t                          n,
                           std::vector<std::vector<int>> const& perms,
                           int                                  basepoint = 0);

  // "(1 2)(3 4 5);();(1 3)": one cycle-notation permutation per generator,
  // points numbered from 1, degree = largest point mentioned (at least 1).
  std::vector<std::vector<int>> parse_permutations(std::string_view spec,
                                                   std::size_t      rank);

  struct RelatorLift {
    int                    start        = 0;  // least vertex of its cycle
    int                    multiplicity = 1;  // length of the cycle of ρ(w)
    std::vector<long long> homology_class;    // in the basis_edges() basis
  };

  struct RelatorLifts {
    std::vector<RelatorLift> lifts;
    std::size_t              h1_rank = 0;

    IntMatrix matrix() const;  // rows = lift classes
  };

  RelatorLifts lift_relator(CoverGraph const& cover, Word const& w);

  // True iff every vertex is fixed by w, i.e. the cover is a cover of the
  // presentation complex Y and all lifts close after one pass.
  bool relator_acts_trivially(CoverGraph const& cover, Word const& w);

  struct CoverHomology {
    long long           betti1 = 0;
    std::vector<BigInt> torsion;
  };

  CoverHomology homology_one_relator_cover(CoverGraph const& cover, Word const& w);

  // β₂(D') = |J| - rank(M), the kernel of i'_* on H_1(C').
  long long betti2_double(CoverGraph const& cover, Word const& w);

  // Spell w, read from the basepoint, in the subgroup's Schreier basis:
  // generator i+1 is basis edge i. Throws std::invalid_argument if w does
  // not fix the basepoint.
  Word rewrite_in_schreier_basis(CoverGraph const& cover, Word const& w);

  // Inverse of the rewriting: substitute each Schreier generator.
  Word push_down(CoverGraph const& cover, Word const& schreier_word);

}  // namespace surfsub

#endif  // SURFSUB_COVERS_HPP_
