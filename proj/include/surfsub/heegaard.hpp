// Heegaard diagram for the lift of w = b^-1 a^p b a^q (p, q > 0 coprime)
// to the Z/pq cover: arcs on the boundary of the cut-open handlebody,
// threaded through the meridian discs along the orbits of +p and +q, and
// a combinatorial check that they glue to one embedded curve spelling the
// lifted word.

#ifndef SURFSUB_HEEGAARD_HPP_
#define SURFSUB_HEEGAARD_HPP_

#include <string>
#include <vector>

#include "surfsub/words.hpp"

namespace surfsub {

  struct OrbitData {
    long long                     p = 0, q = 0, n = 0;
    std::vector<std::vector<int>> omega;   // omega[k-1]: k, k+p, ..., k-p
    std::vector<std::vector<int>> lambda;  // lambda[l-1]: l, l+q, ..., l-q
  };

  // Throws std::invalid_argument unless p, q >= 1 and gcd(p, q) == 1.
  OrbitData orbit_data(long long p, long long q);

  // w^pq rewritten in the free basis b_0..b_{n-1}, a_0 of ker(a -> 1,
  // b -> 0 in Z/n), using the tree of a-edges out of vertices 1..n-1.
  // Generator i+1 is b_i, generator n+1 is a_0.
  Word lift_bs_word(long long p, long long q);

  // Names b0.., a0 for the generators of lift_bs_word.
  std::string lifted_generator_name(long long n, int g);

  struct DiscSlot {
    int  arc  = -1;
    bool head = false;  // the arc ends here
  };

  struct Disc {
    std::string           label;  // "A0+", "B3-", ...
    bool                  plus      = true;
    int                   generator = 0;  // in the numbering of lift_bs_word
    int                   partner   = -1;
    std::vector<DiscSlot> slots;  // cyclic order on the boundary circle
    std::vector<int>      glue;   // slot s is identified with partner slot glue[s]
  };

  struct Arc {
    int tail_disc = -1, tail_slot = -1;
    int head_disc = -1, head_slot = -1;
    int chain     = -1;
  };

  struct Chain {
    char             family = 'O';  // 'O' threads B^- discs, 'L' threads B^+ discs
    int              label  = 0;    // k or l
    std::vector<int> arcs;
  };

  struct Diagram {
    long long          p = 0, q = 0, n = 0;
    OrbitData          orbits;
    std::vector<Disc>  discs;  // A0+, A0-, then B_i+, B_i- for i = 0..n-1
    std::vector<Arc>   arcs;
    std::vector<Chain> chains;  // Omega_1..Omega_p, Lambda_1..Lambda_q
  };

  Diagram build_diagram(long long p, long long q);

  struct VerificationReport {
    std::size_t discs = 0, arcs = 0;
    bool        slots_consistent = false;
    bool        single_curve     = false;
    std::size_t curve_length     = 0;  // arcs on the cycle through arc 0
    bool        order_reversing  = false;
    long long   faces            = 0;  // of the planar rotation system
    long long   planar_euler     = 0;  // V - E + F, 2 for a sphere
    long long   surface_euler    = 0;  // F - E, after gluing the disc pairs
    long long   genus            = 0;
    bool        embedded         = false;
    Word        traversal;
    Word        expected;
    bool        word_matches = false;
    std::vector<std::string> failures;

    bool ok() const noexcept {
      return slots_consistent && single_curve && embedded && word_matches;
    }
  };

  VerificationReport verify_diagram(Diagram const& d);

  // Negative control: exchange the arcs arriving at B_i^- and B_j^-.
  Diagram swap_incoming_b_arcs(Diagram d, int i, int j);

  std::string to_listing(Diagram const& d);
  std::string to_svg(Diagram const& d);

}  // namespace surfsub

#endif  // SURFSUB_HEEGAARD_HPP_
