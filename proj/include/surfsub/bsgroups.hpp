// Baumslag-Solitar groups and two families of finite-index subgroup
// presentations: the index-gcd(p,q) kernel with its free quotient, and the
// circle of l vertex groups for coprime p, q whose abelianization has
// first Betti number 1.

#ifndef SURFSUB_BSGROUPS_HPP_
#define SURFSUB_BSGROUPS_HPP_

#include <string>
#include <vector>

#include "surfsub/intlinalg.hpp"
#include "surfsub/words.hpp"

namespace surfsub {

  struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word>        relators;  // rank = generators.size()
    std::string              construction;

    std::size_t rank() const noexcept {
      return generators.size();
    }
  };

  // "<a,b | Ba^2bA^3>" in the single-letter word syntax (rank <= 26).
  std::string to_text(Presentation const& pres);
  // Same with the generator names, e.g. "<alpha,beta1 | beta1^-1 alpha ...>".
  std::string to_named_text(Presentation const& pres);

  // The word b^-1 a^p b a^q in F_2 (a = generator 1, b = generator 2).
  Word bs_word(long long p, long long q);

  // <a, b | b^-1 a^p b a^-q>.
  Presentation baumslag_solitar(long long p, long long q);

  struct FreeQuotientWitness {
    std::size_t       free_rank = 0;
    std::vector<Word> generator_images;  // in F_free_rank
    std::vector<Word> relator_images;
    bool              relators_die = false;  // every relator image is trivial
  };

  struct GcdSubgroup {
    Presentation        presentation;
    FreeQuotientWitness witness;
  };

  // k = gcd(p, q) > 1: <alpha, beta_1..beta_k | beta_i^-1 alpha^p' beta_i
  // alpha^-q'> with p' = p/k, q' = q/k, and the map killing alpha onto F_k.
  // Throws std::invalid_argument when gcd(p, q) == 1.
  GcdSubgroup bs_gcd_subgroup(long long p, long long q);

  // gcd(p, q) == 1, l >= 1: <alpha_1..alpha_l, beta | alpha_i^p alpha_{i+1}^-q
  // (i < l), beta^-1 alpha_l^p beta alpha_1^-q>.
  Presentation bs_circle_subgroup(long long p, long long q, long long l);

  IntMatrix relator_exponent_matrix(Presentation const& pres);
  Cokernel  abelianization(Presentation const& pres);

  struct EdjvetPrideRow {
    long long           l = 0;
    long long           betti1 = 0;
    std::vector<BigInt> torsion;
    BigInt              snf_order;    // product of the invariant factors
    BigInt              determinant;  // of the l x l alpha block
    BigInt              formula;      // |p^l - q^l|
    bool                relation_holds = false;  // (p^l - q^l) alpha_i = 0 for all i
    bool                ok = false;
  };

  struct EdjvetPrideReport {
    long long                   p = 0, q = 0;
    std::vector<EdjvetPrideRow> rows;
    bool                        all_ok = false;
  };

  // Throws std::invalid_argument unless gcd(p, q) == 1, p, q != 0, not both
  // of absolute value 1, and l_max >= 1.
  EdjvetPrideReport verify_edjvet_pride(long long p, long long q, long long l_max);

}  // namespace surfsub

#endif  // SURFSUB_BSGROUPS_HPP_
