// Alexander polynomial of a one-relator group along φ: the relation vector
// from the scanning rule, Betti numbers of cyclic covers from the
// root-of-unity census, and the two Alexander-polynomial criteria.

#ifndef SURFSUB_ALEXANDER_HPP_
#define SURFSUB_ALEXANDER_HPP_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "surfsub/laurent.hpp"
#include "surfsub/words.hpp"

namespace surfsub {

  struct AlexanderData {
    Word   word;
    PhiMap phi;
    // word rewritten in a basis x_1..x_{n-1}, z with φ = (0, ..., 0, 1)
    Word              normalized_word;
    std::vector<Word> basis_witness;
    // f[i] = Σ_j σ_i^(j) t^j, un-normalized, so f[i](1) equals the exponent
    // sum of x_{i+1} in normalized_word.
    std::vector<LaurentPoly> f;
    NormalizedPoly           delta;  // gcd of the nonzero f[i]; zero if all vanish

    std::size_t rank() const noexcept {
      return word.rank();
    }
  };

  // Throws std::invalid_argument if φ(w) != 0 or the ranks differ.
  AlexanderData relation_vector(Word const&   w,
                                PhiMap const& phi,
                                PivotRule     rule = PivotRule::smallest_first);

  // Number of distinct roots of Δ that are k-th roots of unity.
  long long roots_of_unity_count(NormalizedPoly const& delta, long long k);

  // β₁(G_k) = 1 + k(n-2) + r. Throws std::domain_error when Δ = 0.
  long long betti_cyclic_cover(AlexanderData const& data, long long k);

  struct RootsOfUnityCertificate {
    PhiMap         phi;
    NormalizedPoly delta;
    int            d = 0;  // smallest d with Φ_d | Δ; k = d
    long long      k = 0;
    NormalizedPoly cyclotomic_factor;
    long long      predicted_betti = 0;  // β₁(G_k)
    long long      threshold       = 0;  // 1 + k(n-2)
    std::set<int>  all_factors;
  };

  struct RootsOfUnityVerdict {
    bool                                   applicable = false;
    bool                                   fired      = false;
    std::string                            note;
    std::optional<RootsOfUnityCertificate> certificate;
  };

  // Fires iff Δ_φ has a cyclotomic factor. Abstains (applicable = false)
  // when Δ_φ = 0.
  RootsOfUnityVerdict criterion_roots_of_unity(Word const& w, PhiMap const& phi);

  struct ModPCertificate {
    NormalizedPoly delta;
    BigInt         content;
    long long      prime = 0;
  };

  struct ModPVerdict {
    bool                           applicable = false;
    bool                           fired      = false;
    std::string                    note;
    std::optional<ModPCertificate> certificate;
  };

  // Rank 2 only, w outside [F_2, F_2]; fires iff a prime divides the content
  // of Δ_w. Throws std::invalid_argument when the preconditions fail.
  ModPVerdict criterion_mod_p(Word const& w);

}  // namespace surfsub

#endif  // SURFSUB_ALEXANDER_HPP_
