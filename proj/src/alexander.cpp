#include "surfsub/alexander.hpp"

#include <stdexcept>

namespace surfsub {

  AlexanderData relation_vector(Word const& w, PhiMap const& phi, PivotRule rule) {
    if (w.rank() < 2) {
      throw std::invalid_argument("relation_vector: rank must be at least 2");
    }
    auto [normalized, witness] = nielsen_normalize(w, phi, rule);
    int const n = static_cast<int>(w.rank());

    // z = generator n. Scanning left to right, the height is φ of the
    // prefix; φ(x_i) = 0 so a letter x_i^ε sits at a single height j and
    // contributes ε t^j to f_i.
    std::vector<LaurentPoly> f(static_cast<std::size_t>(n - 1));
    int                      height = 0;
    for (Letter l : normalized) {
      if (generator_of(l) == n) {
        height += l > 0 ? 1 : -1;
      } else {
        f[static_cast<std::size_t>(generator_of(l) - 1)].add_term(l > 0 ? 1 : -1,
                                                                  height);
      }
    }
    NormalizedPoly delta;
    for (auto const& fi : f) {
      if (!fi.is_zero()) {
        delta = gcd(delta.poly(), fi);
      }
    }
    return AlexanderData{w, phi, std::move(normalized), std::move(witness),
                         std::move(f), std::move(delta)};
  }

  long long roots_of_unity_count(NormalizedPoly const& delta, long long k) {
    if (delta.is_zero()) {
      throw std::domain_error("roots_of_unity_count: Δ = 0");
    }
    if (k < 1) {
      throw std::invalid_argument("roots_of_unity_count: k must be >= 1");
    }
    long long r = 0;
    for (int d : cyclotomic_factors(delta.poly())) {
      if (k % d == 0) {
        r += euler_totient(d);
      }
    }
    return r;
  }

  long long betti_cyclic_cover(AlexanderData const& data, long long k) {
    if (data.delta.is_zero()) {
      throw std::domain_error(
          "betti_cyclic_cover: Δ = 0, H_1(Y_∞; C) has extra free rank and the "
          "formula is inapplicable");
    }
    auto const n = static_cast<long long>(data.rank());
    return 1 + k * (n - 2) + roots_of_unity_count(data.delta, k);
  }

  RootsOfUnityVerdict criterion_roots_of_unity(Word const& w, PhiMap const& phi) {
    RootsOfUnityVerdict verdict;
    auto data = relation_vector(w, phi);
    if (data.delta.is_zero()) {
      verdict.note = "Δ_φ = 0: H_1(Y_∞; C) has extra free rank; abstaining";
      return verdict;
    }
    verdict.applicable = true;
    auto factors       = cyclotomic_factors(data.delta.poly());
    if (factors.empty()) {
      verdict.note = "Δ_φ has no root of unity";
      return verdict;
    }
    verdict.fired = true;
    RootsOfUnityCertificate cert{phi, data.delta, *factors.begin(), 0, {}, 0, 0, factors};
    cert.k                 = cert.d;
    cert.cyclotomic_factor = cyclotomic(cert.d);
    cert.predicted_betti   = betti_cyclic_cover(data, cert.k);
    cert.threshold = 1 + cert.k * (static_cast<long long>(w.rank()) - 2);
    verdict.note   = "Φ_" + std::to_string(cert.d) + " divides Δ_φ";
    verdict.certificate = std::move(cert);
    return verdict;
  }

  ModPVerdict criterion_mod_p(Word const& w) {
    if (w.rank() != 2) {
      throw std::invalid_argument("criterion_mod_p: rank must be 2");
    }
    if (is_in_commutator_subgroup(w)) {
      throw std::invalid_argument("criterion_mod_p: w lies in [F_2, F_2]");
    }
    ModPVerdict verdict;
    verdict.applicable = true;
    auto data          = relation_vector(w, phi_for_rank2(w));
    BigInt c           = content(data.delta.poly());
    auto   p           = smallest_prime_factor(c);
    if (!p) {
      verdict.note = "content of Δ_w is 1";
      return verdict;
    }
    verdict.fired       = true;
    verdict.note        = "Δ_w ≡ 0 mod " + std::to_string(*p);
    verdict.certificate = ModPCertificate{data.delta, c, *p};
    return verdict;
  }

}  // namespace surfsub
