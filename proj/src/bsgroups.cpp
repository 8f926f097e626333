#include "surfsub/bsgroups.hpp"

#include <numeric>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace surfsub {

  namespace {
    Word gen_power(std::size_t rank, int g, long long e) {
      return Word::generator(rank, g).pow(e);
    }

    std::string join(std::vector<std::string> const& parts, std::string const& sep) {
      std::string out;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        out += (i ? sep : "") + parts[i];
      }
      return out;
    }
  }  // namespace

  std::string to_text(Presentation const& pres) {
    std::vector<std::string> gens, rels;
    for (std::size_t g = 0; g < pres.rank(); ++g) {
      gens.push_back(std::string(1, static_cast<char>('a' + g)));
    }
    for (auto const& r : pres.relators) {
      rels.push_back(to_string(r));
    }
    return "<" + join(gens, ",") + " | " + join(rels, ", ") + ">";
  }

  std::string to_named_text(Presentation const& pres) {
    std::vector<std::string> rels;
    auto name = [&](int g) { return pres.generators.at(static_cast<std::size_t>(g - 1)); };
    for (auto const& r : pres.relators) {
      rels.push_back(to_string(r, name, " "));
    }
    return "<" + join(pres.generators, ",") + " | " + join(rels, ", ") + ">";
  }

  Word bs_word(long long p, long long q) {
    return gen_power(2, 2, -1) * gen_power(2, 1, p) * gen_power(2, 2, 1)
           * gen_power(2, 1, q);
  }

  Presentation baumslag_solitar(long long p, long long q) {
    return {{"a", "b"}, {bs_word(p, -q)},
            "BS(" + std::to_string(p) + "," + std::to_string(q) + ")"};
  }

  GcdSubgroup bs_gcd_subgroup(long long p, long long q) {
    long long k = std::gcd(p, q);
    if (k <= 1) {
      throw std::invalid_argument("bs_gcd_subgroup: gcd(p, q) must exceed 1");
    }
    long long const   pp   = p / k;
    long long const   qq   = q / k;
    std::size_t const rank = static_cast<std::size_t>(k) + 1;
    GcdSubgroup       out;
    auto&             pres = out.presentation;
    pres.construction = "index-" + std::to_string(k) + " kernel of BS("
                        + std::to_string(p) + "," + std::to_string(q)
                        + "): alpha = a^k, beta_i = a^(1-i) b a^(i-1)";
    pres.generators.push_back("alpha");
    for (long long i = 1; i <= k; ++i) {
      pres.generators.push_back("beta" + std::to_string(i));
    }
    for (int i = 2; i <= static_cast<int>(rank); ++i) {
      pres.relators.push_back(gen_power(rank, i, -1) * gen_power(rank, 1, pp)
                              * gen_power(rank, i, 1) * gen_power(rank, 1, -qq));
    }

    auto& wit     = out.witness;
    wit.free_rank = static_cast<std::size_t>(k);
    wit.generator_images.push_back(Word(wit.free_rank));
    for (int i = 1; i <= static_cast<int>(k); ++i) {
      wit.generator_images.push_back(Word::generator(wit.free_rank, i));
    }
    wit.relators_die = true;
    for (auto const& r : pres.relators) {
      wit.relator_images.push_back(substitute(r, wit.generator_images));
      wit.relators_die = wit.relators_die && wit.relator_images.back().empty();
    }
    return out;
  }

  Presentation bs_circle_subgroup(long long p, long long q, long long l) {
    if (std::gcd(p, q) != 1) {
      throw std::invalid_argument("bs_circle_subgroup: p and q must be coprime");
    }
    if (l < 1) {
      throw std::invalid_argument("bs_circle_subgroup: l must be >= 1");
    }
    std::size_t const rank = static_cast<std::size_t>(l) + 1;
    int const         beta = static_cast<int>(rank);
    Presentation      pres;
    pres.construction = "circle of " + std::to_string(l) + " vertex groups in BS("
                        + std::to_string(p) + "," + std::to_string(q) + ")";
    for (long long i = 1; i <= l; ++i) {
      pres.generators.push_back("alpha" + std::to_string(i));
    }
    pres.generators.push_back("beta");
    for (int i = 1; i < static_cast<int>(l); ++i) {
      pres.relators.push_back(gen_power(rank, i, p) * gen_power(rank, i + 1, -q));
    }
    pres.relators.push_back(gen_power(rank, beta, -1)
                            * gen_power(rank, static_cast<int>(l), p)
                            * gen_power(rank, beta, 1) * gen_power(rank, 1, -q));
    return pres;
  }

  IntMatrix relator_exponent_matrix(Presentation const& pres) {
    IntMatrix m(pres.relators.size(), pres.rank());
    for (std::size_t r = 0; r < pres.relators.size(); ++r) {
      auto e = exponent_vector(pres.relators[r]);
      for (std::size_t c = 0; c < pres.rank(); ++c) {
        m(r, c) = e[c];
      }
    }
    return m;
  }

  Cokernel abelianization(Presentation const& pres) {
    return cokernel_invariants(relator_exponent_matrix(pres));
  }

  EdjvetPrideReport verify_edjvet_pride(long long p, long long q, long long l_max) {
    if (p == 0 || q == 0 || std::gcd(p, q) != 1) {
      throw std::invalid_argument("verify_edjvet_pride: p, q must be nonzero and coprime");
    }
    if ((p == 1 || p == -1) && (q == 1 || q == -1)) {
      throw std::invalid_argument("verify_edjvet_pride: p and q both +-1 are excluded");
    }
    if (l_max < 1) {
      throw std::invalid_argument("verify_edjvet_pride: l_max must be >= 1");
    }
    EdjvetPrideReport report{p, q, {}, true};
    for (long long l = 1; l <= l_max; ++l) {
      auto           pres = bs_circle_subgroup(p, q, l);
      auto           m    = relator_exponent_matrix(pres);
      auto           ab   = cokernel_invariants(m);
      EdjvetPrideRow row;
      row.l       = l;
      row.betti1  = static_cast<long long>(ab.free_rank);
      row.torsion = ab.torsion;
      row.snf_order = ab.torsion_order();

      std::size_t const ll = static_cast<std::size_t>(l);
      IntMatrix         block(ll, ll);
      for (std::size_t r = 0; r < ll; ++r) {
        for (std::size_t c = 0; c < ll; ++c) {
          block(r, c) = m(r, c);
        }
      }
      row.determinant = abs(determinant(block));
      BigInt diff     = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(l))
                    - boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(l));
      row.formula = abs(diff);

      row.relation_holds = true;
      for (std::size_t i = 0; i < ll; ++i) {
        std::vector<BigInt> v(pres.rank(), 0);
        v[i] = diff;
        row.relation_holds = row.relation_holds && in_row_lattice(m, v);
      }
      row.ok = row.betti1 == 1 && row.snf_order == row.formula
               && row.determinant == row.formula && row.relation_holds;
      report.all_ok = report.all_ok && row.ok;
      report.rows.push_back(std::move(row));
    }
    return report;
  }

}  // namespace surfsub
