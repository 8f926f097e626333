// Brute-force reference computations shared by the tests. Each one avoids
// the library routine it is used to check.

#ifndef SURFSUB_TESTS_ORACLES_HPP_
#define SURFSUB_TESTS_ORACLES_HPP_

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "surfsub/intlinalg.hpp"
#include "surfsub/laurent.hpp"
#include "surfsub/words.hpp"

namespace oracle {

  using namespace surfsub;
  using Rational = boost::multiprecision::cpp_rational;

  inline std::mt19937_64& rng() {
    static std::mt19937_64 engine(20240611);
    return engine;
  }

  // Uniform reduced word of exactly len letters.
  inline Word random_word(std::size_t rank, std::size_t len) {
    std::vector<Letter> out;
    std::uniform_int_distribution<int> pick(0, static_cast<int>(2 * rank) - 1);
    while (out.size() < len) {
      int    v = pick(rng());
      Letter l = v % 2 == 0 ? v / 2 + 1 : -(v / 2 + 1);
      if (!out.empty() && out.back() == -l) {
        continue;
      }
      out.push_back(l);
    }
    return Word(rank, out);
  }

  inline Word random_cyclic_word(std::size_t rank, std::size_t len) {
    while (true) {
      Word w = random_word(rank, len);
      if (is_cyclically_reduced(w)) {
        return w;
      }
    }
  }

  // Rank over Q by plain Gaussian elimination on rationals.
  inline std::size_t rational_rank(IntMatrix const& m) {
    std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        a[r][c] = Rational(m(r, c));
      }
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
      std::size_t piv = rank;
      while (piv < m.rows() && a[piv][c] == 0) {
        ++piv;
      }
      if (piv == m.rows()) {
        continue;
      }
      std::swap(a[piv], a[rank]);
      for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r != rank && a[r][c] != 0) {
          Rational f = a[r][c] / a[rank][c];
          for (std::size_t k = c; k < m.cols(); ++k) {
            a[r][k] -= f * a[rank][k];
          }
        }
      }
      ++rank;
    }
    return rank;
  }

  // Laplace expansion, for small matrices.
  inline BigInt laplace_determinant(IntMatrix const& m) {
    std::size_t n = m.rows();
    if (n == 0) {
      return 1;
    }
    if (n == 1) {
      return m(0, 0);
    }
    BigInt det = 0;
    for (std::size_t c = 0; c < n; ++c) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 1; r < n; ++r) {
        for (std::size_t k = 0, kk = 0; k < n; ++k) {
          if (k != c) {
            minor(r - 1, kk++) = m(r, k);
          }
        }
      }
      BigInt term = m(0, c) * laplace_determinant(minor);
      det += (c % 2 == 0) ? term : BigInt(-term);
    }
    return det;
  }

  // gcd over i of the image of the Fox derivative dw/dx_i under φ.
  inline NormalizedPoly fox_alexander(Word const& w, std::vector<long long> const& phi) {
    std::vector<LaurentPoly> d(w.rank());
    long long                height = 0;
    for (Letter l : w) {
      int g = generator_of(l);
      if (l > 0) {
        d[g - 1].add_term(1, static_cast<int>(height));
        height += phi[g - 1];
      } else {
        height -= phi[g - 1];
        d[g - 1].add_term(-1, static_cast<int>(height));
      }
    }
    NormalizedPoly delta;
    for (auto const& p : d) {
      delta = gcd(delta.poly(), p);
    }
    return delta;
  }

  // Number of k-th roots of unity at which p vanishes, numerically.
  inline long long numeric_root_count(LaurentPoly const& p, long long k) {
    long long count = 0;
    for (long long j = 0; j < k; ++j) {
      std::complex<double> z = std::polar(1.0, 2 * std::numbers::pi * double(j) / double(k));
      std::complex<double> v = 0;
      double               scale = 0;
      for (auto const& [e, c] : p.terms()) {
        double cd = c.convert_to<double>();
        v += cd * std::pow(z, e);
        scale += std::abs(cd);
      }
      if (std::abs(v) < 1e-9 * std::max(1.0, scale)) {
        ++count;
      }
    }
    return count;
  }

  // Largest m such that some length-m cyclic subword of w or w^-1 starts
  // at two different positions among the 2L rotations.
  inline std::size_t brute_max_piece(Word const& w) {
    std::size_t const           L = w.size();
    std::vector<std::vector<Letter>> bases = {
        std::vector<Letter>(w.begin(), w.end())};
    auto inv = w.inverse();
    bases.emplace_back(inv.begin(), inv.end());
    std::size_t best = 0;
    for (std::size_t m = 1; m <= L; ++m) {
      std::map<std::vector<Letter>, int> count;
      for (auto const& b : bases) {
        for (std::size_t s = 0; s < L; ++s) {
          std::vector<Letter> u;
          for (std::size_t i = 0; i < m; ++i) {
            u.push_back(b[(s + i) % L]);
          }
          ++count[u];
        }
      }
      for (auto const& [u, c] : count) {
        if (c >= 2) {
          best = m;
        }
      }
    }
    return best;
  }

  // Cyclic classes (canonical with generator symmetries) of primitive
  // elements of F_2 up to the given length, grown from a by the Nielsen
  // moves x -> xy, x -> yx. Every primitive class of length L has a
  // primitive neighbour of smaller length under these moves.
  inline std::set<Word> primitive_classes_f2(std::size_t max_len) {
    std::set<Word>    seen{cyclic_canonical(Word(2, {1}), true)};
    std::vector<Word> frontier(seen.begin(), seen.end());
    std::vector<std::vector<Word>> moves;
    Word a = Word::generator(2, 1), b = Word::generator(2, 2);
    for (auto const& x : {a, a.inverse()}) {
      for (auto const& y : {b, b.inverse()}) {
        moves.push_back({x * y, b});
        moves.push_back({y * x, b});
        moves.push_back({a, y * x});
        moves.push_back({a, x * y});
      }
    }
    while (!frontier.empty()) {
      std::vector<Word> next;
      for (auto const& w : frontier) {
        for (auto const& m : moves) {
          Word c = cyclic_canonical(substitute(w, m), true);
          if (c.size() <= max_len && seen.insert(c).second) {
            next.push_back(c);
          }
        }
      }
      frontier = std::move(next);
    }
    return seen;
  }

  // w lies in a proper free factor of F_2 iff its cyclic core is a power
  // of a primitive element.
  inline bool in_proper_free_factor_f2(Word const& w, std::set<Word> const& primitives) {
    Word core = cyclic_reduce(w).core;
    Word root = core;
    if (auto pp = is_proper_power(core)) {
      root = pp->root;
    }
    return primitives.count(cyclic_canonical(root, true)) > 0;
  }

}  // namespace oracle

#endif  // SURFSUB_TESTS_ORACLES_HPP_
