// Free group words: parsing, free and cyclic reduction, exponent data,
// proper powers, and Nielsen normalization of a map to the integers.

#ifndef SURFSUB_WORDS_HPP_
#define SURFSUB_WORDS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace surfsub {

  // A letter is a nonzero signed generator index: +g is x_g, -g is x_g^-1.
  using Letter = int;

  constexpr int generator_of(Letter l) noexcept {
    return l < 0 ? -l : l;
  }

  constexpr Letter inverse_letter(Letter l) noexcept {
    return -l;
  }

  //! A freely reduced word in the free group of a given rank.
  //!
  //! Every constructor freely reduces its input, so a Word never holds an
  //! adjacent pair x x^-1. Generator indices run from 1 to rank().
  class Word {
   public:
    Word() = default;
    explicit Word(std::size_t rank) : rank_(rank) {}
    // Throws std::invalid_argument on a zero letter or an index > rank.
    Word(std::size_t rank, std::vector<Letter> letters);

    static Word generator(std::size_t rank, int g);

    std::size_t rank() const noexcept {
      return rank_;
    }
    std::size_t size() const noexcept {
      return letters_.size();
    }
    bool empty() const noexcept {
      return letters_.empty();
    }
    Letter operator[](std::size_t i) const {
      return letters_[i];
    }
    std::span<Letter const> letters() const noexcept {
      return letters_;
    }
    auto begin() const noexcept {
      return letters_.begin();
    }
    auto end() const noexcept {
      return letters_.end();
    }

    Word inverse() const;
    Word pow(long long k) const;
    // Letters [pos, pos + len) as a new reduced word (no re-reduction needed).
    Word subword(std::size_t pos, std::size_t len) const;
    // Same letters viewed in a free group of larger (or equal) rank.
    Word with_rank(std::size_t rank) const;

    friend Word operator*(Word const& u, Word const& v);
    friend bool operator==(Word const&, Word const&) = default;
    friend auto operator<=>(Word const&, Word const&) = default;

   private:
    std::size_t         rank_ = 0;
    std::vector<Letter> letters_;
  };

  // Text syntax: a..z are generators 1..26, upper case the inverses, an
  // optional ^k (k may be negative) raises the preceding letter to a power,
  // whitespace is ignored. Throws std::invalid_argument on bad input.
  Word parse_word(std::string_view text, std::size_t rank);

  // Inverse of parse_word for rank <= 26 (plain letters, no exponents).
  std::string to_string(Word const& w);
  // Generic printer: name(g) names generator g, inverses get "^-1", letters
  // are separated by sep.
  std::string to_string(Word const&                           w,
                        std::function<std::string(int)> const& name,
                        std::string_view                       sep = " ");

  struct CyclicReduction {
    Word core;
    Word conjugator;  // w == conjugator * core * conjugator^-1
  };

  CyclicReduction cyclic_reduce(Word const& w);
  bool            is_cyclically_reduced(Word const& w);

  std::vector<long long> exponent_vector(Word const& w);
  bool                   is_in_commutator_subgroup(Word const& w);
  // true iff some generator 1..rank never occurs in w.
  bool omits_generator(Word const& w);

  struct ProperPower {
    Word root;
    int  exponent;
  };

  // w == root^exponent with exponent >= 2 maximal, or nullopt.
  std::optional<ProperPower> is_proper_power(Word const& w);

  // Apply the endomorphism sending generator g to images[g - 1].
  // All images must share one rank, which becomes the rank of the result.
  Word substitute(Word const& w, std::span<Word const> images);

  // Cyclic canonical form: the least word (under the letter order
  // a < A < b < B < ...) among all cyclic rotations of w and of w^-1, and,
  // when with_generator_symmetries is set, also of their images under signed
  // permutations of the generators. Input is cyclically reduced first.
  Word cyclic_canonical(Word const& w, bool with_generator_symmetries = false);

  // Lexicographic comparison under the a < A < b < B order.
  bool letter_order_less(Word const& u, Word const& v);

  // One representative (the cyclic_canonical form with generator
  // symmetries) of every class of nonempty cyclically reduced words of
  // length <= max_len, ordered by length then letter order.
  std::vector<Word> enumerate_cyclic_classes(std::size_t rank,
                                             std::size_t max_len);

  //! An epimorphism from F_n onto the integers, stored by its values on the
  //! generators. The entries have gcd 1.
  class PhiMap {
   public:
    // Throws std::invalid_argument unless gcd(values) == 1.
    explicit PhiMap(std::vector<long long> values);

    std::size_t rank() const noexcept {
      return values_.size();
    }
    std::vector<long long> const& values() const noexcept {
      return values_;
    }
    long long operator()(Word const& w) const;
    long long operator()(Letter l) const;

    friend bool operator==(PhiMap const&, PhiMap const&) = default;

   private:
    std::vector<long long> values_;
  };

  std::string to_string(PhiMap const& phi);

  // The unique (up to sign) φ on F_2 killing w, first nonzero entry positive.
  // Throws std::invalid_argument if w lies in [F_2, F_2] or rank != 2.
  PhiMap phi_for_rank2(Word const& w);

  // All primitive φ with entries in [-bound, bound] and φ(w) == 0, with the
  // first nonzero entry positive, in lexicographic order of values.
  std::vector<PhiMap> admissible_phis(Word const& w, long long bound);

  enum class PivotRule {
    smallest_first,  // pivot = first entry of least magnitude, truncating division
    smallest_last    // pivot = last entry of least magnitude, rounding division
  };

  struct NielsenNormalization {
    Word word;  // w in the new basis x_1..x_{n-1}, z (z = generator n)
    // witness[i] = new generator i+1 written in the old generators.
    std::vector<Word> witness;
  };

  // Nielsen moves driven by the Euclidean algorithm on φ produce a basis
  // with φ-values (0, ..., 0, 1). Throws std::invalid_argument if
  // φ(w) != 0 or the ranks disagree.
  NielsenNormalization nielsen_normalize(Word const&   w,
                                         PhiMap const& phi,
                                         PivotRule     rule
                                         = PivotRule::smallest_first);

}  // namespace surfsub

#endif  // SURFSUB_WORDS_HPP_
