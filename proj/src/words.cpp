#include "surfsub/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace surfsub {

  namespace {
    void push_reduced(std::vector<Letter>& acc, Letter l) {
      if (!acc.empty() && acc.back() == -l) {
        acc.pop_back();
      } else {
        acc.push_back(l);
      }
    }

    int letter_key(Letter l) {
      return 2 * (generator_of(l) - 1) + (l < 0 ? 1 : 0);
    }

    // Compare a rotation of `cand` (starting at `shift`) against `ref`.
    // Negative if smaller, zero if equal, positive if larger.
    int compare_rotation(std::vector<Letter> const& cand,
                         std::size_t                shift,
                         std::vector<Letter> const& ref) {
      std::size_t const n = cand.size();
      for (std::size_t i = 0; i < n; ++i) {
        int a = letter_key(cand[(shift + i) % n]);
        int b = letter_key(ref[i]);
        if (a != b) {
          return a < b ? -1 : 1;
        }
      }
      return 0;
    }

    // Signed permutations of {1..rank} as letter maps: image[g] for g >= 1.
    std::vector<std::vector<Letter>> signed_permutations(std::size_t rank) {
      std::vector<int> perm(rank);
      std::iota(perm.begin(), perm.end(), 1);
      std::vector<std::vector<Letter>> result;
      do {
        for (std::size_t mask = 0; mask < (std::size_t{1} << rank); ++mask) {
          std::vector<Letter> image(rank + 1, 0);
          for (std::size_t g = 0; g < rank; ++g) {
            image[g + 1] = (mask >> g & 1U) ? -perm[g] : perm[g];
          }
          result.push_back(std::move(image));
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      return result;
    }

    std::vector<Letter> apply_letter_map(std::vector<Letter> const& w,
                                         std::vector<Letter> const& image) {
      std::vector<Letter> out;
      out.reserve(w.size());
      for (Letter l : w) {
        Letter m = image[generator_of(l)];
        out.push_back(l < 0 ? -m : m);
      }
      return out;
    }

    std::vector<Letter> inverse_letters(std::vector<Letter> const& w) {
      std::vector<Letter> out(w.rbegin(), w.rend());
      for (auto& l : out) {
        l = -l;
      }
      return out;
    }

    constexpr std::size_t max_symmetry_rank = 6;

    std::vector<std::vector<Letter>> symmetry_images(std::vector<Letter> const& core,
                                                     std::size_t rank,
                                                     bool with_generator_symmetries) {
      std::vector<std::vector<Letter>> images{core, inverse_letters(core)};
      if (with_generator_symmetries) {
        if (rank > max_symmetry_rank) {
          throw std::invalid_argument(
              "cyclic_canonical: generator symmetries limited to rank <= 6");
        }
        std::vector<std::vector<Letter>> all;
        for (auto const& map : signed_permutations(rank)) {
          for (auto const& im : images) {
            all.push_back(apply_letter_map(im, map));
          }
        }
        images = std::move(all);
      }
      return images;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  Word::Word(std::size_t rank, std::vector<Letter> letters) : rank_(rank) {
    letters_.reserve(letters.size());
    for (Letter l : letters) {
      if (l == 0 || static_cast<std::size_t>(generator_of(l)) > rank) {
        throw std::invalid_argument("Word: letter " + std::to_string(l)
                                    + " outside rank "
                                    + std::to_string(rank));
      }
      push_reduced(letters_, l);
    }
  }

  Word Word::generator(std::size_t rank, int g) {
    return Word(rank, {g});
  }

  Word Word::inverse() const {
    Word result(rank_);
    result.letters_ = inverse_letters(letters_);
    return result;
  }

  Word Word::pow(long long k) const {
    if (k < 0) {
      return inverse().pow(-k);
    }
    auto [core, conj] = cyclic_reduce(*this);
    Word result(rank_);
    result.letters_.reserve(core.size() * static_cast<std::size_t>(k)
                            + 2 * conj.size());
    result.letters_.assign(conj.begin(), conj.end());
    for (long long i = 0; i < k; ++i) {
      result.letters_.insert(result.letters_.end(), core.begin(), core.end());
    }
    auto inv = conj.inverse();
    result.letters_.insert(result.letters_.end(), inv.begin(), inv.end());
    if (k == 0) {
      result.letters_.clear();
    }
    return result;
  }

  Word Word::subword(std::size_t pos, std::size_t len) const {
    Word result(rank_);
    result.letters_.assign(letters_.begin() + pos,
                           letters_.begin() + pos + len);
    return result;
  }

  Word Word::with_rank(std::size_t rank) const {
    return Word(rank, letters_);
  }

  Word operator*(Word const& u, Word const& v) {
    Word result(std::max(u.rank_, v.rank_));
    result.letters_ = u.letters_;
    for (Letter l : v.letters_) {
      push_reduced(result.letters_, l);
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text
  ////////////////////////////////////////////////////////////////////////

  Word parse_word(std::string_view text, std::size_t rank) {
    if (rank < 1 || rank > 26) {
      throw std::invalid_argument("parse_word: rank must be in 1..26, got "
                                  + std::to_string(rank));
    }
    std::vector<Letter> letters;
    std::size_t         i = 0;
    auto skip_space = [&] {
      while (i < text.size()
             && std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
    };
    skip_space();
    while (i < text.size()) {
      char c = text[i];
      if (!std::isalpha(static_cast<unsigned char>(c))) {
        throw std::invalid_argument(std::string("parse_word: invalid character '")
                                    + c + "' at position " + std::to_string(i));
      }
      bool const inverse = std::isupper(static_cast<unsigned char>(c));
      int const  g = std::tolower(static_cast<unsigned char>(c)) - 'a' + 1;
      if (static_cast<std::size_t>(g) > rank) {
        throw std::invalid_argument(std::string("parse_word: generator '") + c
                                    + "' exceeds rank " + std::to_string(rank));
      }
      ++i;
      skip_space();
      long long exponent = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_space();
        std::size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
          ++i;
        }
        std::size_t digits = i;
        while (i < text.size()
               && std::isdigit(static_cast<unsigned char>(text[i]))) {
          ++i;
        }
        if (i == digits) {
          throw std::invalid_argument("parse_word: exponent expected after '^'"
                                      " at position " + std::to_string(start));
        }
        std::string_view num = text.substr(digits, i - digits);
        auto res = std::from_chars(num.data(), num.data() + num.size(), exponent);
        if (res.ec != std::errc() || exponent > 1'000'000) {
          throw std::invalid_argument("parse_word: exponent out of range");
        }
        if (text[start] == '-') {
          exponent = -exponent;
        }
        skip_space();
      }
      Letter l = inverse ? -g : g;
      if (exponent < 0) {
        l = -l;
        exponent = -exponent;
      }
      for (long long k = 0; k < exponent; ++k) {
        letters.push_back(l);
      }
    }
    return Word(rank, std::move(letters));
  }

  std::string to_string(Word const& w) {
    std::string out;
    out.reserve(w.size());
    for (Letter l : w) {
      int g = generator_of(l);
      if (g > 26) {
        throw std::invalid_argument("to_string: generator index above 26");
      }
      char c = static_cast<char>('a' + g - 1);
      out.push_back(l < 0 ? static_cast<char>(std::toupper(c)) : c);
    }
    return out;
  }

  std::string to_string(Word const&                           w,
                        std::function<std::string(int)> const& name,
                        std::string_view                       sep) {
    std::string out;
    bool        first = true;
    for (Letter l : w) {
      if (!first) {
        out += sep;
      }
      first = false;
      out += name(generator_of(l));
      if (l < 0) {
        out += "^-1";
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Cyclic structure
  ////////////////////////////////////////////////////////////////////////

  CyclicReduction cyclic_reduce(Word const& w) {
    std::size_t i = 0;
    std::size_t j = w.size();
    while (j - i >= 2 && w[i] == -w[j - 1]) {
      ++i;
      --j;
    }
    return {w.subword(i, j - i), w.subword(0, i)};
  }

  bool is_cyclically_reduced(Word const& w) {
    return w.size() < 2 || w[0] != -w[w.size() - 1];
  }

  std::vector<long long> exponent_vector(Word const& w) {
    std::vector<long long> v(w.rank(), 0);
    for (Letter l : w) {
      v[generator_of(l) - 1] += l > 0 ? 1 : -1;
    }
    return v;
  }

  bool is_in_commutator_subgroup(Word const& w) {
    auto v = exponent_vector(w);
    return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
  }

  bool omits_generator(Word const& w) {
    std::vector<bool> seen(w.rank() + 1, false);
    for (Letter l : w) {
      seen[generator_of(l)] = true;
    }
    return std::find(seen.begin() + 1, seen.end(), false) != seen.end();
  }

  std::optional<ProperPower> is_proper_power(Word const& w) {
    auto [core, conj] = cyclic_reduce(w);
    std::size_t const n = core.size();
    if (n == 0) {
      return std::nullopt;
    }
    // Failure function of the core; smallest period = n - fail[n-1].
    std::vector<std::size_t> fail(n, 0);
    for (std::size_t i = 1, k = 0; i < n; ++i) {
      while (k > 0 && core[i] != core[k]) {
        k = fail[k - 1];
      }
      if (core[i] == core[k]) {
        ++k;
      }
      fail[i] = k;
    }
    std::size_t period = n - fail[n - 1];
    if (period == n || n % period != 0) {
      return std::nullopt;
    }
    Word root = conj * core.subword(0, period) * conj.inverse();
    return ProperPower{std::move(root), static_cast<int>(n / period)};
  }

  Word substitute(Word const& w, std::span<Word const> images) {
    if (images.size() < w.rank()) {
      throw std::invalid_argument("substitute: too few images");
    }
    std::size_t target_rank = images.empty() ? 0 : images[0].rank();
    std::vector<Letter> out;
    for (Letter l : w) {
      Word const& im = images[generator_of(l) - 1];
      if (l > 0) {
        for (Letter m : im) {
          push_reduced(out, m);
        }
      } else {
        for (auto it = im.letters().rbegin(); it != im.letters().rend(); ++it) {
          push_reduced(out, -*it);
        }
      }
    }
    return Word(target_rank, std::move(out));
  }

  bool letter_order_less(Word const& u, Word const& v) {
    return std::lexicographical_compare(
        u.begin(), u.end(), v.begin(), v.end(),
        [](Letter a, Letter b) { return letter_key(a) < letter_key(b); });
  }

  Word cyclic_canonical(Word const& w, bool with_generator_symmetries) {
    auto core = cyclic_reduce(w).core;
    std::vector<Letter> letters(core.begin(), core.end());
    if (letters.empty()) {
      return Word(w.rank());
    }
    std::vector<Letter> best;
    for (auto const& im : symmetry_images(letters, w.rank(),
                                          with_generator_symmetries)) {
      for (std::size_t s = 0; s < im.size(); ++s) {
        if (best.empty() || compare_rotation(im, s, best) < 0) {
          best.assign(im.begin() + s, im.end());
          best.insert(best.end(), im.begin(), im.begin() + s);
        }
      }
    }
    return Word(w.rank(), std::move(best));
  }

  std::vector<Word> enumerate_cyclic_classes(std::size_t rank,
                                             std::size_t max_len) {
    std::vector<Word> result;
    if (rank == 0 || max_len == 0) {
      return result;
    }
    if (rank > max_symmetry_rank) {
      throw std::invalid_argument("enumerate_cyclic_classes: rank above 6");
    }
    auto const maps = signed_permutations(rank);
    std::vector<Letter> alphabet;
    for (int g = 1; g <= static_cast<int>(rank); ++g) {
      alphabet.push_back(g);
      alphabet.push_back(-g);
    }
    // A canonical representative must be minimal among all its symmetric
    // rotations; test that directly, bailing out at the first smaller one.
    auto is_canonical = [&](std::vector<Letter> const& w) {
      for (auto const& map : maps) {
        auto im  = apply_letter_map(w, map);
        auto inv = inverse_letters(im);
        for (auto const* cand : {&im, &inv}) {
          for (std::size_t s = 0; s < w.size(); ++s) {
            if (compare_rotation(*cand, s, w) < 0) {
              return false;
            }
          }
        }
      }
      return true;
    };
    std::vector<Letter> cur;
    for (std::size_t len = 1; len <= max_len; ++len) {
      // Every class has a representative starting with generator 1.
      cur.assign(1, 1);
      std::function<void()> extend = [&] {
        if (cur.size() == len) {
          if (len > 1 && cur.back() == -cur.front()) {
            return;
          }
          if (is_canonical(cur)) {
            result.emplace_back(rank, cur);
          }
          return;
        }
        for (Letter l : alphabet) {
          if (l == -cur.back()) {
            continue;
          }
          cur.push_back(l);
          extend();
          cur.pop_back();
        }
      };
      extend();
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // PhiMap
  ////////////////////////////////////////////////////////////////////////

  PhiMap::PhiMap(std::vector<long long> values) : values_(std::move(values)) {
    long long g = 0;
    for (long long v : values_) {
      g = std::gcd(g, v);
    }
    if (g != 1) {
      throw std::invalid_argument("PhiMap: entries must have gcd 1");
    }
  }

  long long PhiMap::operator()(Letter l) const {
    long long v = values_.at(generator_of(l) - 1);
    return l > 0 ? v : -v;
  }

  long long PhiMap::operator()(Word const& w) const {
    long long s = 0;
    for (Letter l : w) {
      s += (*this)(l);
    }
    return s;
  }

  std::string to_string(PhiMap const& phi) {
    std::string out = "(";
    for (std::size_t i = 0; i < phi.values().size(); ++i) {
      if (i) {
        out += ",";
      }
      out += std::to_string(phi.values()[i]);
    }
    return out + ")";
  }

  PhiMap phi_for_rank2(Word const& w) {
    if (w.rank() != 2) {
      throw std::invalid_argument("phi_for_rank2: rank must be 2");
    }
    auto e = exponent_vector(w);
    long long g = std::gcd(e[0], e[1]);
    if (g == 0) {
      throw std::invalid_argument(
          "phi_for_rank2: w lies in [F_2,F_2], phi is not unique");
    }
    long long v0 = e[1] / g, v1 = -e[0] / g;
    if (v0 < 0 || (v0 == 0 && v1 < 0)) {
      v0 = -v0;
      v1 = -v1;
    }
    return PhiMap({v0, v1});
  }

  std::vector<PhiMap> admissible_phis(Word const& w, long long bound) {
    std::size_t const n   = w.rank();
    auto const        exp = exponent_vector(w);
    std::vector<PhiMap> out;
    long long const     width = 2 * bound + 1;
    double const        total = std::pow(static_cast<double>(width),
                                         static_cast<double>(n));
    // Large ranks: only vectors supported on at most two coordinates.
    std::size_t const max_support = total <= 1e5 ? n : 2;
    std::vector<long long> v(n, -bound);
    auto consider = [&] {
      std::size_t support = 0;
      long long   g = 0, dot = 0;
      for (std::size_t i = 0; i < n; ++i) {
        support += v[i] != 0;
        g = std::gcd(g, v[i]);
        dot += v[i] * exp[i];
      }
      if (g != 1 || dot != 0 || support > max_support) {
        return;
      }
      auto first = std::find_if(v.begin(), v.end(), [](long long x) { return x != 0; });
      if (*first < 0) {
        return;
      }
      out.emplace_back(v);
    };
    if (max_support == n) {
      while (true) {
        consider();
        std::size_t i = n;
        while (i > 0 && v[i - 1] == bound) {
          v[i - 1] = -bound;
          --i;
        }
        if (i == 0) {
          break;
        }
        ++v[i - 1];
      }
    } else {
      std::fill(v.begin(), v.end(), 0);
      for (std::size_t i = 0; i < n; ++i) {
        for (long long a = 1; a <= bound; ++a) {
          v[i] = a;
          consider();
          for (std::size_t j = i + 1; j < n; ++j) {
            for (long long b = -bound; b <= bound; ++b) {
              if (b == 0) {
                continue;
              }
              v[j] = b;
              consider();
            }
            v[j] = 0;
          }
        }
        v[i] = 0;
      }
      std::sort(out.begin(), out.end(), [](PhiMap const& x, PhiMap const& y) {
        return x.values() < y.values();
      });
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Nielsen normalization
  ////////////////////////////////////////////////////////////////////////

  NielsenNormalization nielsen_normalize(Word const&   w,
                                         PhiMap const& phi,
                                         PivotRule     rule) {
    std::size_t const n = w.rank();
    if (phi.rank() != n) {
      throw std::invalid_argument("nielsen_normalize: rank mismatch");
    }
    if (phi(w) != 0) {
      throw std::invalid_argument(
          "nielsen_normalize: phi(w) != 0, phi does not descend to G_n(w)");
    }
    std::vector<long long> v = phi.values();
    // alpha[i]: new generator i in old letters; beta[k]: old generator k in
    // new letters. Both start as the identity.
    std::vector<Word> alpha, beta;
    for (std::size_t i = 0; i < n; ++i) {
      alpha.push_back(Word::generator(n, static_cast<int>(i + 1)));
    }
    beta = alpha;
    auto identity_images = [&] {
      std::vector<Word> im;
      for (std::size_t i = 0; i < n; ++i) {
        im.push_back(Word::generator(n, static_cast<int>(i + 1)));
      }
      return im;
    };
    auto rewrite_beta = [&](std::vector<Word> const& images) {
      for (auto& b : beta) {
        b = substitute(b, images);
      }
    };

    while (true) {
      std::size_t pivot = n, nonzero = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (v[i] == 0) {
          continue;
        }
        ++nonzero;
        bool better = pivot == n || std::llabs(v[i]) < std::llabs(v[pivot])
                      || (rule == PivotRule::smallest_last
                          && std::llabs(v[i]) == std::llabs(v[pivot]));
        if (better) {
          pivot = i;
        }
      }
      if (nonzero <= 1) {
        break;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (i == pivot || v[i] == 0) {
          continue;
        }
        long long q;
        if (rule == PivotRule::smallest_first) {
          q = v[i] / v[pivot];
        } else {
          q = std::llround(static_cast<double>(v[i])
                           / static_cast<double>(v[pivot]));
        }
        // y_i <- y_i * y_pivot^-q
        v[i] -= q * v[pivot];
        alpha[i] = alpha[i] * alpha[pivot].pow(-q);
        auto im  = identity_images();
        im[i]    = im[i] * im[pivot].pow(q);
        rewrite_beta(im);
      }
    }
    auto last = static_cast<std::size_t>(
        std::find_if(v.begin(), v.end(), [](long long x) { return x != 0; })
        - v.begin());
    if (v[last] < 0) {
      alpha[last] = alpha[last].inverse();
      auto im     = identity_images();
      im[last]    = im[last].inverse();
      rewrite_beta(im);
      v[last] = 1;
    }
    if (last != n - 1) {
      std::swap(alpha[last], alpha[n - 1]);
      auto im = identity_images();
      std::swap(im[last], im[n - 1]);
      rewrite_beta(im);
      std::swap(v[last], v[n - 1]);
    }
    return {substitute(w, beta), std::move(alpha)};
  }

}  // namespace surfsub
