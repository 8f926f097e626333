#include "surfsub/smallcanc.hpp"

#include <algorithm>
#include <stdexcept>

namespace surfsub {

  namespace {
    void require_cyclic(Word const& w, char const* who) {
      if (w.empty() || !is_cyclically_reduced(w)) {
        throw std::invalid_argument(std::string(who)
                                    + ": need a nonempty cyclically reduced word");
      }
    }

    std::vector<std::vector<Letter>> positioned_conjugates(Word const& w) {
      std::vector<std::vector<Letter>> out;
      std::size_t const                L = w.size();
      for (Word const& base : {w, w.inverse()}) {
        for (std::size_t s = 0; s < L; ++s) {
          std::vector<Letter> c(L);
          for (std::size_t i = 0; i < L; ++i) {
            c[i] = base[(s + i) % L];
          }
          out.push_back(std::move(c));
        }
      }
      return out;
    }
  }  // namespace

  std::vector<Word> symmetrized_set(Word const& w) {
    require_cyclic(w, "symmetrized_set");
    std::vector<Word> out;
    for (auto& c : positioned_conjugates(w)) {
      out.emplace_back(w.rank(), std::move(c));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  PieceData max_piece_length(Word const& w) {
    require_cyclic(w, "max_piece_length");
    auto conj = positioned_conjugates(w);
    std::sort(conj.begin(), conj.end());
    PieceData data;
    data.relator_length   = w.size();
    data.symmetrized_size = 1;
    for (std::size_t i = 1; i < conj.size(); ++i) {
      data.symmetrized_size += conj[i] != conj[i - 1] ? 1 : 0;
    }

    // The longest common prefix over all pairs is attained by a pair of
    // neighbours in sorted order.
    std::vector<Word> pieces;
    for (std::size_t i = 0; i + 1 < conj.size(); ++i) {
      auto const& x   = conj[i];
      auto const& y   = conj[i + 1];
      std::size_t lcp = 0;
      while (lcp < x.size() && x[lcp] == y[lcp]) {
        ++lcp;
      }
      if (lcp > 0) {
        pieces.emplace_back(w.rank(), std::vector<Letter>(x.begin(), x.begin() + lcp));
        data.max_piece = std::max(data.max_piece, lcp);
      }
    }
    std::sort(pieces.begin(), pieces.end(), [](Word const& u, Word const& v) {
      return u.size() != v.size() ? u.size() > v.size() : u < v;
    });
    pieces.erase(std::unique(pieces.begin(), pieces.end()), pieces.end());
    data.pieces = std::move(pieces);
    return data;
  }

  SmallCancellationVerdict criterion_positive_c16(Word const& w) {
    if (w.empty()) {
      throw std::invalid_argument("criterion_positive_c16: empty word");
    }
    Word const               core = cyclic_reduce(w).core;
    SmallCancellationVerdict verdict;
    verdict.pieces   = max_piece_length(core);
    verdict.positive = std::all_of(core.begin(), core.end(),
                                   [](Letter l) { return l > 0; });
    std::string const ratio = std::to_string(verdict.pieces.max_piece) + "/"
                              + std::to_string(verdict.pieces.relator_length);
    if (!verdict.positive) {
      verdict.note = "not a positive word";
      return verdict;
    }
    verdict.fired = 6 * verdict.pieces.max_piece < verdict.pieces.relator_length;
    verdict.note  = "max piece / length = " + ratio
                   + (verdict.fired ? " < 1/6" : " >= 1/6");
    return verdict;
  }

}  // namespace surfsub
