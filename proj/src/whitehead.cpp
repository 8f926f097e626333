#include "surfsub/whitehead.hpp"

#include <deque>
#include <set>
#include <stdexcept>

namespace surfsub {

  namespace {
    constexpr std::size_t max_rank = 8;
    // Generator symmetries in the orbit-search dedup cost 2^n n! images
    // per word, worthwhile only for small rank.
    constexpr std::size_t symmetry_rank = 3;

    void check_rank(std::size_t rank, char const* who) {
      if (rank < 1 || rank > max_rank) {
        throw std::invalid_argument(std::string(who) + ": rank must be 1..8");
      }
    }

    Word canonical(Word const& w) {
      return cyclic_canonical(w, w.rank() <= symmetry_rank);
    }
  }  // namespace

  std::string to_string(WhiteheadMove const& m, std::size_t rank) {
    std::string out = "({";
    bool        first = true;
    for (int v = 0; v < static_cast<int>(2 * rank); ++v) {
      if ((m.set >> v) & 1U) {
        if (!first) {
          out += ",";
        }
        first = false;
        out += to_string(Word(rank, {vertex_letter(v)}));
      }
    }
    out += "}, " + to_string(Word(rank, {m.a})) + ")";
    return out;
  }

  std::vector<WhiteheadMove> whitehead_moves(std::size_t rank) {
    check_rank(rank, "whitehead_moves");
    std::vector<WhiteheadMove> moves;
    int const      nv   = static_cast<int>(2 * rank);
    std::uint32_t  full = (1U << nv) - 1;
    for (int va = 0; va < nv; ++va) {
      Letter        a      = vertex_letter(va);
      std::uint32_t pinned = (1U << va) | (1U << letter_vertex(-a));
      std::uint32_t free   = full & ~pinned;
      // Enumerate subsets of the free vertices.
      for (std::uint32_t sub = free;; sub = (sub - 1) & free) {
        if (sub != 0 && sub != free) {
          moves.push_back({a, sub | (1U << va)});
        }
        if (sub == 0) {
          break;
        }
      }
    }
    return moves;
  }

  Word apply(WhiteheadMove const& m, Word const& w) {
    std::size_t const rank = w.rank();
    Word const        a    = Word(rank, {m.a});
    Word const        ainv = a.inverse();
    std::vector<Word> images;
    images.reserve(rank);
    for (int g = 1; g <= static_cast<int>(rank); ++g) {
      Word x = Word::generator(rank, g);
      if (g == generator_of(m.a)) {
        images.push_back(x);
        continue;
      }
      bool pos = m.contains(g);
      bool neg = m.contains(-g);
      if (pos && neg) {
        images.push_back(ainv * x * a);
      } else if (pos) {
        images.push_back(x * a);
      } else if (neg) {
        images.push_back(ainv * x);
      } else {
        images.push_back(x);
      }
    }
    return substitute(w, images);
  }

  Word apply_cyclic(WhiteheadMove const& m, Word const& w) {
    return cyclic_reduce(apply(m, w)).core;
  }

  Minimization whitehead_minimize(Word const& w) {
    if (w.empty()) {
      throw std::invalid_argument("whitehead_minimize: empty word");
    }
    check_rank(w.rank(), "whitehead_minimize");
    Minimization result{cyclic_reduce(w).core, {}};
    auto const   moves = whitehead_moves(w.rank());
    while (true) {
      std::optional<std::size_t> best;
      Word                       best_word;
      for (std::size_t i = 0; i < moves.size(); ++i) {
        Word image = apply_cyclic(moves[i], result.minimal);
        if (image.size() < (best ? best_word.size() : result.minimal.size())) {
          best      = i;
          best_word = std::move(image);
        }
      }
      if (!best) {
        return result;
      }
      result.minimal = std::move(best_word);
      result.log.push_back(moves[*best]);
    }
  }

  WhiteheadGraph::WhiteheadGraph(Word const& w)
      : n_(2 * w.rank()), adj_(n_ * n_, 0) {
    auto core = cyclic_reduce(w).core;
    for (std::size_t i = 0; i < core.size(); ++i) {
      Letter x = core[i];
      Letter y = core[(i + 1) % core.size()];
      int    u = letter_vertex(-x);
      int    v = letter_vertex(y);
      ++adj_[u * n_ + v];
      if (u != v) {
        ++adj_[v * n_ + u];
      }
      ++edges_;
    }
  }

  bool WhiteheadGraph::connected_without(int removed) const {
    std::vector<bool> seen(n_, false);
    int               start = removed == 0 ? 1 : 0;
    if (static_cast<std::size_t>(start) >= n_) {
      return true;
    }
    std::vector<int> stack{start};
    seen[start]       = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n_; ++v) {
        if (static_cast<int>(v) != removed && !seen[v] && adj_[u * n_ + v] > 0) {
          seen[v] = true;
          ++count;
          stack.push_back(static_cast<int>(v));
        }
      }
    }
    return count == n_ - (removed >= 0 ? 1 : 0);
  }

  bool WhiteheadGraph::connected() const {
    return connected_without(-1);
  }

  std::vector<int> WhiteheadGraph::cut_vertices() const {
    std::vector<int> cuts;
    if (!connected()) {
      return cuts;
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if (!connected_without(static_cast<int>(v))) {
        cuts.push_back(static_cast<int>(v));
      }
    }
    return cuts;
  }

  std::string to_string(WhiteheadGraph const& g) {
    std::size_t const rank = g.vertex_count() / 2;
    std::string       out;
    for (std::size_t u = 0; u < g.vertex_count(); ++u) {
      for (std::size_t v = u; v < g.vertex_count(); ++v) {
        int m = g.multiplicity(static_cast<int>(u), static_cast<int>(v));
        if (m == 0) {
          continue;
        }
        if (!out.empty()) {
          out += " ";
        }
        out += to_string(Word(rank, {vertex_letter(static_cast<int>(u))})) + "-"
               + to_string(Word(rank, {vertex_letter(static_cast<int>(v))}));
        if (m > 1) {
          out += "x" + std::to_string(m);
        }
      }
    }
    return out;
  }

  std::string to_string(FreeFactorMethod m) {
    switch (m) {
      case FreeFactorMethod::omits_after_minimization:
        return "omits_after_minimization";
      case FreeFactorMethod::graph_without_cut_vertex:
        return "graph_without_cut_vertex";
      case FreeFactorMethod::orbit_search:
        return "orbit_search";
    }
    return "unknown";
  }

  OrbitSearchResult orbit_search(Word const& w_min, std::size_t max_states) {
    check_rank(w_min.rank(), "orbit_search");
    OrbitSearchResult result;
    auto const        moves  = whitehead_moves(w_min.rank());
    Word const        start  = canonical(w_min);
    std::size_t const length = start.size();
    std::set<Word>    seen{start};
    std::deque<Word>  queue{start};
    while (!queue.empty()) {
      Word u = std::move(queue.front());
      queue.pop_front();
      ++result.explored;
      if (omits_generator(u)) {
        result.witness_found = true;
        result.witness       = u;
        return result;
      }
      for (auto const& m : moves) {
        Word image = apply_cyclic(m, u);
        if (image.size() != length) {
          continue;
        }
        Word c = canonical(image);
        if (seen.insert(c).second) {
          if (seen.size() > max_states) {
            throw std::runtime_error("orbit_search: orbit exceeds "
                                     + std::to_string(max_states) + " classes");
          }
          queue.push_back(std::move(c));
        }
      }
    }
    return result;
  }

  FreeFactorVerdict in_proper_free_factor(Word const& w) {
    if (w.empty()) {
      throw std::invalid_argument("in_proper_free_factor: empty word");
    }
    FreeFactorVerdict verdict;
    verdict.minimization = whitehead_minimize(w);
    Word const& m        = verdict.minimization.minimal;
    if (omits_generator(m)) {
      verdict.in_proper_free_factor = true;
      verdict.method                = FreeFactorMethod::omits_after_minimization;
      verdict.witness               = m;
      return verdict;
    }
    WhiteheadGraph graph(m);
    if (graph.connected() && graph.cut_vertices().empty()) {
      verdict.method = FreeFactorMethod::graph_without_cut_vertex;
      return verdict;
    }
    auto search                   = orbit_search(m);
    verdict.method                = FreeFactorMethod::orbit_search;
    verdict.in_proper_free_factor = search.witness_found;
    verdict.witness               = search.witness;
    verdict.explored              = search.explored;
    return verdict;
  }

  bool is_one_ended_double(Word const& w) {
    return !in_proper_free_factor(w).in_proper_free_factor;
  }

}  // namespace surfsub
