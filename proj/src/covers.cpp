#include "surfsub/covers.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace surfsub {

  namespace {
    constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    struct DisjointSets {
      std::vector<int> parent;
      explicit DisjointSets(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
      }
      int find(int x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }
      bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return false;
        }
        parent[a] = b;
        return true;
      }
    };
  }  // namespace

  CoverGraph::CoverGraph(std::vector<std::vector<int>>         action,
                         int                                   basepoint,
                         std::optional<std::vector<CoverEdge>> tree)
      : action_(std::move(action)), basepoint_(basepoint) {
    if (action_.empty()) {
      throw std::invalid_argument("CoverGraph: rank must be at least 1");
    }
    std::size_t const d = action_[0].size();
    if (d == 0) {
      throw std::invalid_argument("CoverGraph: empty vertex set");
    }
    inverse_.assign(action_.size(), std::vector<int>(d, -1));
    for (std::size_t g = 0; g < action_.size(); ++g) {
      if (action_[g].size() != d) {
        throw std::invalid_argument("CoverGraph: permutations of different degree");
      }
      for (std::size_t v = 0; v < d; ++v) {
        int u = action_[g][v];
        if (u < 0 || static_cast<std::size_t>(u) >= d || inverse_[g][u] != -1) {
          throw std::invalid_argument("CoverGraph: generator "
                                      + std::to_string(g + 1)
                                      + " is not a permutation");
        }
        inverse_[g][u] = static_cast<int>(v);
      }
    }
    if (basepoint < 0 || static_cast<std::size_t>(basepoint) >= d) {
      throw std::invalid_argument("CoverGraph: basepoint out of range");
    }

    std::vector<CoverEdge> tree_edges;
    parent_letter_.assign(d, 0);
    std::vector<bool> seen(d, false);
    seen[basepoint] = true;
    std::size_t reached = 1;
    if (!tree) {
      std::queue<int> queue;
      queue.push(basepoint);
      while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (int g = 1; g <= static_cast<int>(rank()); ++g) {
          int fwd = action_[g - 1][v];
          if (!seen[fwd]) {
            seen[fwd]           = true;
            parent_letter_[fwd] = g;
            tree_edges.push_back({v, g});
            queue.push(fwd);
            ++reached;
          }
          int bwd = inverse_[g - 1][v];
          if (!seen[bwd]) {
            seen[bwd]           = true;
            parent_letter_[bwd] = -g;
            tree_edges.push_back({bwd, g});
            queue.push(bwd);
            ++reached;
          }
        }
      }
      if (reached != d) {
        throw std::invalid_argument("CoverGraph: action is not transitive, cover disconnected");
      }
    } else {
      tree_edges = *tree;
      if (tree_edges.size() + 1 != d) {
        throw std::invalid_argument("CoverGraph: spanning tree needs index - 1 edges");
      }
      DisjointSets sets(d);
      for (auto const& e : tree_edges) {
        if (e.gen < 1 || static_cast<std::size_t>(e.gen) > rank() || e.source < 0
            || static_cast<std::size_t>(e.source) >= d) {
          throw std::invalid_argument("CoverGraph: tree edge out of range");
        }
        if (!sets.unite(e.source, action_[e.gen - 1][e.source])) {
          throw std::invalid_argument("CoverGraph: tree edges contain a cycle");
        }
      }
      // Orient the tree away from the basepoint.
      std::vector<std::vector<std::pair<int, Letter>>> adj(d);
      for (auto const& e : tree_edges) {
        int t = action_[e.gen - 1][e.source];
        adj[e.source].push_back({t, e.gen});
        adj[t].push_back({e.source, -e.gen});
      }
      std::queue<int> queue;
      queue.push(basepoint);
      while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (auto [u, l] : adj[v]) {
          if (!seen[u]) {
            seen[u]           = true;
            parent_letter_[u] = l;
            queue.push(u);
            ++reached;
          }
        }
      }
      if (reached != d) {
        throw std::invalid_argument("CoverGraph: action is not transitive, cover disconnected");
      }
    }

    edge_slot_.assign(rank() * d, npos);
    std::vector<bool> in_tree(rank() * d, false);
    for (auto const& e : tree_edges) {
      in_tree[(e.gen - 1) * d + e.source] = true;
    }
    for (std::size_t g = 0; g < rank(); ++g) {
      for (std::size_t v = 0; v < d; ++v) {
        if (!in_tree[g * d + v]) {
          edge_slot_[g * d + v] = basis_.size();
          basis_.push_back({static_cast<int>(v), static_cast<int>(g + 1)});
        }
      }
    }
  }

  int CoverGraph::act(int v, Letter l) const {
    int g = generator_of(l);
    return l > 0 ? action_[g - 1][v] : inverse_[g - 1][v];
  }

  int CoverGraph::act(int v, Word const& w) const {
    for (Letter l : w) {
      v = act(v, l);
    }
    return v;
  }

  std::optional<std::size_t> CoverGraph::basis_index(CoverEdge e) const {
    std::size_t slot = edge_slot_.at((e.gen - 1) * index() + e.source);
    if (slot == npos) {
      return std::nullopt;
    }
    return slot;
  }

  Word CoverGraph::tree_path(int v) const {
    std::vector<Letter> rev;
    while (v != basepoint_) {
      Letter l = parent_letter_[v];
      rev.push_back(l);
      v = act(v, -l);
    }
    std::reverse(rev.begin(), rev.end());
    return Word(rank(), std::move(rev));
  }

  Word CoverGraph::schreier_generator(std::size_t i) const {
    CoverEdge const& e = basis_.at(i);
    return tree_path(e.source) * Word::generator(rank(), e.gen)
           * tree_path(act(e.source, e.gen)).inverse();
  }

  CoverGraph cyclic_cover(std::size_t n, PhiMap const& phi, long long k) {
    if (k < 1) {
      throw std::invalid_argument("cyclic_cover: k must be >= 1");
    }
    if (phi.rank() != n) {
      throw std::invalid_argument("cyclic_cover: rank mismatch");
    }
    std::vector<std::vector<int>> action(n, std::vector<int>(static_cast<std::size_t>(k)));
    for (std::size_t g = 0; g < n; ++g) {
      long long shift = ((phi.values()[g] % k) + k) % k;
      for (long long v = 0; v < k; ++v) {
        action[g][static_cast<std::size_t>(v)] = static_cast<int>((v + shift) % k);
      }
    }
    return CoverGraph(std::move(action), 0);
  }

  CoverGraph permrep_cover(std::size_t                          n,
                           std::vector<std::vector<int>> const& perms,
                           int                                  basepoint) {
    if (perms.size() != n) {
      throw std::invalid_argument("permrep_cover: need one permutation per generator");
    }
    return CoverGraph(perms, basepoint);
  }

  std::vector<std::vector<int>> parse_permutations(std::string_view spec,
                                                   std::size_t      rank) {
    std::vector<std::vector<std::vector<int>>> cycles_per_gen;
    int                                        degree = 1;
    std::size_t                                i      = 0;
    auto bad = [&](std::string const& why) {
      return std::invalid_argument("parse_permutations: " + why + " at position "
                                   + std::to_string(i));
    };
    cycles_per_gen.emplace_back();
    while (i < spec.size()) {
      char c = spec[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (c == ';') {
        cycles_per_gen.emplace_back();
        ++i;
      } else if (c == '(') {
        ++i;
        std::vector<int> cycle;
        while (true) {
          while (i < spec.size()
                 && (std::isspace(static_cast<unsigned char>(spec[i])) || spec[i] == ',')) {
            ++i;
          }
          if (i >= spec.size()) {
            throw bad("unterminated cycle");
          }
          if (spec[i] == ')') {
            ++i;
            break;
          }
          if (!std::isdigit(static_cast<unsigned char>(spec[i]))) {
            throw bad(std::string("unexpected '") + spec[i] + "'");
          }
          int point = 0;
          while (i < spec.size() && std::isdigit(static_cast<unsigned char>(spec[i]))) {
            point = point * 10 + (spec[i] - '0');
            if (point > 100000) {
              throw bad("point too large");
            }
            ++i;
          }
          if (point < 1) {
            throw bad("points are numbered from 1");
          }
          degree = std::max(degree, point);
          cycle.push_back(point - 1);
        }
        cycles_per_gen.back().push_back(std::move(cycle));
      } else {
        throw bad(std::string("unexpected '") + c + "'");
      }
    }
    if (cycles_per_gen.size() != rank) {
      throw std::invalid_argument("parse_permutations: expected "
                                  + std::to_string(rank) + " permutations, got "
                                  + std::to_string(cycles_per_gen.size()));
    }
    std::vector<std::vector<int>> perms;
    for (auto const& cycles : cycles_per_gen) {
      std::vector<int> p(static_cast<std::size_t>(degree));
      std::iota(p.begin(), p.end(), 0);
      std::vector<bool> used(static_cast<std::size_t>(degree), false);
      for (auto const& cycle : cycles) {
        for (std::size_t j = 0; j < cycle.size(); ++j) {
          if (used[cycle[j]]) {
            throw std::invalid_argument("parse_permutations: point "
                                        + std::to_string(cycle[j] + 1)
                                        + " repeated in one permutation");
          }
          used[cycle[j]] = true;
          p[cycle[j]]    = cycle[(j + 1) % cycle.size()];
        }
      }
      perms.push_back(std::move(p));
    }
    return perms;
  }

  IntMatrix RelatorLifts::matrix() const {
    IntMatrix m(lifts.size(), h1_rank);
    for (std::size_t r = 0; r < lifts.size(); ++r) {
      for (std::size_t c = 0; c < h1_rank; ++c) {
        m(r, c) = lifts[r].homology_class[c];
      }
    }
    return m;
  }

  RelatorLifts lift_relator(CoverGraph const& cover, Word const& w) {
    std::size_t const d = cover.index();
    std::vector<int>  rho(d);
    for (std::size_t v = 0; v < d; ++v) {
      rho[v] = cover.act(static_cast<int>(v), w);
    }
    RelatorLifts      result;
    result.h1_rank = cover.h1_rank();
    std::vector<bool> done(d, false);
    for (std::size_t v = 0; v < d; ++v) {
      if (done[v]) {
        continue;
      }
      RelatorLift lift;
      lift.start        = static_cast<int>(v);
      lift.multiplicity = 0;
      for (int u = static_cast<int>(v); !done[u]; u = rho[u]) {
        done[u] = true;
        ++lift.multiplicity;
      }
      lift.homology_class.assign(cover.h1_rank(), 0);
      int cur = lift.start;
      for (int pass = 0; pass < lift.multiplicity; ++pass) {
        for (Letter l : w) {
          int       g = generator_of(l);
          CoverEdge e = l > 0 ? CoverEdge{cur, g} : CoverEdge{cover.act(cur, l), g};
          if (auto idx = cover.basis_index(e)) {
            lift.homology_class[*idx] += l > 0 ? 1 : -1;
          }
          cur = cover.act(cur, l);
        }
      }
      result.lifts.push_back(std::move(lift));
    }
    return result;
  }

  bool relator_acts_trivially(CoverGraph const& cover, Word const& w) {
    for (std::size_t v = 0; v < cover.index(); ++v) {
      if (cover.act(static_cast<int>(v), w) != static_cast<int>(v)) {
        return false;
      }
    }
    return true;
  }

  CoverHomology homology_one_relator_cover(CoverGraph const& cover, Word const& w) {
    auto coker = cokernel_invariants(lift_relator(cover, w).matrix());
    return {static_cast<long long>(coker.free_rank), std::move(coker.torsion)};
  }

  long long betti2_double(CoverGraph const& cover, Word const& w) {
    auto lifts = lift_relator(cover, w);
    return static_cast<long long>(lifts.lifts.size())
           - static_cast<long long>(rank(lifts.matrix()));
  }

  Word rewrite_in_schreier_basis(CoverGraph const& cover, Word const& w) {
    std::vector<Letter> out;
    int                 cur = cover.basepoint();
    for (Letter l : w) {
      int       g = generator_of(l);
      CoverEdge e = l > 0 ? CoverEdge{cur, g} : CoverEdge{cover.act(cur, l), g};
      if (auto idx = cover.basis_index(e)) {
        int s = static_cast<int>(*idx) + 1;
        out.push_back(l > 0 ? s : -s);
      }
      cur = cover.act(cur, l);
    }
    if (cur != cover.basepoint()) {
      throw std::invalid_argument(
          "rewrite_in_schreier_basis: word does not lie in the subgroup");
    }
    return Word(cover.h1_rank(), std::move(out));
  }

  Word push_down(CoverGraph const& cover, Word const& schreier_word) {
    std::vector<Word> images;
    for (std::size_t i = 0; i < cover.h1_rank(); ++i) {
      images.push_back(cover.schreier_generator(i));
    }
    return substitute(schreier_word, images);
  }

}  // namespace surfsub
