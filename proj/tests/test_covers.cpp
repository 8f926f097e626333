#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "oracles.hpp"
#include "surfsub/alexander.hpp"
#include "surfsub/covers.hpp"

using namespace surfsub;

namespace {
  std::vector<int> random_perm(int d) {
    std::vector<int> p(static_cast<std::size_t>(d));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), oracle::rng());
    return p;
  }

  bool transitive(std::vector<std::vector<int>> const& perms, int d) {
    std::vector<bool> seen(static_cast<std::size_t>(d), false);
    std::vector<int>  stack{0};
    seen[0]   = true;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto const& p : perms) {
        for (int u = 0; u < d; ++u) {
          // neighbours both ways
          int nb = -1;
          if (p[static_cast<std::size_t>(v)] == u || p[static_cast<std::size_t>(u)] == v) {
            nb = u;
          }
          if (nb >= 0 && !seen[static_cast<std::size_t>(nb)]) {
            seen[static_cast<std::size_t>(nb)] = true;
            ++count;
            stack.push_back(nb);
          }
        }
      }
    }
    return count == d;
  }

  std::vector<std::vector<int>> random_transitive(std::size_t n, int d) {
    while (true) {
      std::vector<std::vector<int>> perms;
      for (std::size_t i = 0; i < n; ++i) {
        perms.push_back(random_perm(d));
      }
      if (transitive(perms, d)) {
        return perms;
      }
    }
  }
}  // namespace

TEST_CASE("cover graph basics") {
  auto wedge = permrep_cover(2, {{0}, {0}});
  CHECK(wedge.index() == 1);
  CHECK(wedge.h1_rank() == 2);
  auto two = permrep_cover(2, parse_permutations("(1 2);", 2));
  CHECK(two.index() == 2);
  CHECK(two.h1_rank() == 3);
  for (long long k = 1; k <= 6; ++k) {
    for (std::size_t n = 2; n <= 4; ++n) {
      std::vector<long long> v(n, 0);
      v[n - 1] = 1;
      CHECK(cyclic_cover(n, PhiMap(v), k).h1_rank() == static_cast<std::size_t>(k) * (n - 1) + 1);
    }
  }
}

TEST_CASE("permutation parsing") {
  auto p = parse_permutations("(1 2 3); (1 3)", 2);
  CHECK(p[0] == std::vector<int>{1, 2, 0});
  CHECK(p[1] == std::vector<int>{2, 1, 0});
  CHECK(parse_permutations("(1,2)(3,4);()", 2)[1] == std::vector<int>{0, 1, 2, 3});
  CHECK_THROWS_AS(parse_permutations("(1 2)", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutations("(1 1);", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutations("(0 1);", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutations("(1 2;", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutations("x;", 2), std::invalid_argument);
  // (1 2) and (3 4) never connect 1 to 3.
  CHECK_THROWS_AS(permrep_cover(2, parse_permutations("(1 2);(3 4)", 2)), std::invalid_argument);
  CHECK_THROWS_AS(permrep_cover(2, {{0, 0}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("relator lifts") {
  auto trivial = permrep_cover(2, {{0}, {0}});
  auto comm    = lift_relator(trivial, parse_word("abAB", 2));
  REQUIRE(comm.lifts.size() == 1);
  CHECK(comm.lifts[0].multiplicity == 1);
  CHECK(comm.lifts[0].homology_class == std::vector<long long>{0, 0});
  auto ab = lift_relator(trivial, parse_word("ab", 2));
  CHECK(ab.lifts[0].homology_class == std::vector<long long>{1, 1});
  auto c3 = lift_relator(cyclic_cover(2, PhiMap({0, 1}), 3), parse_word("b", 2));
  REQUIRE(c3.lifts.size() == 1);
  CHECK(c3.lifts[0].multiplicity == 3);

  for (int i = 0; i < 100; ++i) {
    int  d     = 1 + i % 5;
    auto perms = random_transitive(2, d);
    auto cover = permrep_cover(2, perms);
    auto w     = oracle::random_cyclic_word(2, 1 + i % 10);
    auto lifts = lift_relator(cover, w);
    int  total = 0;
    for (auto const& l : lifts.lifts) {
      total += l.multiplicity;
      CHECK(cover.act(l.start, w.pow(l.multiplicity)) == l.start);
    }
    CHECK(total == d);
  }
}

TEST_CASE("homology of one-relator covers") {
  auto trivial = permrep_cover(2, {{0}, {0}});
  auto a       = homology_one_relator_cover(trivial, parse_word("a", 2));
  CHECK(a.betti1 == 1);
  auto comm = homology_one_relator_cover(trivial, parse_word("abAB", 2));
  CHECK(comm.betti1 == 2);
  CHECK(comm.torsion.empty());
  auto d3 = homology_one_relator_cover(cyclic_cover(2, PhiMap({0, 1}), 3), parse_word("ababaBB", 2));
  CHECK(d3.betti1 == 3);
  auto bs = homology_one_relator_cover(trivial, parse_word("Ba^2ba^-3", 2));
  CHECK(bs.betti1 == 1);
  CHECK(bs.torsion.empty());
  auto bs5 = homology_one_relator_cover(trivial, parse_word("Ba^2ba^3", 2));
  CHECK(bs5.torsion == std::vector<BigInt>{5});
}

TEST_CASE("second Betti number of the double") {
  auto trivial = permrep_cover(2, {{0}, {0}});
  CHECK(betti2_double(trivial, parse_word("abAB", 2)) == 1);
  CHECK(betti2_double(trivial, parse_word("ab", 2)) == 0);
  auto comm = parse_word("abAB", 2);
  for (int i = 0; i < 30; ++i) {
    auto cover = permrep_cover(2, random_transitive(2, 1 + i % 5));
    auto lifts = lift_relator(cover, comm);
    auto J     = static_cast<long long>(lifts.lifts.size());
    auto b2    = betti2_double(cover, comm);
    CHECK(b2 >= 1);
    CHECK(b2 <= J);
    auto entries = lifts.matrix().entries();
    if (std::all_of(entries.begin(), entries.end(), [](BigInt const& x) { return x == 0; })) {
      CHECK(b2 == J);
    }
  }
}

TEST_CASE("Euler identity with an independent rank") {
  for (int i = 0; i < 120; ++i) {
    std::size_t n     = 2 + i % 2;
    int         d     = 1 + i % 5;
    auto        cover = permrep_cover(n, random_transitive(n, d));
    auto        w     = oracle::random_cyclic_word(n, 2 + i % 10);
    auto        lifts = lift_relator(cover, w);
    auto        r     = static_cast<long long>(oracle::rational_rank(lifts.matrix()));
    auto        J     = static_cast<long long>(lifts.lifts.size());
    long long   b1    = static_cast<long long>(cover.h1_rank()) - r;
    long long   b2    = J - r;
    CHECK(homology_one_relator_cover(cover, w).betti1 == b1);
    CHECK(betti2_double(cover, w) == b2);
    CHECK(b2 - b1 == J - d * static_cast<long long>(n - 1) - 1);
    if (relator_acts_trivially(cover, w)) {
      CHECK(J == d);
      CHECK(b2 == b1 + d * (2 - static_cast<long long>(n)) - 1);
    }
  }
}

TEST_CASE("cyclic covers against the Alexander formula") {
  for (int i = 0; i < 150; ++i) {
    auto w    = oracle::random_word(2, 1 + i % 16);
    auto e    = exponent_vector(w);
    if (e[0] == 0 && e[1] == 0) {
      continue;
    }
    auto phi  = phi_for_rank2(w);
    auto data = relation_vector(w, phi);
    for (long long k = 1; k <= 6; ++k) {
      CHECK(homology_one_relator_cover(cyclic_cover(2, phi, k), w).betti1
            == betti_cyclic_cover(data, k));
    }
  }
}

TEST_CASE("explicit spanning trees give the same invariants") {
  std::vector<std::vector<int>> action = {{0, 1, 2, 3}, {1, 2, 3, 0}};
  CoverGraph bfs(action);
  CoverGraph other(action, 0, std::vector<CoverEdge>{{1, 2}, {2, 2}, {3, 2}});
  CoverGraph mixed(action, 2, std::vector<CoverEdge>{{0, 2}, {2, 2}, {3, 2}});
  CHECK_THROWS_AS(CoverGraph(action, 0, std::vector<CoverEdge>{{0, 2}, {1, 2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(CoverGraph(action, 0, std::vector<CoverEdge>{{0, 1}, {1, 2}, {2, 2}}),
                  std::invalid_argument);
  for (int i = 0; i < 50; ++i) {
    auto w = oracle::random_cyclic_word(2, 1 + i % 12);
    auto h = homology_one_relator_cover(bfs, w);
    for (auto const* c : {&other, &mixed}) {
      auto g = homology_one_relator_cover(*c, w);
      CHECK(g.betti1 == h.betti1);
      CHECK(g.torsion == h.torsion);
      CHECK(betti2_double(*c, w) == betti2_double(bfs, w));
    }
  }
}

TEST_CASE("Schreier rewriting") {
  auto trivial = permrep_cover(2, {{0}, {0}});
  auto w       = parse_word("abAAB", 2);
  CHECK(rewrite_in_schreier_basis(trivial, w) == w);
  for (int i = 0; i < 60; ++i) {
    std::size_t n     = 2 + i % 2;
    auto        cover = permrep_cover(n, random_transitive(n, 1 + i % 5));
    for (std::size_t g = 0; g < cover.h1_rank(); ++g) {
      auto s = cover.schreier_generator(g);
      CHECK(cover.act(cover.basepoint(), s) == cover.basepoint());
      CHECK(rewrite_in_schreier_basis(cover, s)
            == Word::generator(cover.h1_rank(), static_cast<int>(g) + 1));
    }
    auto u = oracle::random_word(n, 1 + i % 9);
    auto v = u.pow(1 + i % 4);
    int  m = 1;
    while (cover.act(cover.basepoint(), u.pow(m)) != cover.basepoint()) {
      ++m;
    }
    auto loop = u.pow(m);
    CHECK(push_down(cover, rewrite_in_schreier_basis(cover, loop)) == loop);
    if (cover.act(cover.basepoint(), v) != cover.basepoint()) {
      CHECK_THROWS_AS(rewrite_in_schreier_basis(cover, v), std::invalid_argument);
    }
  }
}
