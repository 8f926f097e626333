#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "oracles.hpp"
#include "surfsub/bsgroups.hpp"
#include "surfsub/heegaard.hpp"

using namespace surfsub;

namespace {
  // Walk w^n in the n-fold cover by hand. Tree edges are a at 1..n-1; the
  // non-tree edges are a at 0 (a0) and b at v (b_v).
  Word walk_lift(long long p, long long q) {
    long long const     n = p * q;
    std::vector<Letter> out;
    long long           v = 0;
    auto const          w = bs_word(p, q);
    auto a0 = static_cast<Letter>(n + 1);
    for (long long rep = 0; rep < n; ++rep) {
      for (Letter l : w) {
        if (l == 1) {
          if (v == 0) {
            out.push_back(a0);
          }
          v = (v + 1) % n;
        } else if (l == -1) {
          v = (v + n - 1) % n;
          if (v == 0) {
            out.push_back(-a0);
          }
        } else {
          auto b = static_cast<Letter>(v + 1);
          out.push_back(l == 2 ? b : -b);
        }
      }
    }
    CHECK(v == 0);
    return Word(static_cast<std::size_t>(n + 1), out);
  }

  std::vector<std::pair<long long, long long>> coprime_pairs(long long max) {
    std::vector<std::pair<long long, long long>> out;
    for (long long p = 1; p <= max; ++p) {
      for (long long q = p + 1; q <= max; ++q) {
        if (std::gcd(p, q) == 1) {
          out.emplace_back(p, q);
        }
      }
    }
    return out;
  }
}  // namespace

TEST_CASE("orbit data") {
  auto o = orbit_data(2, 3);
  CHECK(o.n == 6);
  REQUIRE(o.omega.size() == 2);
  REQUIRE(o.lambda.size() == 3);
  for (auto [p, q] : coprime_pairs(7)) {
    auto d = orbit_data(p, q);
    std::vector<int> hits(static_cast<std::size_t>(d.n), 0);
    for (auto const& c : d.omega) {
      CHECK(c.size() == static_cast<std::size_t>(q));
      for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        CHECK((c[i + 1] - c[i] - p) % d.n == 0);
      }
      for (int x : c) {
        ++hits[static_cast<std::size_t>(x % d.n)];
      }
    }
    for (auto const& c : d.lambda) {
      CHECK(c.size() == static_cast<std::size_t>(p));
      for (int x : c) {
        ++hits[static_cast<std::size_t>(x % d.n)];
      }
    }
    for (int h : hits) {
      CHECK(h == 2);
    }
  }
  CHECK_THROWS_AS(orbit_data(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(orbit_data(0, 3), std::invalid_argument);
}

TEST_CASE("lifted word") {
  CHECK(lifted_generator_name(6, 7) == "a0");
  CHECK(lifted_generator_name(6, 3) == "b2");
  for (auto [p, q] : coprime_pairs(7)) {
    auto w = lift_bs_word(p, q);
    CHECK(w.rank() == static_cast<std::size_t>(p * q + 1));
    CHECK(cyclic_canonical(w) == cyclic_canonical(walk_lift(p, q)));
    std::size_t b_letters = 0, a_letters = 0;
    for (Letter l : w) {
      if (generator_of(l) == p * q + 1) {
        ++a_letters;
        CHECK(l > 0);
      } else {
        ++b_letters;
      }
    }
    CHECK(b_letters == static_cast<std::size_t>(2 * p * q));
    CHECK(a_letters == static_cast<std::size_t>(p + q));
    // Each b_i appears once with each sign.
    auto e = exponent_vector(w);
    for (long long i = 0; i < p * q; ++i) {
      CHECK(e[static_cast<std::size_t>(i)] == 0);
    }
  }
}

TEST_CASE("diagram counts") {
  auto d12 = build_diagram(1, 2);
  CHECK(d12.discs.size() == 6);
  CHECK(d12.arcs.size() == 7);
  auto d23 = build_diagram(2, 3);
  CHECK(d23.discs.size() == 14);
  CHECK(d23.arcs.size() == 17);
  auto d34 = build_diagram(3, 4);
  CHECK(d34.discs.size() == 26);
  CHECK(d34.arcs.size() == 31);
  CHECK(d34.chains.size() == 7);
  CHECK_THROWS_AS(build_diagram(2, 4), std::invalid_argument);
}

TEST_CASE("every small diagram verifies") {
  for (auto [p, q] : coprime_pairs(7)) {
    auto d = build_diagram(p, q);
    auto r = verify_diagram(d);
    CAPTURE(p);
    CAPTURE(q);
    CHECK(r.ok());
    CHECK(r.failures.empty());
    CHECK(r.single_curve);
    CHECK(r.curve_length == d.arcs.size());
    CHECK(r.order_reversing);
    CHECK(r.genus == p * q + 1);
    CHECK(r.surface_euler == 2 - 2 * (p * q + 1));
    CHECK(r.arcs == static_cast<std::size_t>(2 * p * q + p + q));
    CHECK(r.discs == static_cast<std::size_t>(2 * (p * q + 1)));
    CHECK(cyclic_canonical(r.traversal) == cyclic_canonical(lift_bs_word(p, q)));
    for (auto const& c : d.chains) {
      CHECK(c.arcs.size() == static_cast<std::size_t>(c.family == 'O' ? q + 1 : p + 1));
    }
  }
}

TEST_CASE("swapped slots are caught") {
  for (auto [p, q] : coprime_pairs(5)) {
    auto d = build_diagram(p, q);
    if (p * q < 2) {
      continue;
    }
    auto bad = swap_incoming_b_arcs(d, 0, 1);
    auto r   = verify_diagram(bad);
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.failures.empty());
  }
}

TEST_CASE("renderings") {
  auto d   = build_diagram(2, 3);
  auto svg = to_svg(d);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  auto listing = to_listing(d);
  CHECK(listing.find("A0+") != std::string::npos);
  CHECK(listing.find("B5-") != std::string::npos);
}
