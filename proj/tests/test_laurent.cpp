#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "surfsub/laurent.hpp"

using namespace surfsub;

namespace {
  LaurentPoly poly(int min_exp, std::vector<long long> coeffs) {
    std::vector<BigInt> c(coeffs.begin(), coeffs.end());
    return LaurentPoly::from_coefficients(min_exp, c);
  }

  LaurentPoly random_poly(int max_span, int range) {
    std::uniform_int_distribution<int> pick(-range, range);
    std::uniform_int_distribution<int> span(0, max_span);
    std::vector<long long>             c(static_cast<std::size_t>(span(oracle::rng())) + 1);
    for (auto& x : c) {
      x = pick(oracle::rng());
    }
    return poly(pick(oracle::rng()), c);
  }
}  // namespace

TEST_CASE("normalization") {
  CHECK(normalize(poly(-1, {-3, -3})).poly() == poly(0, {3, 3}));
  CHECK(normalize(LaurentPoly()).is_zero());
  CHECK(normalize(poly(3, {-1, 0, 1})).poly() == poly(0, {-1, 0, 1}));
  CHECK(to_string(poly(0, {3, 4, -1})) == "3 + 4*t - t^2");
  CHECK(to_string(poly(-1, {1})) == "t^-1");
}

TEST_CASE("gcd examples") {
  CHECK(gcd(poly(0, {-1, 0, 1}), poly(0, {-1, 0, 0, 1})).poly() == poly(0, {-1, 1}));
  CHECK(gcd(poly(0, {2, 2}), LaurentPoly(4)).poly() == LaurentPoly(2));
  auto p = poly(-2, {5, -1, 3});
  CHECK(gcd(p, LaurentPoly()) == normalize(p));
  CHECK(gcd(LaurentPoly(), LaurentPoly()).is_zero());
}

TEST_CASE("gcd divides both and absorbs common factors") {
  for (int i = 0; i < 200; ++i) {
    auto a = random_poly(3, 4), b = random_poly(3, 4), c = random_poly(2, 3);
    if (a.is_zero() || b.is_zero() || c.is_zero()) {
      continue;
    }
    auto g = gcd(a * c, b * c);
    CHECK(divides(g.poly(), a * c));
    CHECK(divides(g.poly(), b * c));
    CHECK(divides(c, g.poly()));
    CHECK(gcd(b * c, a * c) == g);
  }
}

TEST_CASE("exact division") {
  for (int i = 0; i < 200; ++i) {
    auto a = random_poly(4, 5), b = random_poly(3, 5);
    if (b.is_zero()) {
      continue;
    }
    auto q = exact_divide(a * b, b);
    REQUIRE(q);
    CHECK(*q == a);
  }
  CHECK_FALSE(exact_divide(poly(0, {1, 1}), poly(0, {2})));
  CHECK_THROWS_AS(exact_divide(poly(0, {1}), LaurentPoly()), std::invalid_argument);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1).poly() == poly(0, {-1, 1}));
  CHECK(cyclotomic(3).poly() == poly(0, {1, 1, 1}));
  CHECK(cyclotomic(6).poly() == poly(0, {1, -1, 1}));
  for (int n = 1; n <= 40; ++n) {
    LaurentPoly prod(1);
    for (int d = 1; d <= n; ++d) {
      if (n % d == 0) {
        prod = prod * cyclotomic(d).poly();
      }
    }
    CHECK(prod == LaurentPoly::t_power_minus_one(n));
    CHECK(cyclotomic(n).degree() == euler_totient(n));
  }
}

TEST_CASE("cyclotomic factor detection against numeric roots") {
  CHECK(cyclotomic_factors(poly(0, {1, 1, 1})) == std::set<int>{3});
  CHECK(cyclotomic_factors(poly(0, {2, 3})).empty());
  CHECK(cyclotomic_factors(poly(0, {-1, 0, 0, 0, 1})) == std::set<int>{1, 2, 4});
  CHECK_THROWS_AS(cyclotomic_factors(LaurentPoly()), std::invalid_argument);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly p = random_poly(2, 3);
    if (p.is_zero()) {
      continue;
    }
    if (i % 2 == 0) {
      p = p * cyclotomic(1 + i % 12).poly();
    }
    auto factors = cyclotomic_factors(p);
    for (long long k = 1; k <= 12; ++k) {
      long long r = 0;
      for (int d : factors) {
        if (k % d == 0) {
          r += euler_totient(d);
        }
      }
      CHECK(r == oracle::numeric_root_count(p, k));
    }
  }
}

TEST_CASE("number theory and reduction mod p") {
  CHECK(euler_totient(1) == 1);
  CHECK(euler_totient(12) == 4);
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK(smallest_prime_factor(BigInt(91)) == 7);
  CHECK_FALSE(smallest_prime_factor(BigInt(1)));
  CHECK(reduce_mod_p(poly(0, {2, 2}), 2).residues.is_zero());
  CHECK(reduce_mod_p(poly(0, {3, 4}), 2).residues == LaurentPoly(1));
  CHECK(reduce_mod_p(poly(0, {6, 10, 15}), 5).residues == LaurentPoly(1));
  CHECK(reduce_mod_p(poly(0, {-1}), 3).residues == LaurentPoly(2));
  CHECK_THROWS_AS(reduce_mod_p(poly(0, {1}), 4), std::invalid_argument);
  CHECK(content(poly(0, {6, -10, 4})) == 2);
}
