// Integer Laurent polynomials in one variable t.

#ifndef SURFSUB_LAURENT_HPP_
#define SURFSUB_LAURENT_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "surfsub/intlinalg.hpp"

namespace surfsub {

  //! An element of Z[t, t^-1], stored as exponent -> nonzero coefficient.
  class LaurentPoly {
   public:
    LaurentPoly() = default;
    LaurentPoly(BigInt const& constant);  // NOLINT(runtime/explicit)
    LaurentPoly(long long constant) : LaurentPoly(BigInt(constant)) {}  // NOLINT

    static LaurentPoly monomial(BigInt const& c, int exponent);
    // coefficients[i] multiplies t^(min_exponent + i)
    static LaurentPoly from_coefficients(int min_exponent,
                                         std::vector<BigInt> const& coefficients);
    // t^k - 1
    static LaurentPoly t_power_minus_one(int k);

    bool is_zero() const noexcept {
      return terms_.empty();
    }
    std::map<int, BigInt> const& terms() const noexcept {
      return terms_;
    }
    BigInt coefficient(int exponent) const;
    // Exponent range; zero polynomial has none (throws std::domain_error).
    int min_exponent() const;
    int max_exponent() const;
    // max - min exponent, 0 for the zero polynomial.
    int span() const;

    void add_term(BigInt const& c, int exponent);
    LaurentPoly shifted(int k) const;  // times t^k
    BigInt      evaluate_at_one() const;
    // Ascending coefficients from min_exponent to max_exponent.
    std::vector<BigInt> dense() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(LaurentPoly const& o);
    LaurentPoly& operator-=(LaurentPoly const& o);
    friend LaurentPoly operator+(LaurentPoly a, LaurentPoly const& b) {
      return a += b;
    }
    friend LaurentPoly operator-(LaurentPoly a, LaurentPoly const& b) {
      return a -= b;
    }
    friend LaurentPoly operator*(LaurentPoly const& a, LaurentPoly const& b);
    friend bool        operator==(LaurentPoly const&, LaurentPoly const&) = default;

   private:
    std::map<int, BigInt> terms_;
  };

  //! Canonical representative of the orbit {±t^r · p}: lowest exponent 0,
  //! positive top coefficient. Integer content is kept.
  class NormalizedPoly {
   public:
    NormalizedPoly() = default;  // zero

    LaurentPoly const& poly() const noexcept {
      return poly_;
    }
    bool is_zero() const noexcept {
      return poly_.is_zero();
    }
    int degree() const {
      return poly_.span();
    }
    bool is_one() const {
      return poly_ == LaurentPoly(1);
    }

    friend NormalizedPoly normalize(LaurentPoly const& p);
    friend bool operator==(NormalizedPoly const&, NormalizedPoly const&) = default;

   private:
    explicit NormalizedPoly(LaurentPoly p) : poly_(std::move(p)) {}
    LaurentPoly poly_;
  };

  NormalizedPoly normalize(LaurentPoly const& p);

  // Non-negative gcd of the coefficients (0 for the zero polynomial).
  BigInt content(LaurentPoly const& p);

  // q with a == b * q in Z[t, t^-1], or nullopt. b must be nonzero.
  std::optional<LaurentPoly> exact_divide(LaurentPoly const& a, LaurentPoly const& b);
  bool                       divides(LaurentPoly const& b, LaurentPoly const& a);

  // gcd in Z[t, t^-1]: gcd of contents times gcd of primitive parts.
  // gcd(0, q) = normalize(q).
  NormalizedPoly gcd(LaurentPoly const& a, LaurentPoly const& b);

  long long euler_totient(long long n);
  bool      is_prime(long long n);
  // Smallest prime dividing n (|n| >= 2), else nullopt.
  std::optional<long long> smallest_prime_factor(BigInt const& n);

  NormalizedPoly cyclotomic(int d);

  // Every d with Φ_d dividing p. Throws std::invalid_argument on zero.
  std::set<int> cyclotomic_factors(LaurentPoly const& p);

  struct PolyModP {
    long long   prime = 2;
    LaurentPoly residues;  // coefficients in [0, prime)
  };

  // Throws std::invalid_argument unless p is prime.
  PolyModP reduce_mod_p(LaurentPoly const& poly, long long p);

  // "3 + 4*t - t^2", ascending exponents, "0" for zero.
  std::string to_string(LaurentPoly const& p);
  inline std::string to_string(NormalizedPoly const& p) {
    return to_string(p.poly());
  }

}  // namespace surfsub

#endif  // SURFSUB_LAURENT_HPP_
