#include "surfsub/laurent.hpp"

#include <limits>
#include <stdexcept>
#include <utility>

namespace surfsub {

  namespace {
    using Dense = std::vector<BigInt>;  // ascending, index = exponent

    void trim(Dense& a) {
      while (!a.empty() && a.back() == 0) {
        a.pop_back();
      }
    }

    BigInt dense_content(Dense const& a) {
      BigInt g = 0;
      for (auto const& c : a) {
        g = boost::multiprecision::gcd(g, c);
      }
      return abs(g);
    }

    Dense primitive_part(Dense a) {
      BigInt g = dense_content(a);
      if (g > 1) {
        for (auto& c : a) {
          c /= g;
        }
      }
      if (!a.empty() && a.back() < 0) {
        for (auto& c : a) {
          c = -c;
        }
      }
      return a;
    }

    // Pseudo-remainder of a by b (b nonzero).
    Dense pseudo_remainder(Dense r, Dense const& b) {
      std::size_t const db = b.size() - 1;
      BigInt const&     lb = b.back();
      trim(r);
      while (!r.empty() && r.size() - 1 >= db) {
        BigInt      lr    = r.back();
        std::size_t shift = r.size() - 1 - db;
        for (auto& c : r) {
          c *= lb;
        }
        for (std::size_t j = 0; j <= db; ++j) {
          r[j + shift] -= lr * b[j];
        }
        trim(r);
      }
      return r;
    }

    // Exact quotient a / b of ordinary polynomials, or nullopt.
    std::optional<Dense> divide_dense(Dense r, Dense const& b) {
      trim(r);
      if (r.empty()) {
        return Dense{};
      }
      if (r.size() < b.size()) {
        return std::nullopt;
      }
      std::size_t const db = b.size() - 1;
      Dense             q(r.size() - db);
      for (std::size_t i = q.size(); i-- > 0;) {
        BigInt const& top = r[i + db];
        if (top == 0) {
          continue;
        }
        if (top % b.back() != 0) {
          return std::nullopt;
        }
        BigInt c = top / b.back();
        for (std::size_t j = 0; j <= db; ++j) {
          r[i + j] -= c * b[j];
        }
        q[i] = std::move(c);
      }
      for (auto const& c : r) {
        if (c != 0) {
          return std::nullopt;
        }
      }
      trim(q);
      return q;
    }

    LaurentPoly cyclotomic_memo(int d, std::map<int, LaurentPoly>& memo) {
      if (auto it = memo.find(d); it != memo.end()) {
        return it->second;
      }
      LaurentPoly p = LaurentPoly::t_power_minus_one(d);
      for (int e = 1; e < d; ++e) {
        if (d % e == 0) {
          auto q = exact_divide(p, cyclotomic_memo(e, memo));
          if (!q) {
            throw std::logic_error("cyclotomic: inexact division");
          }
          p = std::move(*q);
        }
      }
      memo.emplace(d, p);
      return p;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // LaurentPoly
  ////////////////////////////////////////////////////////////////////////

  LaurentPoly::LaurentPoly(BigInt const& constant) {
    if (constant != 0) {
      terms_.emplace(0, constant);
    }
  }

  LaurentPoly LaurentPoly::monomial(BigInt const& c, int exponent) {
    LaurentPoly p;
    p.add_term(c, exponent);
    return p;
  }

  LaurentPoly LaurentPoly::from_coefficients(int min_exponent,
                                             std::vector<BigInt> const& coefficients) {
    LaurentPoly p;
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
      p.add_term(coefficients[i], min_exponent + static_cast<int>(i));
    }
    return p;
  }

  LaurentPoly LaurentPoly::t_power_minus_one(int k) {
    return monomial(1, k) - LaurentPoly(1);
  }

  BigInt LaurentPoly::coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  int LaurentPoly::min_exponent() const {
    if (terms_.empty()) {
      throw std::domain_error("LaurentPoly: zero polynomial has no exponents");
    }
    return terms_.begin()->first;
  }

  int LaurentPoly::max_exponent() const {
    if (terms_.empty()) {
      throw std::domain_error("LaurentPoly: zero polynomial has no exponents");
    }
    return terms_.rbegin()->first;
  }

  int LaurentPoly::span() const {
    return terms_.empty() ? 0 : max_exponent() - min_exponent();
  }

  void LaurentPoly::add_term(BigInt const& c, int exponent) {
    if (c == 0) {
      return;
    }
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) {
        terms_.erase(it);
      }
    }
  }

  LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly p;
    for (auto const& [e, c] : terms_) {
      p.terms_.emplace_hint(p.terms_.end(), e + k, c);
    }
    return p;
  }

  BigInt LaurentPoly::evaluate_at_one() const {
    BigInt s = 0;
    for (auto const& [e, c] : terms_) {
      s += c;
    }
    return s;
  }

  std::vector<BigInt> LaurentPoly::dense() const {
    std::vector<BigInt> out;
    if (terms_.empty()) {
      return out;
    }
    int lo = min_exponent();
    out.resize(static_cast<std::size_t>(span()) + 1);
    for (auto const& [e, c] : terms_) {
      out[static_cast<std::size_t>(e - lo)] = c;
    }
    return out;
  }

  LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& [e, c] : p.terms_) {
      c = -c;
    }
    return p;
  }

  LaurentPoly& LaurentPoly::operator+=(LaurentPoly const& o) {
    for (auto const& [e, c] : o.terms_) {
      add_term(c, e);
    }
    return *this;
  }

  LaurentPoly& LaurentPoly::operator-=(LaurentPoly const& o) {
    for (auto const& [e, c] : o.terms_) {
      add_term(-c, e);
    }
    return *this;
  }

  LaurentPoly operator*(LaurentPoly const& a, LaurentPoly const& b) {
    LaurentPoly p;
    for (auto const& [ea, ca] : a.terms_) {
      for (auto const& [eb, cb] : b.terms_) {
        p.add_term(ca * cb, ea + eb);
      }
    }
    return p;
  }

  ////////////////////////////////////////////////////////////////////////
  // Normalization, content, division, gcd
  ////////////////////////////////////////////////////////////////////////

  NormalizedPoly normalize(LaurentPoly const& p) {
    if (p.is_zero()) {
      return NormalizedPoly();
    }
    LaurentPoly q = p.shifted(-p.min_exponent());
    if (q.terms().rbegin()->second < 0) {
      q = -q;
    }
    return NormalizedPoly(std::move(q));
  }

  BigInt content(LaurentPoly const& p) {
    BigInt g = 0;
    for (auto const& [e, c] : p.terms()) {
      g = boost::multiprecision::gcd(g, c);
    }
    return abs(g);
  }

  std::optional<LaurentPoly> exact_divide(LaurentPoly const& a, LaurentPoly const& b) {
    if (b.is_zero()) {
      throw std::invalid_argument("exact_divide: division by zero");
    }
    if (a.is_zero()) {
      return LaurentPoly();
    }
    // Both stripped of t-powers have nonzero constant terms, so divisibility
    // in Z[t, t^-1] is divisibility of the stripped polynomials in Z[t].
    auto q = divide_dense(a.dense(), b.dense());
    if (!q) {
      return std::nullopt;
    }
    return LaurentPoly::from_coefficients(a.min_exponent() - b.min_exponent(), *q);
  }

  bool divides(LaurentPoly const& b, LaurentPoly const& a) {
    return exact_divide(a, b).has_value();
  }

  NormalizedPoly gcd(LaurentPoly const& a, LaurentPoly const& b) {
    if (a.is_zero()) {
      return normalize(b);
    }
    if (b.is_zero()) {
      return normalize(a);
    }
    BigInt g_content = boost::multiprecision::gcd(content(a), content(b));
    Dense  x         = primitive_part(a.dense());
    Dense  y         = primitive_part(b.dense());
    if (x.size() < y.size()) {
      std::swap(x, y);
    }
    while (!y.empty()) {
      Dense r = primitive_part(pseudo_remainder(x, y));
      x       = std::move(y);
      y       = std::move(r);
    }
    x = primitive_part(std::move(x));
    for (auto& c : x) {
      c *= g_content;
    }
    return normalize(LaurentPoly::from_coefficients(0, x));
  }

  ////////////////////////////////////////////////////////////////////////
  // Number theory helpers
  ////////////////////////////////////////////////////////////////////////

  long long euler_totient(long long n) {
    if (n < 1) {
      throw std::invalid_argument("euler_totient: n must be positive");
    }
    long long result = n;
    for (long long p = 2; p * p <= n; ++p) {
      if (n % p == 0) {
        while (n % p == 0) {
          n /= p;
        }
        result -= result / p;
      }
    }
    if (n > 1) {
      result -= result / n;
    }
    return result;
  }

  bool is_prime(long long n) {
    if (n < 2) {
      return false;
    }
    for (long long p = 2; p * p <= n; ++p) {
      if (n % p == 0) {
        return false;
      }
    }
    return true;
  }

  std::optional<long long> smallest_prime_factor(BigInt const& n) {
    BigInt m = abs(n);
    if (m < 2) {
      return std::nullopt;
    }
    for (long long p = 2; BigInt(p) * p <= m; ++p) {
      if (m % p == 0) {
        return p;
      }
    }
    if (m > std::numeric_limits<long long>::max()) {
      throw std::overflow_error("smallest_prime_factor: prime beyond 64 bits");
    }
    return static_cast<long long>(m);
  }

  ////////////////////////////////////////////////////////////////////////
  // Cyclotomic polynomials
  ////////////////////////////////////////////////////////////////////////

  NormalizedPoly cyclotomic(int d) {
    if (d < 1) {
      throw std::invalid_argument("cyclotomic: d must be >= 1");
    }
    std::map<int, LaurentPoly> memo;
    return normalize(cyclotomic_memo(d, memo));
  }

  std::set<int> cyclotomic_factors(LaurentPoly const& p) {
    if (p.is_zero()) {
      throw std::invalid_argument("cyclotomic_factors: zero polynomial");
    }
    std::set<int> result;
    long long const deg = p.span();
    // φ(d) >= sqrt(d/2), so only d <= 2 deg^2 can have φ(d) <= deg.
    std::map<int, LaurentPoly> memo;
    for (long long d = 1; d <= 2 * deg * deg; ++d) {
      if (euler_totient(d) > deg) {
        continue;
      }
      if (divides(cyclotomic_memo(static_cast<int>(d), memo), p)) {
        result.insert(static_cast<int>(d));
      }
    }
    return result;
  }

  PolyModP reduce_mod_p(LaurentPoly const& poly, long long p) {
    if (!is_prime(p)) {
      throw std::invalid_argument("reduce_mod_p: " + std::to_string(p)
                                  + " is not prime");
    }
    PolyModP out;
    out.prime = p;
    for (auto const& [e, c] : poly.terms()) {
      BigInt r = c % p;
      if (r < 0) {
        r += p;
      }
      out.residues.add_term(r, e);
    }
    return out;
  }

  std::string to_string(LaurentPoly const& p) {
    if (p.is_zero()) {
      return "0";
    }
    std::string out;
    bool        first = true;
    for (auto const& [e, c] : p.terms()) {
      bool   negative = c < 0;
      BigInt mag      = abs(c);
      if (first) {
        out += negative ? "-" : "";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      std::string mono;
      if (e != 0) {
        mono = e == 1 ? "t" : "t^" + std::to_string(e);
      }
      if (mono.empty()) {
        out += mag.str();
      } else if (mag == 1) {
        out += mono;
      } else {
        out += mag.str() + "*" + mono;
      }
    }
    return out;
  }

}  // namespace surfsub
