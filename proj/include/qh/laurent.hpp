#pragma once

#include <map>
#include <vector>

#include "qh/rational.hpp"

namespace qh {

/// Sparse Laurent polynomial in one variable u with Rational coefficients,
/// stored as exponent -> nonzero coefficient. Exponents may be negative.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Rational& c) {  // NOLINT: implicit constant embedding
    if (!c.is_zero()) c_[0] = c;
  }
  LaurentPoly(long n) : LaurentPoly(Rational(n)) {}  // NOLINT

  static LaurentPoly monomial(const Rational& c, int e) {
    LaurentPoly p;
    if (!c.is_zero()) p.c_[e] = c;
    return p;
  }
  static LaurentPoly u(int e = 1) { return monomial(Rational(1), e); }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second.is_one(); }
  bool is_constant() const { return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0); }
  bool is_monomial() const { return c_.size() == 1; }

  /// Lowest/highest exponent present; only meaningful on nonzero polynomials.
  int min_exp() const;
  int max_exp() const;

  Rational coeff(int e) const {
    auto it = c_.find(e);
    return it == c_.end() ? Rational(0) : it->second;
  }
  const std::map<int, Rational>& terms() const { return c_; }
  std::size_t term_count() const { return c_.size(); }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly shifted(int e) const;          // multiply by u^e
  LaurentPoly scaled(const Rational& c) const;
  LaurentPoly pow(unsigned long e) const;

  /// Evaluate at a nonzero rational point (zero only if min_exp >= 0).
  Rational eval(const Rational& u0) const;
  Rational eval_at_one() const;

  void set_coeff(int e, const Rational& c) {
    if (c.is_zero())
      c_.erase(e);
    else
      c_[e] = c;
  }

 private:
  std::map<int, Rational> c_;
};

/// Dense coefficient view of an ordinary polynomial (min_exp >= 0),
/// index = exponent, trailing zeros trimmed. Zero polynomial -> empty vector.
std::vector<Rational> dense_coeffs(const LaurentPoly& p);
LaurentPoly from_dense(const std::vector<Rational>& c);

/// Multiplicity of the root u=1. Zero polynomial is rejected.
int multiplicity_at_one(const LaurentPoly& p);

/// Exact division; throws Error if b does not divide a exactly.
LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Gcd of two ordinary polynomials (nonnegative exponents), returned as an
/// integer-primitive polynomial with positive leading coefficient. gcd with
/// zero returns the normalized other argument; two zeros return zero.
LaurentPoly gcd_poly(const LaurentPoly& a, const LaurentPoly& b);

/// Rewrite p = c * P where P has integer coprime coefficients and positive
/// leading coefficient; returns {c, P}. p must be nonzero.
std::pair<Rational, LaurentPoly> primitive_normalize(const LaurentPoly& p);

}  // namespace qh
