#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "qh/errors.hpp"

namespace qh {

using Integer = mpz_class;

/// Exact arbitrary-precision rational. Always stored reduced with a positive
/// denominator (gcd(num,den) = 1, den >= 1); all arithmetic preserves that.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}          // NOLINT: implicit by design
  Rational(long n) : v_(n) {}         // NOLINT
  Rational(const Integer& n) : v_(n) {}  // NOLINT
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}
  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw InvalidArgument("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  static Rational parse(const std::string& s);

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw NotInvertible("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational inverse() const {
    if (is_zero()) throw NotInvertible("inverse of zero");
    return Rational(mpq_class(1 / v_));
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  /// Integer exponent power; negative exponents require a nonzero base.
  Rational pow(long e) const {
    if (e == 0) return Rational(1);
    Rational base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? -(unsigned long)e : (unsigned long)e;
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.v_.get_num_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), base.v_.get_den_mpz_t(), k);
    Rational r;
    r.v_ = mpq_class(n, d);  // num/den already coprime, powers stay coprime
    return r;
  }

  std::string str() const { return v_.get_str(); }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

inline Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational");
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    return j;
  };
  if (s[i] == '+' || s[i] == '-') ++i;
  std::size_t end_num = digits(i);
  if (end_num == i) throw ParseError("bad rational: " + s);
  if (end_num == s.size()) return Rational(Integer(s), Integer(1));
  if (s[end_num] != '/') throw ParseError("bad rational: " + s);
  std::size_t den_start = end_num + 1;
  if (digits(den_start) != s.size() || den_start == s.size())
    throw ParseError("bad rational: " + s);
  return Rational(Integer(s.substr(0, end_num)), Integer(s.substr(den_start)));
}

inline Integer gcd_int(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm_int(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace qh
