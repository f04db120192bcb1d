#pragma once

#include "qh/laurent.hpp"

namespace qh {

/// Rational function in u over Q, kept in canonical form:
///   num: Laurent polynomial (may carry negative powers of u),
///   den: ordinary polynomial, nonzero constant term, integer coprime
///        coefficients, positive leading coefficient,
///   gcd(num with u-powers stripped, den) = 1.
/// Zero is num = 0, den = 1. Canonical form makes equality structural.
class RatFun {
 public:
  RatFun() : den_(Rational(1)) {}
  RatFun(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  RatFun(long n) : RatFun(Rational(n)) {}                    // NOLINT
  RatFun(const LaurentPoly& p) : num_(p), den_(Rational(1)) {}  // NOLINT
  RatFun(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool den_is_one() const { return den_.is_one(); }

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }

  RatFun inverse() const;
  friend RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  /// Exact evaluation; throws EvaluationPole at zeros of the denominator
  /// (and at u=0 when negative powers are present).
  Rational eval(const Rational& u0) const;

  /// Limit data at u=1. pole_order > 0 means the value diverges like
  /// (u-1)^{-pole_order}; otherwise value holds the exact limit and
  /// vanish_order the multiplicity of u=1 in the numerator.
  struct LimitAtOne {
    bool finite = true;
    Rational value;
    int pole_order = 0;
    int vanish_order = 0;
  };
  LimitAtOne limit_at_one() const;

  /// Net order of vanishing at u=1 (negative = pole). Zero input is an error.
  int order_at_one() const;

 private:
  struct already_canonical {};
  RatFun(LaurentPoly num, LaurentPoly den, already_canonical)
      : num_(std::move(num)), den_(std::move(den)) {}

  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace qh
