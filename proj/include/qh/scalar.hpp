#pragma once

#include <optional>
#include <vector>

#include "qh/ratfun.hpp"

namespace qh {

/// Polynomial in the deformation parameter h with Rational coefficients.
/// This is the target ring of the q -> 1 limit.
class HPoly {
 public:
  HPoly() = default;
  HPoly(const Rational& c) {  // NOLINT
    if (!c.is_zero()) c_.push_back(c);
  }
  HPoly(long n) : HPoly(Rational(n)) {}  // NOLINT
  explicit HPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static HPoly h(int power = 1, const Rational& c = Rational(1));

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  Rational coeff(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rational(0);
  }
  const std::vector<Rational>& coeffs() const { return c_; }

  HPoly operator-() const;
  HPoly& operator+=(const HPoly& o);
  HPoly& operator-=(const HPoly& o);
  friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
  friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
  friend HPoly operator*(const HPoly& a, const HPoly& b);
  HPoly& operator*=(const HPoly& o) { return *this = *this * o; }

  friend bool operator==(const HPoly& a, const HPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const HPoly& a, const HPoly& b) { return !(a == b); }

  HPoly scaled(const Rational& c) const;
  /// Exact division by h; requires a vanishing constant term.
  HPoly div_h() const;

  Rational eval(const Rational& h0) const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;  // c_[k] multiplies h^k; trailing zeros trimmed
};

/// Element of the working ring: polynomial in h whose coefficients are
/// rational functions of u (with q = u^L fixed by the surrounding context).
/// h never appears in denominators by construction.
class Scalar {
 public:
  Scalar() = default;
  Scalar(const RatFun& c) {  // NOLINT
    if (!c.is_zero()) c_.push_back(c);
  }
  Scalar(const Rational& c) : Scalar(RatFun(c)) {}          // NOLINT
  Scalar(const LaurentPoly& p) : Scalar(RatFun(p)) {}       // NOLINT
  Scalar(long n) : Scalar(RatFun(Rational(n))) {}           // NOLINT
  Scalar(int n) : Scalar(RatFun(Rational(n))) {}            // NOLINT
  explicit Scalar(std::vector<RatFun> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Scalar h(int power = 1, const RatFun& c = RatFun(Rational(1)));
  static Scalar from_hpoly(const HPoly& p);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  int h_degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const RatFun& coeff(int k) const;
  const std::vector<RatFun>& coeffs() const { return c_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Multiplicative inverse. Only h-degree-zero nonzero elements are units of
  /// this ring; anything else throws NotInvertible.
  Scalar inverse() const;
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  /// Exact evaluation at u = u0, h = h0.
  Rational eval_numeric(const Rational& u0, const Rational& h0) const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<RatFun> c_;
};

/// One diverging h-coefficient of a q -> 1 limit.
struct DivergenceInfo {
  int h_power = 0;
  int pole_order = 0;
};

/// Result of the q -> 1 limit of a Scalar. Divergence is data, not an
/// exception: value is present iff divergences is empty. cancellation_order
/// counts the (u-1) factors removed from num and den together before
/// evaluating; canonical inputs arrive fully reduced, so it is 0 and the
/// interesting diagnostics live in the matrix-level reports.
struct ScalarLimit {
  std::optional<HPoly> value;
  int cancellation_order = 0;
  std::vector<DivergenceInfo> divergences;
  bool finite() const { return divergences.empty(); }
};

ScalarLimit limit_q1(const Scalar& s);

/// Net order of vanishing at u=1 across h-coefficients (negative = pole);
/// used to diagnose how singular intermediate quantities were. Zero scalars
/// count as +infinity (they cannot spoil a limit).
int order_at_one(const Scalar& s);

}  // namespace qh
