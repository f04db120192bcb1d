#pragma once

#include <vector>

#include "qh/ratfun.hpp"

namespace qh {

/// Truncated power series over a commutative coefficient ring T, exact to
/// the stated order (inclusive). Used both for the q-exponential coefficient
/// pipeline (T = RatFun) and for rational series oracles (T = Rational).
template <class T>
class TruncSeries {
 public:
  explicit TruncSeries(int order) : c_(order + 1, T(0)) {}
  TruncSeries(std::vector<T> coeffs, int order) : c_(std::move(coeffs)) {
    c_.resize(order + 1, T(0));
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const T& operator[](int k) const { return c_[k]; }
  T& operator[](int k) { return c_[k]; }

  TruncSeries operator+(const TruncSeries& o) const {
    TruncSeries r(order());
    for (int k = 0; k <= order(); ++k) r.c_[k] = c_[k] + o.c_[k];
    return r;
  }

  TruncSeries operator*(const TruncSeries& o) const {
    TruncSeries r(order());
    for (int i = 0; i <= order(); ++i) {
      if (c_[i] == T(0)) continue;
      for (int k = 0; i + k <= order(); ++k) r.c_[i + k] += c_[i] * o.c_[k];
    }
    return r;
  }

  /// Multiplicative inverse; the constant term must be invertible in T.
  TruncSeries inverse() const {
    TruncSeries r(order());
    T c0inv = T(1) / c_[0];
    r.c_[0] = c0inv;
    for (int n = 1; n <= order(); ++n) {
      T acc = T(0);
      for (int k = 1; k <= n; ++k) acc += c_[k] * r.c_[n - k];
      r.c_[n] = -(acc * c0inv);
    }
    return r;
  }

  /// Substitute z -> c*z (coefficient n picks up c^n).
  TruncSeries scale_arg(const T& c) const {
    TruncSeries r(order());
    T p = T(1);
    for (int n = 0; n <= order(); ++n) {
      r.c_[n] = c_[n] * p;
      p = p * c;
    }
    return r;
  }

  /// Composition (this o f); f must have zero constant term.
  TruncSeries compose(const TruncSeries& f) const;

 private:
  std::vector<T> c_;
};

template <class T>
TruncSeries<T> TruncSeries<T>::compose(const TruncSeries<T>& f) const {
  if (!(f[0] == T(0))) throw InvalidArgument("composition needs a zero constant term");
  TruncSeries r(order());
  // Horner from the top coefficient down.
  for (int k = order(); k >= 0; --k) {
    r = r * f;
    r[0] += c_[k];
  }
  return r;
}

/// Taylor coefficient tables through the given order (inclusive).
std::vector<Rational> exp_series(int order);          // e^z
std::vector<Rational> ln1p_series(int order);         // ln(1+z)
std::vector<Rational> binomial_series(const Rational& a, int order);  // (1+z)^a
std::vector<Rational> sqrt1p_series(int order);       // (1+z)^{1/2}
std::vector<Rational> arcsinh_series(int order);
std::vector<Rational> arctanh_series(int order);
std::vector<Rational> sinh_series(int order);
std::vector<Rational> cosh_series(int order);
std::vector<Rational> tanh_series(int order);

}  // namespace qh
