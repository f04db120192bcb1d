#include "qh/series.hpp"

namespace qh {

std::vector<Rational> exp_series(int order) {
  std::vector<Rational> c(order + 1, Rational(0));
  c[0] = Rational(1);
  for (int k = 1; k <= order; ++k) c[k] = c[k - 1] / Rational(k);
  return c;
}

std::vector<Rational> ln1p_series(int order) {
  std::vector<Rational> c(order + 1, Rational(0));
  for (int k = 1; k <= order; ++k) c[k] = Rational(k % 2 ? 1 : -1, k);
  return c;
}

std::vector<Rational> binomial_series(const Rational& a, int order) {
  std::vector<Rational> c(order + 1, Rational(0));
  c[0] = Rational(1);
  for (int k = 1; k <= order; ++k)
    c[k] = c[k - 1] * (a - Rational(k - 1)) / Rational(k);
  return c;
}

std::vector<Rational> sqrt1p_series(int order) {
  return binomial_series(Rational(1, 2), order);
}

std::vector<Rational> arcsinh_series(int order) {
  std::vector<Rational> c(order + 1, Rational(0));
  if (order >= 1) c[1] = Rational(1);
  Rational a(1);
  for (int t = 1; 2 * t + 1 <= order; ++t) {
    a = -a * Rational((2 * t - 1) * (2 * t - 1), 2 * t * (2 * t + 1));
    c[2 * t + 1] = a;
  }
  return c;
}

std::vector<Rational> arctanh_series(int order) {
  std::vector<Rational> c(order + 1, Rational(0));
  for (int k = 1; k <= order; k += 2) c[k] = Rational(1, k);
  return c;
}

std::vector<Rational> sinh_series(int order) {
  std::vector<Rational> c = exp_series(order);
  for (int k = 0; k <= order; k += 2) c[k] = Rational(0);
  return c;
}

std::vector<Rational> cosh_series(int order) {
  std::vector<Rational> c = exp_series(order);
  for (int k = 1; k <= order; k += 2) c[k] = Rational(0);
  return c;
}

std::vector<Rational> tanh_series(int order) {
  TruncSeries<Rational> s(sinh_series(order), order);
  TruncSeries<Rational> c(cosh_series(order), order);
  TruncSeries<Rational> t = s * c.inverse();
  std::vector<Rational> out(order + 1, Rational(0));
  for (int k = 0; k <= order; ++k) out[k] = t[k];
  return out;
}

}  // namespace qh
