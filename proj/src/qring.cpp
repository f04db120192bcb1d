#include "qh/qring.hpp"

namespace qh {

LaurentPoly q_pow_poly(const RingConfig& cfg, const Rational& alpha) {
  Rational e = alpha * Rational(cfg.L);
  if (!e.is_integer())
    throw InvalidArgument("q^(" + alpha.str() + ") is not a u-monomial at L=" +
                          std::to_string(cfg.L));
  if (!e.num().fits_sint_p()) throw InvalidArgument("q-power exponent overflow");
  return LaurentPoly::u(static_cast<int>(e.num().get_si()));
}

Scalar q_pow(const RingConfig& cfg, const Rational& alpha) {
  return Scalar(q_pow_poly(cfg, alpha));
}

LaurentPoly q_int_poly(const RingConfig& cfg, long n) {
  if (n == 0) return LaurentPoly();
  long m = n < 0 ? -n : n;
  LaurentPoly p;
  for (long i = 0; i < m; ++i)
    p.set_coeff(static_cast<int>(cfg.L * (m - 1 - 2 * i)), Rational(1));
  return n < 0 ? -p : p;
}

Scalar q_int(const RingConfig& cfg, long n) { return Scalar(q_int_poly(cfg, n)); }

RatFun q_fact_ratfun(const RingConfig& cfg, long n) {
  if (n < 0) throw InvalidArgument("q-factorial of negative integer");
  LaurentPoly p(Rational(1));
  for (long k = 2; k <= n; ++k) p *= q_int_poly(cfg, k);
  return RatFun(p);
}

Scalar q_fact(const RingConfig& cfg, long n) { return Scalar(q_fact_ratfun(cfg, n)); }

Scalar q_minus_one(const RingConfig& cfg) {
  return Scalar(q_pow_poly(cfg, Rational(1)) - LaurentPoly(Rational(1)));
}

Scalar eta(const RingConfig& cfg) {
  LaurentPoly qm1 = q_pow_poly(cfg, Rational(1)) - LaurentPoly(Rational(1));
  return Scalar::h(1, RatFun(LaurentPoly(Rational(1)), qm1));
}

}  // namespace qh
