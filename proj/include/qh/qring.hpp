#pragma once

#include "qh/scalar.hpp"

namespace qh {

/// Root-of-q bookkeeping: q = u^L. The default L = 6 accommodates every
/// fractional power the engine needs (q^{1/2} = u^3, q^{1/3} = u^2).
/// L only matters when q-powers are constructed; arithmetic and limits are
/// agnostic to it.
struct RingConfig {
  int L = 6;
};

/// q^alpha as a Laurent monomial u^{L*alpha}; alpha*L must be an integer.
LaurentPoly q_pow_poly(const RingConfig& cfg, const Rational& alpha);
Scalar q_pow(const RingConfig& cfg, const Rational& alpha);

/// Symmetric q-integer [n] = (q^n - q^{-n})/(q - q^{-1}), expanded as the
/// Laurent polynomial q^{n-1} + q^{n-3} + ... + q^{1-n}; [-n] = -[n].
Scalar q_int(const RingConfig& cfg, long n);
LaurentPoly q_int_poly(const RingConfig& cfg, long n);

/// [n]! = [n][n-1]...[1]; n must be nonnegative.
Scalar q_fact(const RingConfig& cfg, long n);
RatFun q_fact_ratfun(const RingConfig& cfg, long n);

/// q - 1 (the singular unit of the contraction) and eta = h/(q-1).
Scalar q_minus_one(const RingConfig& cfg);
Scalar eta(const RingConfig& cfg);

}  // namespace qh
