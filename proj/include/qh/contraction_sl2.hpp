#pragma once

#include "qh/series.hpp"
#include "qh/sl2.hpp"

namespace qh {

/// q-exponential E_q(scale * X) = sum_n (scale X)^n / [n]!, exact on
/// nilpotent X. truncation defaults to the nilpotency degree; asking for
/// less is an error since the sum would silently drop nonzero terms.
ExactMatrix qexp(const RingConfig& cfg, const ExactMatrix& X, const Scalar& scale,
                 int truncation = -1);

/// T_(alpha) = E_q(eta J+)^{-1} E_q(q^alpha eta J+) in the given irrep.
ExactMatrix t_alpha_q(const Sl2RepQ& rep, const Rational& alpha);

/// Standard 2x2-block R-matrix for (spin 1/2) x (spin j):
///   [[q^{J0/2}, q^{1/2}(1-q^{-2}) J-], [0, q^{-J0/2}]].
ExactMatrix build_rq_sl2(const Sl2RepQ& rep);

/// Contraction transform G = E_q(eta J+)|_{1/2} kron E_q(eta J+)|_j.
ExactMatrix build_g_sl2(const Sl2RepQ& rep);

/// G^{-1} R_q G followed by the exact q -> 1 limit for spin (1/2, j).
ContractionReport contract_sl2(const RingConfig& cfg, const Rational& j);

/// Coefficients c_n of the q -> 1 limit of T_(+-1) = sum_n c_n (eta J+)^n ...
/// computed at series level: the n-th coefficient of
/// E_q(z)^{-1} E_q(q^{+-1} z) divided by (q-1)^n, with z replaced by h J+.
/// sign must be +1 or -1. Every coefficient must come out finite.
std::vector<Rational> c_coefficients(const RingConfig& cfg, int order, int sign);

}  // namespace qh
