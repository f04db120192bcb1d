#include "qh/contraction_sl2.hpp"

namespace qh {

ExactMatrix qexp(const RingConfig& cfg, const ExactMatrix& X, const Scalar& scale,
                 int truncation) {
  if (X.rows() != X.cols()) throw ShapeError("qexp needs a square matrix");
  auto idx = nilpotency_index(X);
  if (!idx) throw NotNilpotent("q-exponential argument is not nilpotent");
  if (truncation < 0) truncation = *idx - 1;
  if (truncation < *idx - 1)
    throw InvalidArgument("q-exponential truncated below the nilpotency degree");
  ExactMatrix acc = identity_mat<Scalar>(X.rows());
  ExactMatrix P = identity_mat<Scalar>(X.rows());
  Scalar spow(1);
  for (int n = 1; n < *idx; ++n) {
    P = P * X;
    spow *= scale;
    acc += Scalar(spow * q_fact(cfg, n).inverse()) * P;
  }
  return acc;
}

ExactMatrix t_alpha_q(const Sl2RepQ& rep, const Rational& alpha) {
  Scalar e = eta(rep.ring);
  ExactMatrix g = qexp(rep.ring, rep.Jp, e);
  ExactMatrix galpha = qexp(rep.ring, rep.Jp, Scalar(q_pow(rep.ring, alpha) * e));
  return inv_unipotent(g) * galpha;
}

ExactMatrix build_rq_sl2(const Sl2RepQ& rep) {
  const RingConfig& cfg = rep.ring;
  Scalar lam = q_pow(cfg, Rational(1, 2)) * (Scalar(1) - q_pow(cfg, -2));
  std::vector<std::vector<ExactMatrix>> grid(2);
  grid[0] = {rep.kpow(Rational(1, 2)), ExactMatrix(lam * rep.Jm)};
  grid[1] = {zero_mat<Scalar>(rep.dim, rep.dim), rep.kpow(Rational(-1, 2))};
  return from_blocks(grid);
}

ExactMatrix build_g_sl2(const Sl2RepQ& rep) {
  Scalar e = eta(rep.ring);
  Sl2RepQ fund = sl2_q_irrep(rep.ring, Rational(1, 2));
  ExactMatrix gf = qexp(rep.ring, fund.Jp, e);
  ExactMatrix gr = qexp(rep.ring, rep.Jp, e);
  return kron(gf, gr);
}

ContractionReport contract_sl2(const RingConfig& cfg, const Rational& j) {
  Sl2RepQ rep = sl2_q_irrep(cfg, j);
  return contract(build_rq_sl2(rep), build_g_sl2(rep),
                  "sl2 (1/2 x " + j.str() + ") contraction");
}

std::vector<Rational> c_coefficients(const RingConfig& cfg, int order, int sign) {
  if (order < 0) throw InvalidArgument("negative series order");
  if (sign != 1 && sign != -1) throw InvalidArgument("sign must be +1 or -1");
  TruncSeries<RatFun> E(order);
  for (int n = 0; n <= order; ++n) E[n] = q_fact_ratfun(cfg, n).inverse();
  TruncSeries<RatFun> prod =
      E.inverse() * E.scale_arg(RatFun(q_pow_poly(cfg, Rational(sign))));
  LaurentPoly qm1 = q_pow_poly(cfg, 1) - LaurentPoly(Rational(1));
  std::vector<Rational> out;
  out.reserve(order + 1);
  LaurentPoly qm1_pow(Rational(1));
  for (int n = 0; n <= order; ++n) {
    // c_n = lim_{q->1} (coefficient of z^n) / (q-1)^n; the h-grading is
    // restored by attaching h^n, which the limit carries along unchanged.
    Scalar term = Scalar::h(n, prod[n] * RatFun(LaurentPoly(Rational(1)), qm1_pow));
    ScalarLimit lim = limit_q1(term);
    if (!lim.finite())
      throw Error("q-exponential ratio coefficient diverges at order " +
                  std::to_string(n));
    HPoly value = *lim.value;
    for (int k = 0; k <= value.degree(); ++k)
      if (k != n && !value.coeff(k).is_zero())
        throw Error("q-exponential ratio coefficient lost its h-grading");
    out.push_back(value.coeff(n));
    qm1_pow *= qm1;
  }
  return out;
}

}  // namespace qh
