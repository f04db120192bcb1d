#include "qh/heisenberg.hpp"

#include <sstream>

#include "qh/errors.hpp"
#include "qh/series.hpp"

namespace qh {

namespace {

LimitMatrix div_h_entrywise(const LimitMatrix& A) {
  LimitMatrix R = A;
  for (Eigen::Index j = 0; j < R.cols(); ++j)
    for (Eigen::Index i = 0; i < R.rows(); ++i) R(i, j) = R(i, j).div_h();
  return R;
}

}  // namespace

PolyOp a_plus(int N) {
  if (N < 1) throw InvalidArgument("truncation degree must be at least 1");
  PolyOp op{N, zero_mat<HPoly>(N + 1, N + 1)};
  for (int k = 0; k < N; ++k) op.matrix(k + 1, k) = HPoly(1);
  return op;
}

PolyOp a_minus(int N) {
  if (N < 1) throw InvalidArgument("truncation degree must be at least 1");
  PolyOp op{N, zero_mat<HPoly>(N + 1, N + 1)};
  for (int k = 1; k <= N; ++k) op.matrix(k - 1, k) = HPoly(Rational(k));
  return op;
}

HeisPair heis_hat(int N) {
  if (N < 2) throw InvalidArgument("transformed pair needs degree at least 2");
  PolyOp ap = a_plus(N), am = a_minus(N);
  LimitMatrix hap = LimitMatrix(HPoly::h() * ap.matrix);

  HeisPair out;
  // arcsinh(h a+) has a vanishing constant term and only odd powers, so the
  // entrywise division by h is exact and leaves a genuine h-polynomial.
  out.plus = {N, div_h_entrywise(series_apply(arcsinh_series(N + 1), hap))};
  LimitMatrix root = series_apply(sqrt1p_series(N + 1), LimitMatrix(hap * hap));
  out.minus = {N, LimitMatrix(root * am.matrix)};
  return out;
}

HeisPair heis_tilde(int N) {
  if (N < 2) throw InvalidArgument("transformed pair needs degree at least 2");
  PolyOp ap = a_plus(N), am = a_minus(N);
  LimitMatrix half = LimitMatrix(HPoly::h(1, Rational(1, 2)) * ap.matrix);

  HeisPair out;
  LimitMatrix atanh = series_apply(arctanh_series(N + 1), half);
  out.plus = {N, div_h_entrywise(LimitMatrix(HPoly(2) * atanh))};
  LimitMatrix S =
      series_apply(sqrt1p_series(N + 1), LimitMatrix(-LimitMatrix(half * half)));
  out.minus = {N, LimitMatrix(S * am.matrix * S)};
  return out;
}

RelationCheck heis_commutator_check(const HeisPair& p, int window) {
  const int N = p.plus.N;
  if (window < 0 || window > N)
    throw InvalidArgument("check window must lie within the truncation degree");
  LimitMatrix comm = commutator(p.minus.matrix, p.plus.matrix);
  LimitMatrix sub = comm.topLeftCorner(window + 1, window + 1);

  RelationCheck c;
  std::ostringstream name;
  name << "[a-, a+] = 1 on degrees <= " << window << " (truncation N = " << N << ")";
  c.name = name.str();
  c.residual = LimitMatrix(sub - identity_mat<HPoly>(window + 1));
  c.pass = is_zero_mat(c.residual);
  return c;
}

}  // namespace qh
