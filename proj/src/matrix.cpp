#include "qh/matrix.hpp"

#include <climits>

namespace qh {

ExactMatrix to_exact(const LimitMatrix& M) {
  ExactMatrix R(M.rows(), M.cols());
  for (Eigen::Index j = 0; j < M.cols(); ++j)
    for (Eigen::Index i = 0; i < M.rows(); ++i) R(i, j) = Scalar::from_hpoly(M(i, j));
  return R;
}

bool ContractionReport::deformation_free() const {
  if (!limit) return false;
  for (Eigen::Index j = 0; j < limit->cols(); ++j)
    for (Eigen::Index i = 0; i < limit->rows(); ++i)
      if (limit->coeff(i, j).degree() > 0) return false;
  return true;
}

ContractionReport limit_mat(const ExactMatrix& A, std::string source) {
  ContractionReport rep;
  rep.source = std::move(source);
  rep.cancellation = Eigen::MatrixXi::Zero(A.rows(), A.cols());
  LimitMatrix L(A.rows(), A.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j) {
      ScalarLimit lim = limit_q1(A(i, j));
      rep.cancellation(i, j) = lim.cancellation_order;
      if (lim.finite()) {
        L(i, j) = *lim.value;
      } else {
        for (const auto& d : lim.divergences)
          rep.divergences.push_back({static_cast<int>(i), static_cast<int>(j),
                                     d.h_power, d.pole_order});
      }
    }
  if (rep.divergences.empty()) rep.limit = std::move(L);
  return rep;
}

ContractionReport contract(const ExactMatrix& Rq, const ExactMatrix& G,
                           std::string source) {
  if (Rq.rows() != Rq.cols() || G.rows() != G.cols() || Rq.rows() != G.rows())
    throw ShapeError("contract needs square matrices of equal size");
  ExactMatrix Ginv = inv_unipotent(G);
  ExactMatrix RG = Rq * G;
  ExactMatrix P = Ginv * RG;
  ContractionReport rep = limit_mat(P, std::move(source));

  // Diagnostics: how singular were the intermediate products that the final
  // sum had to cancel. order_at_one is additive on products, so no extra
  // polynomial arithmetic is needed.
  const int big = INT_MAX / 4;
  std::vector<int> ord_left(Ginv.rows() * Ginv.cols());
  std::vector<int> ord_right(RG.rows() * RG.cols());
  for (Eigen::Index i = 0; i < Ginv.rows(); ++i)
    for (Eigen::Index m = 0; m < Ginv.cols(); ++m)
      ord_left[i * Ginv.cols() + m] = order_at_one(Ginv(i, m));
  for (Eigen::Index m = 0; m < RG.rows(); ++m)
    for (Eigen::Index j = 0; j < RG.cols(); ++j)
      ord_right[m * RG.cols() + j] = order_at_one(RG(m, j));
  for (Eigen::Index i = 0; i < P.rows(); ++i)
    for (Eigen::Index j = 0; j < P.cols(); ++j) {
      int worst = big;
      for (Eigen::Index m = 0; m < Ginv.cols(); ++m) {
        int a = ord_left[i * Ginv.cols() + m];
        int b = ord_right[m * RG.cols() + j];
        if (a >= big || b >= big) continue;  // zero factor, term absent
        worst = std::min(worst, a + b);
      }
      if (worst >= big) continue;  // entry had no nonzero contributions
      int residual_pole = 0;
      if (!P(i, j).is_zero()) {
        int net = order_at_one(P(i, j));
        residual_pole = net < 0 ? -net : 0;
      }
      int cancelled = -worst - residual_pole;
      rep.cancellation(i, j) = cancelled > 0 ? cancelled : 0;
    }
  return rep;
}

}  // namespace qh
