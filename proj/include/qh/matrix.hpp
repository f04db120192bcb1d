#pragma once

#include <Eigen/Core>

#include <optional>
#include <string>
#include <vector>

#include "qh/scalar.hpp"

// Adapt the exact scalar rings to Eigen, mirroring Eigen's documented recipe
// for custom types (cf. its mpq_class adaptation): no vectorization, explicit
// initialization, cost constants only used for evaluator heuristics.
namespace Eigen {

template <>
struct NumTraits<qh::Scalar> : GenericNumTraits<qh::Scalar> {
  typedef qh::Scalar Real;
  typedef qh::Scalar NonInteger;
  typedef qh::Scalar Nested;
  typedef qh::Scalar Literal;
  static inline Real epsilon() { return qh::Scalar(0); }
  static inline Real dummy_precision() { return qh::Scalar(0); }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 200,
    MulCost = 400,
  };
};

template <>
struct NumTraits<qh::HPoly> : GenericNumTraits<qh::HPoly> {
  typedef qh::HPoly Real;
  typedef qh::HPoly NonInteger;
  typedef qh::HPoly Nested;
  typedef qh::HPoly Literal;
  static inline Real epsilon() { return qh::HPoly(0); }
  static inline Real dummy_precision() { return qh::HPoly(0); }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 40,
    MulCost = 80,
  };
};

}  // namespace Eigen

namespace qh {

using ExactMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using LimitMatrix = Eigen::Matrix<HPoly, Eigen::Dynamic, Eigen::Dynamic>;

template <class S>
using DenseMat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

template <class S>
bool is_zero_mat(const DenseMat<S>& A) {
  for (Eigen::Index j = 0; j < A.cols(); ++j)
    for (Eigen::Index i = 0; i < A.rows(); ++i)
      if (!A(i, j).is_zero()) return false;
  return true;
}

template <class S>
bool mat_eq(const DenseMat<S>& A, const DenseMat<S>& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) return false;
  for (Eigen::Index j = 0; j < A.cols(); ++j)
    for (Eigen::Index i = 0; i < A.rows(); ++i)
      if (A(i, j) != B(i, j)) return false;
  return true;
}

template <class S>
DenseMat<S> identity_mat(Eigen::Index n) {
  DenseMat<S> I(n, n);
  I.setZero();
  for (Eigen::Index i = 0; i < n; ++i) I(i, i) = S(1);
  return I;
}

template <class S>
DenseMat<S> zero_mat(Eigen::Index r, Eigen::Index c) {
  DenseMat<S> Z(r, c);
  Z.setZero();
  return Z;
}

/// Kronecker product; the FIRST factor indexes the outer blocks, i.e.
/// (A kron B)[(i,k),(j,l)] = A(i,j) B(k,l) with row index i*rows(B)+k.
template <class S>
DenseMat<S> kron(const DenseMat<S>& A, const DenseMat<S>& B) {
  DenseMat<S> R = zero_mat<S>(A.rows() * B.rows(), A.cols() * B.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j) {
      if (A(i, j).is_zero()) continue;
      for (Eigen::Index k = 0; k < B.rows(); ++k)
        for (Eigen::Index l = 0; l < B.cols(); ++l) {
          if (B(k, l).is_zero()) continue;
          R(i * B.rows() + k, j * B.cols() + l) = A(i, j) * B(k, l);
        }
    }
  return R;
}

template <class S>
DenseMat<S> commutator(const DenseMat<S>& A, const DenseMat<S>& B) {
  if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows())
    throw ShapeError("commutator needs square matrices of equal size");
  return A * B - B * A;
}

/// Least d >= 1 with N^d = 0, found by repeated squaring capped at the
/// dimension, then bisected using the cached binary powers. nullopt when the
/// matrix is not nilpotent.
template <class S>
std::optional<int> nilpotency_index(const DenseMat<S>& N) {
  if (N.rows() != N.cols()) throw ShapeError("nilpotency_index needs a square matrix");
  if (is_zero_mat(N)) return 1;
  const long n = N.rows();
  std::vector<DenseMat<S>> pows;  // pows[t] = N^(2^t)
  pows.push_back(N);
  long k = 1;
  while (k < n && !is_zero_mat(pows.back())) {
    pows.push_back(pows.back() * pows.back());
    k *= 2;
  }
  if (!is_zero_mat(pows.back())) return std::nullopt;
  auto power_is_zero = [&](long m) {
    DenseMat<S> acc;
    bool has = false;
    for (std::size_t t = 0; t < pows.size(); ++t) {
      if (!((m >> t) & 1)) continue;
      acc = has ? DenseMat<S>(acc * pows[t]) : pows[t];
      has = true;
      if (is_zero_mat(acc)) return true;
    }
    return is_zero_mat(acc);
  };
  long lo = k / 2 + 1, hi = k;
  while (lo < hi) {
    long mid = lo + (hi - lo) / 2;
    if (power_is_zero(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  return static_cast<int>(lo);
}

/// Inverse of I + nilpotent via the terminating Neumann series; the result
/// satisfies A * inv == I exactly.
template <class S>
DenseMat<S> inv_unipotent(const DenseMat<S>& A) {
  if (A.rows() != A.cols()) throw ShapeError("inv_unipotent needs a square matrix");
  DenseMat<S> N = A - identity_mat<S>(A.rows());
  auto idx = nilpotency_index(N);
  if (!idx) throw NotUnipotent("matrix is not unipotent");
  DenseMat<S> inv = identity_mat<S>(A.rows());
  DenseMat<S> P = identity_mat<S>(A.rows());
  for (int m = 1; m < *idx; ++m) {
    P = P * N;
    if (m % 2)
      inv -= P;
    else
      inv += P;
  }
  return inv;
}

/// Evaluate a power series with Rational coefficients on a nilpotent matrix.
/// The series must be supplied at least through order d-1 where d is the
/// nilpotency index, so the evaluation is exact, not truncated.
template <class S>
DenseMat<S> series_apply(const std::vector<Rational>& coeffs, const DenseMat<S>& N) {
  if (N.rows() != N.cols()) throw ShapeError("series_apply needs a square matrix");
  auto idx = nilpotency_index(N);
  if (!idx) throw NotNilpotent("series argument is not nilpotent");
  if (static_cast<int>(coeffs.size()) < *idx)
    throw InvalidArgument("series coefficients truncated below the nilpotency degree");
  DenseMat<S> acc = zero_mat<S>(N.rows(), N.cols());
  for (Eigen::Index i = 0; i < N.rows(); ++i) acc(i, i) = S(coeffs[0]);
  DenseMat<S> P = identity_mat<S>(N.rows());
  for (int m = 1; m < *idx; ++m) {
    P = P * N;
    if (coeffs[m].is_zero()) continue;
    acc += S(coeffs[m]) * P;
  }
  return acc;
}

/// Uniform block assembly: grid of equal d x d blocks.
template <class S>
DenseMat<S> from_blocks(const std::vector<std::vector<DenseMat<S>>>& grid) {
  if (grid.empty() || grid[0].empty()) throw ShapeError("empty block grid");
  const Eigen::Index d = grid[0][0].rows();
  const std::size_t cols = grid[0].size();
  for (const auto& row : grid) {
    if (row.size() != cols) throw ShapeError("ragged block grid");
    for (const auto& blk : row)
      if (blk.rows() != d || blk.cols() != d) throw ShapeError("non-uniform block size");
  }
  DenseMat<S> R(static_cast<Eigen::Index>(grid.size()) * d,
                static_cast<Eigen::Index>(cols) * d);
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      R.block(static_cast<Eigen::Index>(i) * d, static_cast<Eigen::Index>(j) * d, d, d) =
          grid[i][j];
  return R;
}

template <class S>
DenseMat<S> diag_mat(const std::vector<S>& entries) {
  DenseMat<S> D = zero_mat<S>(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) D(i, i) = entries[i];
  return D;
}

/// Entrywise embedding of a limit matrix back into the working ring.
ExactMatrix to_exact(const LimitMatrix& M);

/// One diverging matrix entry of a q -> 1 limit.
struct MatrixDivergence {
  int row = 0;
  int col = 0;
  int h_power = 0;
  int pole_order = 0;
};

/// Entrywise q -> 1 limit of a matrix, with divergences reported as data.
/// limit is present iff divergences is empty. cancellation(i,j) records, for
/// contractions, the worst (u-1) pole order among the intermediate products
/// feeding entry (i,j) that had to cancel to leave the recorded value; plain
/// limits of already-assembled matrices have nothing left to cancel and get 0.
struct ContractionReport {
  std::string source;
  std::optional<LimitMatrix> limit;
  Eigen::MatrixXi cancellation;
  std::vector<MatrixDivergence> divergences;
  bool finite() const { return divergences.empty(); }
  /// True when the limit exists and no entry carries a positive power of h.
  bool deformation_free() const;
};

ContractionReport limit_mat(const ExactMatrix& A, std::string source = "");

/// Similarity transform followed by the exact q -> 1 limit:
/// limit of G^{-1} * Rq * G, with per-entry cancellation diagnostics.
/// G must be unipotent (its Neumann inverse is exact).
ContractionReport contract(const ExactMatrix& Rq, const ExactMatrix& G,
                           std::string source = "");

}  // namespace qh
