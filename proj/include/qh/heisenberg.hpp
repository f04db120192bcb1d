#pragma once

#include "qh/h_realization.hpp"
#include "qh/matrix.hpp"

namespace qh {

/// Operator on polynomials of degree <= N, stored on the coefficient basis
/// 1, x, ..., x^N. Multiplication by x is the weight-1 lower shift; d/dx is
/// the degree-weighted upper shift. Truncation makes the top degrees
/// unfaithful, so algebra checks restrict to a window of low degrees.
struct PolyOp {
  int N = 0;
  LimitMatrix matrix;  // (N+1) x (N+1)
};

PolyOp a_plus(int N);   // multiplication by x
PolyOp a_minus(int N);  // differentiation

struct HeisPair {
  PolyOp plus, minus;
};

/// One-parameter canonical transform of (a+, a-):
///   a+ -> (1/h) ln(h a+ + sqrt(1 + h^2 a+^2)),   a- -> sqrt(1 + h^2 a+^2) a-.
/// The odd arcsinh series makes the transformed a+ itself a polynomial in h
/// (term k carries h^{k-1}).
HeisPair heis_hat(int N);

/// The companion transform:
///   a+ -> (2/h) arctanh(h a+ / 2),   a- -> S a- S with S = sqrt(1 - h^2 a+^2 / 4).
HeisPair heis_tilde(int N);

/// Compares [a-, a+] with the identity on rows and columns of degree
/// <= window. Truncation corrupts only the top degrees; window should stay
/// at least a couple of degrees below N (the verification suite uses N - 3).
RelationCheck heis_commutator_check(const HeisPair& p, int window);

}  // namespace qh
