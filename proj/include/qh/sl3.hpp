#pragma once

#include <array>
#include <string>

#include "qh/h_realization.hpp"
#include "qh/matrix.hpp"
#include "qh/qring.hpp"

namespace qh {

/// q-deformed sl3 acting on the symmetric representation (n,0), realized on
/// the monomial basis x1^a x2^b x3^c with a+b+c = n, ordered by a descending
/// then b descending (so raising operators are strictly upper triangular):
///   e1: (a,b,c) -> (a+1,b-1,c) with coefficient [b]
///   f1: (a,b,c) -> (a-1,b+1,c) with coefficient [a]
///   e2: (a,b,c) -> (a,b+1,c-1) with coefficient [c]
///   f2: (a,b,c) -> (a,b-1,c+1) with coefficient [b]
/// and Cartan weights h1 = a-b, h2 = b-c. Everything stays in the Laurent
/// ring; no square roots appear.
struct Sl3RepQ {
  RingConfig ring;
  std::string label;  // "fund" or "(n,0)"
  int n = 0;
  int dim = 0;
  std::vector<std::array<int, 3>> basis;  // exponent triples (a,b,c)
  ExactMatrix e1, e2, f1, f2;

  /// q^{alpha * h_i}, i in {1,2}.
  ExactMatrix kpow(int i, const Rational& alpha) const;
  /// q^{c1 h1 + c2 h2}.
  ExactMatrix kpow_comb(const Rational& c1, const Rational& c2) const;
};

/// Defining and Serre relations are machine-verified on construction;
/// failures throw ConstructionError.
Sl3RepQ sl3_sym_irrep_q(const RingConfig& cfg, int n);
Sl3RepQ sl3_fund_q(const RingConfig& cfg);  // the n = 1 member

/// Composite generators e3 = e1 e2 - q^{-1} e2 e1, f3 = f2 f1 - q f1 f2,
/// with their commutation identities verified on construction.
struct Sl3Composite {
  ExactMatrix e3, f3;
};
Sl3Composite e3f3(const Sl3RepQ& rep);

/// Standard R-matrix on (fund) x (rep) as a 3x3 grid of dim x dim blocks:
/// diagonal q^{(2h1+h2)/3}, q^{-(h1-h2)/3}, q^{-(h1+2h2)/3}; upper blocks
/// carry q^{-1/2}(q-q^{-1}) times the lowering generators dressed with
/// Cartan factors.
ExactMatrix build_rq_sl3(const Sl3RepQ& rep);

/// Contraction transform G = E_q(eta e3)|_fund kron E_q(eta e3)|_rep.
ExactMatrix build_g_sl3(const Sl3RepQ& rep);

ContractionReport contract_sl3(const Sl3RepQ& rep);

/// Classical limits of the generators (plus integer Cartan diagonals).
struct Sl3Classical {
  int n = 0;
  int dim = 0;
  LimitMatrix e1, e2, f1, f2, e3, f3, h1, h2;
};
Sl3Classical sl3_classical(const Sl3RepQ& rep);

/// Jordanian R-matrix on (fund) x (rep):
///   [[T, 2h T^{-1/2} e2, -(h/2)(T+T^{-1})(h1+h2) + (h/2)(T-T^{-1})],
///    [0, 1, -2h T^{1/2} e1],
///    [0, 0, T^{-1}]]
/// with T = h e3 + sqrt(1 + (h e3)^2).
LimitMatrix rh_closed_sl3(const Sl3Classical& cl);

/// The q-exponential commutation identities that drive the sl3 contraction:
/// conjugation of E_q(eta e3) by e1, e2, f1, f2, f3, the Cartan bookkeeping
/// that turns the diagonal blocks into T-powers, and the q -> 1 limits of
/// T_(+-1) against the closed form.
RelationReport verify_sl3_qexp_identities(const Sl3RepQ& rep);

}  // namespace qh
