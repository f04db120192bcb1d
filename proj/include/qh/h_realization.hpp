#pragma once

#include "qh/sl2.hpp"

namespace qh {

/// T = h J+ + sqrt(1 + (h J+)^2) and its inverse (exact: the square root
/// series terminates on the nilpotent square). T - T^{-1} = 2 h J+.
struct TPair {
  LimitMatrix T, Tinv;
};
TPair t_closed(const Sl2RepClassical& rep);

/// Integer and half-integer powers of a unipotent matrix; 2*alpha must be an
/// integer. T^{1/2} is the terminating binomial series on T - 1.
LimitMatrix t_pow(const LimitMatrix& T, const Rational& alpha);

/// Nonlinear map of the h-deformed generators onto classical spin-j ones:
///   hX = arcsinh(h J+)  (so e^{hX} = T),
///   H  = (1/2)(T + T^{-1}) J0,
///   Y  = J- - (h^2/4) J+ (J0^2 - 1).
struct HatTriple {
  Sl2RepClassical rep;
  LimitMatrix T, Tinv;  // e^{+-hX}
  LimitMatrix hX, H, Y;
};
HatTriple hat_map(const Sl2RepClassical& rep);

/// Twisted variant:
///   e^{hX} = (1 + (h/2) J+)(1 - (h/2) J+)^{-1},
///   H = J0,
///   Y = (1 - (h J+/2)^2)^{1/2} J- (1 - (h J+/2)^2)^{1/2}.
struct TildeTriple {
  Sl2RepClassical rep;
  LimitMatrix T, Tinv;  // e^{+-hX}
  LimitMatrix hX, H, Y;
};
TildeTriple tilde_map(const Sl2RepClassical& rep);

/// Jordanian R-matrix on (spin 1/2) x (spin j), blockwise
///   [[T, -(h/2)(T+T^{-1}) J0 + (h/2)(T-T^{-1})], [0, T^{-1}]].
LimitMatrix rh_closed_sl2(const Sl2RepClassical& rep);

/// Same R-matrix expressed through a realization: blocks
///   [[e^{hX}, -h H + (h/2)(e^{hX}-e^{-hX})], [0, e^{-hX}]].
LimitMatrix rh_from_realization(const LimitMatrix& Tplus, const LimitMatrix& Tminus,
                                const LimitMatrix& H);

/// Two-exponential universal form evaluated in (spin j1) x (spin j2):
///   exp(-hX kron e^{hX} H) * exp(h e^{hX} H kron X).
LimitMatrix universal_rh(const Sl2RepClassical& a, const Sl2RepClassical& b);

/// Named relation checks with exact residuals.
struct RelationCheck {
  std::string name;
  bool pass = false;
  LimitMatrix residual;
};
struct RelationReport {
  std::vector<RelationCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Defining relations of the h-deformed algebra in a realization:
///   T T^{-1} = 1,
///   [H, T^{+-1}] = T^{+-2} - 1,
///   [H, Y] = -(Y c + c Y) with c = (T + T^{-1})/2,
///   [hX, Y] = h H,
/// plus the branch-specific inversion of the map onto J+:
///   T - T^{-1} = 2 h J+ and sinh(hX) = h J+        (square-root branch),
///   T - 1 = (h/2) J+ (T+1) and tanh(hX/2) = (h/2) J+  (rational branch).
RelationReport verify_uh_algebra(const HatTriple& t);
RelationReport verify_uh_algebra(const TildeTriple& t);

/// Yang-Baxter check R12 R13 R23 = R23 R13 R12 on V_a x V_b x V_c.
struct YbeResult {
  bool pass = false;
  LimitMatrix residual;
};
YbeResult ybe_check(const LimitMatrix& Rab, const LimitMatrix& Rac,
                    const LimitMatrix& Rbc, int da, int db, int dc);

enum class GaugeShape { Diagonal, UnitUpperTriangular };

/// Searches for a gauge M on the second tensor factor with
///   (1 kron M)^{-1} R1 (1 kron M) = R2,
/// M restricted to the given shape with M(0,0) = 1 (diagonal) or unit
/// diagonal (upper triangular). The h-power expansion makes the equation an
/// exact rational linear system; free directions are pinned to the identity,
/// and the candidate is verified by substitution before being returned.
std::optional<LimitMatrix> gauge_relate(const LimitMatrix& R1, const LimitMatrix& R2,
                                        GaugeShape shape);

}  // namespace qh
