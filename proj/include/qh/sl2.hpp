#pragma once

#include "qh/matrix.hpp"
#include "qh/qring.hpp"

namespace qh {

/// Spin-j irreducible representation of the q-deformed sl2 in the weight
/// basis |m>, m = j, j-1, ..., -j (so index 0 is the highest weight):
///   J+ |m> = [j-m] |m+1>,   J- |m> = [j+m] |m-1>,   q^{J0} |m> = q^{2m} |m>.
/// This square-root-free normalization keeps every entry in the Laurent ring.
struct Sl2RepQ {
  RingConfig ring;
  Rational j;
  int dim = 0;
  std::vector<long> weights;  // J0 eigenvalues 2m, descending
  ExactMatrix Jp, Jm;

  /// q^{alpha * J0}: diagonal with entries q^{alpha * 2m}.
  ExactMatrix kpow(const Rational& alpha) const;
};

/// Builds the irrep and machine-checks its defining relations
/// (q^{J0} conjugation of J+- and [J+,J-] = [J0] as a diagonal of
/// q-integers); any failure throws ConstructionError.
Sl2RepQ sl2_q_irrep(const RingConfig& cfg, const Rational& j);

/// Classical (undeformed) spin-j generators: the entrywise q -> 1 limit of
/// the q-irrep, with J0 = diag(2m). Satisfies [J0,J+-] = +-2 J+-,
/// [J+,J-] = J0.
struct Sl2RepClassical {
  Rational j;
  int dim = 0;
  std::vector<long> weights;
  LimitMatrix J0, Jp, Jm;
};

Sl2RepClassical sl2_classical_irrep(const Rational& j);

}  // namespace qh
