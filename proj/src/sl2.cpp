#include "qh/sl2.hpp"

namespace qh {

namespace {

void check_spin(const Rational& j) {
  if (j.sign() < 0 || !(j * Rational(2)).is_integer())
    throw InvalidArgument("spin must be a nonnegative half-integer, got " + j.str());
}

}  // namespace

ExactMatrix Sl2RepQ::kpow(const Rational& alpha) const {
  std::vector<Scalar> d;
  d.reserve(weights.size());
  for (long w : weights) d.push_back(q_pow(ring, alpha * Rational(w)));
  return diag_mat(d);
}

Sl2RepQ sl2_q_irrep(const RingConfig& cfg, const Rational& j) {
  check_spin(j);
  Sl2RepQ rep;
  rep.ring = cfg;
  rep.j = j;
  long twoj = (j * Rational(2)).num().get_si();
  rep.dim = static_cast<int>(twoj) + 1;
  for (long i = 0; i < rep.dim; ++i) rep.weights.push_back(twoj - 2 * i);

  // With m = j - i: [j-m] = [i] raises, [j+m] = [2j-i] lowers.
  rep.Jp = zero_mat<Scalar>(rep.dim, rep.dim);
  rep.Jm = zero_mat<Scalar>(rep.dim, rep.dim);
  for (long i = 1; i < rep.dim; ++i) rep.Jp(i - 1, i) = q_int(cfg, i);
  for (long i = 0; i + 1 < rep.dim; ++i) rep.Jm(i + 1, i) = q_int(cfg, twoj - i);

  ExactMatrix K = rep.kpow(Rational(1));
  ExactMatrix Kinv = rep.kpow(Rational(-1));
  if (!mat_eq<Scalar>(K * Kinv, identity_mat<Scalar>(rep.dim)))
    throw ConstructionError("q^{J0} q^{-J0} != 1");
  if (!mat_eq<Scalar>(ExactMatrix(K * rep.Jp), ExactMatrix(q_pow(cfg, 2) * (rep.Jp * K))))
    throw ConstructionError("q^{J0} J+ != q^2 J+ q^{J0}");
  if (!mat_eq<Scalar>(ExactMatrix(K * rep.Jm), ExactMatrix(q_pow(cfg, -2) * (rep.Jm * K))))
    throw ConstructionError("q^{J0} J- != q^{-2} J- q^{J0}");
  std::vector<Scalar> qints;
  for (long w : rep.weights) qints.push_back(q_int(cfg, w));
  if (!mat_eq<Scalar>(commutator(rep.Jp, rep.Jm), diag_mat(qints)))
    throw ConstructionError("[J+,J-] != [J0]");
  return rep;
}

Sl2RepClassical sl2_classical_irrep(const Rational& j) {
  check_spin(j);
  Sl2RepQ q = sl2_q_irrep(RingConfig{}, j);
  Sl2RepClassical rep;
  rep.j = j;
  rep.dim = q.dim;
  rep.weights = q.weights;
  auto take = [](const ContractionReport& r) {
    if (!r.finite()) throw ConstructionError("divergent classical limit");
    return *r.limit;
  };
  rep.Jp = take(limit_mat(q.Jp));
  rep.Jm = take(limit_mat(q.Jm));
  std::vector<HPoly> d;
  for (long w : rep.weights) d.emplace_back(Rational(w));
  rep.J0 = diag_mat(d);

  if (!mat_eq<HPoly>(commutator(rep.J0, rep.Jp), LimitMatrix(HPoly(2) * rep.Jp)))
    throw ConstructionError("[J0,J+] != 2 J+");
  if (!mat_eq<HPoly>(commutator(rep.J0, rep.Jm), LimitMatrix(HPoly(-2) * rep.Jm)))
    throw ConstructionError("[J0,J-] != -2 J-");
  if (!mat_eq<HPoly>(commutator(rep.Jp, rep.Jm), rep.J0))
    throw ConstructionError("[J+,J-] != J0");
  return rep;
}

}  // namespace qh
