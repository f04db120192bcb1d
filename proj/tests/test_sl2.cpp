#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qh/sl2.hpp"

using namespace qh;

TEST_CASE("spin one-half representation") {
  RingConfig cfg;
  Sl2RepQ rep = sl2_q_irrep(cfg, Rational(1, 2));
  REQUIRE(rep.dim == 2);
  CHECK(rep.weights == std::vector<long>{1, -1});

  CHECK(rep.Jp(0, 1) == Scalar(1));
  CHECK(rep.Jp(0, 0).is_zero());
  CHECK(rep.Jp(1, 0).is_zero());
  CHECK(rep.Jm(1, 0) == Scalar(1));

  ExactMatrix K = rep.kpow(Rational(1, 2));
  CHECK(K(0, 0) == q_pow(cfg, Rational(1, 2)));
  CHECK(K(1, 1) == q_pow(cfg, Rational(-1, 2)));
  CHECK(K(0, 1).is_zero());
}

TEST_CASE("spin one representation carries q-integer entries") {
  RingConfig cfg;
  Sl2RepQ rep = sl2_q_irrep(cfg, Rational(1));
  REQUIRE(rep.dim == 3);
  CHECK(rep.weights == std::vector<long>{2, 0, -2});

  CHECK(rep.Jp(0, 1) == q_int(cfg, 1));
  CHECK(rep.Jp(1, 2) == q_int(cfg, 2));
  CHECK(rep.Jm(1, 0) == q_int(cfg, 2));
  CHECK(rep.Jm(2, 1) == q_int(cfg, 1));
  CHECK(rep.Jp(0, 2).is_zero());

  // [J+, J-] is the diagonal of q-integers of the weights.
  ExactMatrix C = commutator(rep.Jp, rep.Jm);
  CHECK(C(0, 0) == q_int(cfg, 2));
  CHECK(C(1, 1).is_zero());
  CHECK(C(2, 2) == q_int(cfg, -2));
}

TEST_CASE("defining relations hold for half-integer spins") {
  RingConfig cfg;
  for (Rational j(1, 2); !(Rational(5, 2) < j); j = j + Rational(1, 2)) {
    Sl2RepQ rep = sl2_q_irrep(cfg, j);  // construction machine-checks them
    CHECK(rep.dim == (j * Rational(2)).num().get_si() + 1);

    // q^{J0} J+ = J+ q^{J0 + 2}: conjugation shifts the weight by 2.
    ExactMatrix lhs = rep.kpow(Rational(1)) * rep.Jp;
    ExactMatrix rhs = rep.Jp * rep.kpow(Rational(1)) * q_pow(cfg, Rational(2));
    CHECK(mat_eq(lhs, rhs));
  }
}

TEST_CASE("weights descend from the highest weight") {
  RingConfig cfg;
  Sl2RepQ rep = sl2_q_irrep(cfg, Rational(5, 2));
  CHECK(rep.dim == 6);
  CHECK(rep.weights == std::vector<long>{5, 3, 1, -1, -3, -5});
}

TEST_CASE("classical representation is the q to 1 limit") {
  RingConfig cfg;
  for (Rational j(1, 2); !(Rational(2) < j); j = j + Rational(1, 2)) {
    Sl2RepQ repq = sl2_q_irrep(cfg, j);
    Sl2RepClassical cl = sl2_classical_irrep(j);
    REQUIRE(cl.dim == repq.dim);

    ContractionReport limp = limit_mat(repq.Jp);
    ContractionReport limm = limit_mat(repq.Jm);
    REQUIRE(limp.finite());
    REQUIRE(limm.finite());
    CHECK(mat_eq(*limp.limit, cl.Jp));
    CHECK(mat_eq(*limm.limit, cl.Jm));

    for (int i = 0; i < cl.dim; ++i)
      CHECK(cl.J0(i, i) == HPoly(Rational(cl.weights[i])));

    // [J0, J+-] = +-2 J+-, [J+, J-] = J0.
    CHECK(mat_eq(commutator(cl.J0, cl.Jp), LimitMatrix(HPoly(2) * cl.Jp)));
    CHECK(mat_eq(commutator(cl.Jp, cl.Jm), cl.J0));
  }
}

TEST_CASE("invalid spins are rejected") {
  RingConfig cfg;
  CHECK_THROWS_AS(sl2_q_irrep(cfg, Rational(-1, 2)), InvalidArgument);
  CHECK_THROWS_AS(sl2_q_irrep(cfg, Rational(1, 3)), InvalidArgument);
  CHECK_THROWS_AS(sl2_classical_irrep(Rational(2, 3)), InvalidArgument);
}

TEST_CASE("odd root orders cannot represent half weights") {
  // kpow(1/2) on an odd weight needs q^{1/2}; with L odd that is no longer
  // a Laurent monomial in u.
  RingConfig odd{3};
  Sl2RepQ rep = sl2_q_irrep(odd, Rational(1));  // integer weights still fine
  CHECK(rep.kpow(Rational(1))(0, 0) == q_pow(odd, Rational(2)));
  CHECK_THROWS_AS(rep.kpow(Rational(1, 4)), InvalidArgument);
}
