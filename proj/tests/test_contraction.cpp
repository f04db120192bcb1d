#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qh/contraction_sl2.hpp"
#include "qh/h_realization.hpp"
#include "qh/series.hpp"

using namespace qh;

TEST_CASE("limit coefficients of the transformed exponential ratio") {
  RingConfig cfg;
  const std::vector<Rational> plus = c_coefficients(cfg, 5, +1);
  CHECK(plus == std::vector<Rational>{1, 1, Rational(1, 2), 0, Rational(-1, 8), 0});
  const std::vector<Rational> minus = c_coefficients(cfg, 5, -1);
  CHECK(minus == std::vector<Rational>{1, -1, Rational(1, 2), 0, Rational(-1, 8), 0});

  // Against the closed form +-z + sqrt(1 + z^2): even coefficients follow the
  // square-root binomial series, odd coefficients vanish beyond the linear one.
  const int order = 12;
  const std::vector<Rational> root = sqrt1p_series(order / 2);
  for (int sign : {+1, -1}) {
    const std::vector<Rational> cs = c_coefficients(cfg, order, sign);
    REQUIRE(static_cast<int>(cs.size()) == order + 1);
    for (int n = 0; n <= order; ++n) {
      Rational expected = n == 1          ? Rational(sign)
                          : (n % 2 == 0) ? root[n / 2]
                                         : Rational(0);
      CHECK(cs[n] == expected);
    }
  }

  // The answer cannot depend on the root-order bookkeeping.
  CHECK(c_coefficients(RingConfig{2}, 6, +1) == c_coefficients(cfg, 6, +1));
}

TEST_CASE("q-exponential of the raising generator") {
  RingConfig cfg;
  Scalar et = eta(cfg);

  Sl2RepQ half = sl2_q_irrep(cfg, Rational(1, 2));
  ExactMatrix g = qexp(cfg, half.Jp, et);
  CHECK(mat_eq(g, ExactMatrix(identity_mat<Scalar>(2) + et * half.Jp)));

  Sl2RepQ one = sl2_q_irrep(cfg, Rational(1));
  ExactMatrix g1 = qexp(cfg, one.Jp, et);
  CHECK(g1(0, 1) == et * q_int(cfg, 1));
  CHECK(g1(1, 2) == et * q_int(cfg, 2));
  // (eta J+)^2 / [2]! leaves exactly eta^2 in the corner.
  CHECK(g1(0, 2) == et * et);
  CHECK(g1(0, 0).is_one());

  // Asking for a truncation below the nilpotency degree must fail loudly.
  CHECK_THROWS_AS(qexp(cfg, one.Jp, et, 1), Error);
}

TEST_CASE("conjugated Cartan flows through the exponential") {
  RingConfig cfg;
  Sl2RepQ rep = sl2_q_irrep(cfg, Rational(1));
  ExactMatrix g = qexp(cfg, rep.Jp, eta(cfg));
  ExactMatrix ginv = inv_unipotent(g);

  // g^{-1} q^{J0/2} g = T_(1) q^{J0/2}.
  ExactMatrix lhs = ginv * rep.kpow(Rational(1, 2)) * g;
  ExactMatrix rhs = t_alpha_q(rep, Rational(1)) * rep.kpow(Rational(1, 2));
  CHECK(mat_eq(lhs, rhs));

  // Group law: (T_(a) q^{a J0/2})(T_(b) q^{b J0/2}) = T_(a+b) q^{(a+b) J0/2}.
  auto flow = [&](const Rational& alpha) {
    return ExactMatrix(t_alpha_q(rep, alpha) * rep.kpow(alpha * Rational(1, 2)));
  };
  CHECK(mat_eq(ExactMatrix(flow(1) * flow(-1)), flow(0)));
  CHECK(mat_eq(ExactMatrix(flow(1) * flow(1)), flow(2)));
  CHECK(mat_eq(flow(0), identity_mat<Scalar>(3)));
}

TEST_CASE("flow operators stay finite and match the closed form") {
  RingConfig cfg;
  for (Rational j : {Rational(1), Rational(3, 2)}) {
    Sl2RepQ rep = sl2_q_irrep(cfg, j);
    Sl2RepClassical cl = sl2_classical_irrep(j);
    TPair tp = t_closed(cl);

    ContractionReport plus = limit_mat(t_alpha_q(rep, Rational(1)));
    REQUIRE(plus.finite());
    CHECK(mat_eq(*plus.limit, tp.T));

    ContractionReport minus = limit_mat(t_alpha_q(rep, Rational(-1)));
    REQUIRE(minus.finite());
    CHECK(mat_eq(*minus.limit, tp.Tinv));

    // Fractional flow: the limit of T_(1/2) is the square root of T.
    ContractionReport frac = limit_mat(t_alpha_q(rep, Rational(1, 2)));
    REQUIRE(frac.finite());
    CHECK(mat_eq(*frac.limit, t_pow(tp.T, Rational(1, 2))));
  }
}

TEST_CASE("standard q R-matrix for the smallest pair") {
  RingConfig cfg;
  Sl2RepQ rep = sl2_q_irrep(cfg, Rational(1, 2));
  ExactMatrix R = build_rq_sl2(rep);
  REQUIRE(R.rows() == 4);
  Scalar rq = q_pow(cfg, Rational(1, 2));
  CHECK(R(0, 0) == rq);
  CHECK(R(1, 1) == q_pow(cfg, Rational(-1, 2)));
  CHECK(R(2, 2) == q_pow(cfg, Rational(-1, 2)));
  CHECK(R(3, 3) == rq);
  CHECK(R(1, 2) == q_pow(cfg, Rational(1, 2)) - q_pow(cfg, Rational(-3, 2)));
  CHECK(R(2, 1).is_zero());
  CHECK(R(0, 3).is_zero());
}

TEST_CASE("contraction of the smallest pair equals the frozen matrix") {
  RingConfig cfg;
  ContractionReport rep = contract_sl2(cfg, Rational(1, 2));
  REQUIRE(rep.finite());
  LimitMatrix expected(4, 4);
  expected.setZero();
  const HPoly one(1), h = HPoly::h();
  expected(0, 0) = one;  expected(0, 1) = h;   expected(0, 2) = -h;  expected(0, 3) = h * h;
  expected(1, 1) = one;  expected(1, 3) = h;
  expected(2, 2) = one;  expected(2, 3) = -h;
  expected(3, 3) = one;
  CHECK(mat_eq(*rep.limit, expected));

  // Off-diagonal entries only arise after genuine pole cancellation.
  int worst = 0;
  for (Eigen::Index i = 0; i < 4; ++i)
    for (Eigen::Index j = 0; j < 4; ++j) worst = std::max(worst, rep.cancellation(i, j));
  CHECK(worst >= 1);
}

TEST_CASE("contraction equals the closed form for small spins") {
  RingConfig cfg;
  for (Rational j : {Rational(1), Rational(3, 2)}) {
    ContractionReport rep = contract_sl2(cfg, j);
    REQUIRE(rep.finite());
    LimitMatrix closed = rh_closed_sl2(sl2_classical_irrep(j));
    CHECK(mat_eq(*rep.limit, closed));
    CHECK(!rep.deformation_free());
  }
}

TEST_CASE("negative control: the transform alone diverges") {
  RingConfig cfg;
  Sl2RepQ rep = sl2_q_irrep(cfg, Rational(1));
  ContractionReport g = limit_mat(build_g_sl2(rep), "transform alone");
  CHECK(!g.finite());
  bool found = false;
  for (const auto& d : g.divergences)
    if (d.row == 0 && d.col == 3) {
      found = true;
      CHECK(d.h_power == 1);
      CHECK(d.pole_order == 1);
    }
  CHECK(found);
}

TEST_CASE("negative control: no transform, no deformation") {
  RingConfig cfg;
  Sl2RepQ rep = sl2_q_irrep(cfg, Rational(1));
  ContractionReport r = limit_mat(build_rq_sl2(rep), "untransformed");
  REQUIRE(r.finite());
  CHECK(r.deformation_free());
  CHECK(mat_eq(*r.limit, identity_mat<HPoly>(6)));
}
