#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qh/h_realization.hpp"

using namespace qh;

namespace {

const HPoly kOne(1);
const HPoly kH = HPoly::h();

LimitMatrix mat3(std::initializer_list<std::initializer_list<HPoly>> rows) {
  LimitMatrix M(3, 3);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (const auto& v : row) M(i, j++) = v;
    ++i;
  }
  return M;
}

/// Spin-1 classical triple in the normalization where the raising generator
/// acts with uniform coefficient 2 and the lowering one with coefficient 1;
/// this is the basis in which the reference example matrices are written.
Sl2RepClassical spin1_uniform_two() {
  Sl2RepClassical rep;
  rep.j = Rational(1);
  rep.dim = 3;
  rep.weights = {2, 0, -2};
  rep.J0 = diag_mat<HPoly>({HPoly(2), HPoly(0), HPoly(-2)});
  rep.Jp = zero_mat<HPoly>(3, 3);
  rep.Jp(0, 1) = HPoly(2);
  rep.Jp(1, 2) = HPoly(2);
  rep.Jm = zero_mat<HPoly>(3, 3);
  rep.Jm(1, 0) = HPoly(1);
  rep.Jm(2, 1) = HPoly(1);
  return rep;
}

struct ReferencePair {
  LimitMatrix hat, tilde;
};

/// The explicit upper-triangular R-matrices of the smallest mixed pair in
/// the uniform-two basis, written out entry by entry.
ReferencePair reference_half_one() {
  const HPoly h2 = kH * kH, h3 = h2 * kH;
  LimitMatrix A = mat3({{kOne, HPoly::h(1, 2), HPoly::h(2, 2)},
                        {HPoly(0), kOne, HPoly::h(1, 2)},
                        {HPoly(0), HPoly(0), kOne}});
  LimitMatrix C = mat3({{kOne, HPoly::h(1, -2), HPoly::h(2, 2)},
                        {HPoly(0), kOne, HPoly::h(1, -2)},
                        {HPoly(0), HPoly(0), kOne}});
  LimitMatrix Bhat = mat3({{HPoly::h(1, -2), HPoly::h(2, 2), HPoly::h(3, 4)},
                           {HPoly(0), HPoly(0), HPoly::h(2, 2)},
                           {HPoly(0), HPoly(0), HPoly::h(1, 2)}});
  LimitMatrix Btilde = Bhat;
  Btilde(0, 2) = HPoly(0);
  LimitMatrix Z = zero_mat<HPoly>(3, 3);
  return {from_blocks<HPoly>({{A, Bhat}, {Z, C}}),
          from_blocks<HPoly>({{A, Btilde}, {Z, C}})};
}

const RelationCheck* find_check(const RelationReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("closed flow operator on small spins") {
  Sl2RepClassical half = sl2_classical_irrep(Rational(1, 2));
  TPair th = t_closed(half);
  CHECK(th.T(0, 0) == kOne);
  CHECK(th.T(0, 1) == kH);
  CHECK(th.Tinv(0, 1) == -kH);

  Sl2RepClassical one = sl2_classical_irrep(Rational(1));
  TPair t1 = t_closed(one);
  CHECK(mat_eq(t1.T, mat3({{kOne, kH, kH * kH},
                           {HPoly(0), kOne, HPoly::h(1, 2)},
                           {HPoly(0), HPoly(0), kOne}})));
  CHECK(mat_eq(t1.Tinv, mat3({{kOne, -kH, kH * kH},
                              {HPoly(0), kOne, HPoly::h(1, -2)},
                              {HPoly(0), HPoly(0), kOne}})));

  for (Rational j : {Rational(3, 2), Rational(2)}) {
    Sl2RepClassical cl = sl2_classical_irrep(j);
    TPair t = t_closed(cl);
    CHECK(mat_eq(LimitMatrix(t.T * t.Tinv), identity_mat<HPoly>(cl.dim)));
    CHECK(mat_eq(LimitMatrix(t.T - t.Tinv), LimitMatrix((HPoly(2) * kH) * cl.Jp)));
  }
}

TEST_CASE("powers of the flow operator") {
  Sl2RepClassical cl = sl2_classical_irrep(Rational(3, 2));
  TPair t = t_closed(cl);
  CHECK(mat_eq(t_pow(t.T, Rational(0)), identity_mat<HPoly>(4)));
  CHECK(mat_eq(t_pow(t.T, Rational(2)), LimitMatrix(t.T * t.T)));
  CHECK(mat_eq(t_pow(t.T, Rational(-1)), t.Tinv));
  LimitMatrix root = t_pow(t.T, Rational(1, 2));
  CHECK(mat_eq(LimitMatrix(root * root), t.T));
  LimitMatrix mroot = t_pow(t.T, Rational(-3, 2));
  CHECK(mat_eq(LimitMatrix(mroot * root * t.T), identity_mat<HPoly>(4)));
  CHECK_THROWS_AS(t_pow(t.T, Rational(1, 3)), InvalidArgument);
}

TEST_CASE("nonlinear map, arcsinh branch, frozen small cases") {
  HatTriple half = hat_map(sl2_classical_irrep(Rational(1, 2)));
  CHECK(mat_eq(half.Y, half.rep.Jm));  // the quadratic correction vanishes
  CHECK(mat_eq(half.H, half.rep.J0));
  CHECK(mat_eq(half.hX, LimitMatrix(kH * half.rep.Jp)));

  HatTriple one = hat_map(sl2_classical_irrep(Rational(1)));
  CHECK(mat_eq(one.hX, mat3({{HPoly(0), kH, HPoly(0)},
                             {HPoly(0), HPoly(0), HPoly::h(1, 2)},
                             {HPoly(0), HPoly(0), HPoly(0)}})));
  CHECK(mat_eq(one.H, mat3({{HPoly(2), HPoly(0), HPoly::h(2, -2)},
                            {HPoly(0), HPoly(0), HPoly(0)},
                            {HPoly(0), HPoly(0), HPoly(-2)}})));
  CHECK(mat_eq(one.Y, mat3({{HPoly(0), HPoly::h(2, Rational(1, 4)), HPoly(0)},
                            {HPoly(2), HPoly(0), HPoly::h(2, Rational(-3, 2))},
                            {HPoly(0), HPoly(1), HPoly(0)}})));
}

TEST_CASE("nonlinear map, arctanh branch, frozen small cases") {
  TildeTriple one = tilde_map(sl2_classical_irrep(Rational(1)));
  CHECK(mat_eq(one.H, one.rep.J0));  // undeformed Cartan in this branch
  CHECK(mat_eq(one.Y, mat3({{HPoly(0), HPoly::h(2, Rational(-1, 4)), HPoly(0)},
                            {HPoly(2), HPoly(0), HPoly::h(2, Rational(-1, 2))},
                            {HPoly(0), HPoly(1), HPoly(0)}})));

  // The two branches genuinely differ: at spin 1 in the Cartan and lowering
  // maps, at spin 3/2 already in the flow operator itself.
  HatTriple hone = hat_map(sl2_classical_irrep(Rational(1)));
  CHECK(mat_eq(one.T, hone.T));
  CHECK(!mat_eq(one.H, hone.H));
  CHECK(!mat_eq(one.Y, hone.Y));
  TildeTriple t32 = tilde_map(sl2_classical_irrep(Rational(3, 2)));
  HatTriple h32 = hat_map(sl2_classical_irrep(Rational(3, 2)));
  CHECK(!mat_eq(t32.T, h32.T));
}

TEST_CASE("deformed algebra relations hold in both branches") {
  for (Rational j(1, 2); !(Rational(2) < j); j = j + Rational(1, 2)) {
    Sl2RepClassical cl = sl2_classical_irrep(j);
    RelationReport hat = verify_uh_algebra(hat_map(cl));
    CHECK(hat.all_pass());
    RelationReport tilde = verify_uh_algebra(tilde_map(cl));
    CHECK(tilde.all_pass());
    CHECK(hat.checks.size() >= 7);
  }
}

TEST_CASE("corrupting the lowering map breaks exactly its relations") {
  HatTriple t = hat_map(sl2_classical_irrep(Rational(1)));
  LimitMatrix bad = t.rep.Jp * (t.rep.J0 * t.rep.J0 - identity_mat<HPoly>(3));
  t.Y = t.Y + LimitMatrix(HPoly::h(2, Rational(1, 2)) * bad);

  RelationReport r = verify_uh_algebra(t);
  CHECK(!r.all_pass());
  const RelationCheck* anti = find_check(r, "[H,Y] = -(Y cosh(hX) + cosh(hX) Y)");
  const RelationCheck* xy = find_check(r, "[hX,Y] = h H");
  const RelationCheck* flow = find_check(r, "T - Tinv = 2h J+");
  REQUIRE(anti != nullptr);
  REQUIRE(xy != nullptr);
  REQUIRE(flow != nullptr);
  CHECK(!anti->pass);
  CHECK(!xy->pass);
  CHECK(flow->pass);
  CHECK(!is_zero_mat(xy->residual));
}

TEST_CASE("closed R-matrix equals its realization assembly") {
  for (Rational j : {Rational(1, 2), Rational(1), Rational(2)}) {
    Sl2RepClassical cl = sl2_classical_irrep(j);
    HatTriple t = hat_map(cl);
    CHECK(mat_eq(rh_closed_sl2(cl), rh_from_realization(t.T, t.Tinv, t.H)));
  }
}

TEST_CASE("reference example matrices in the uniform-two basis") {
  Sl2RepClassical paper = spin1_uniform_two();
  ReferencePair pub = reference_half_one();

  HatTriple hat = hat_map(paper);
  CHECK(mat_eq(rh_from_realization(hat.T, hat.Tinv, hat.H), pub.hat));
  TildeTriple tilde = tilde_map(paper);
  CHECK(mat_eq(rh_from_realization(tilde.T, tilde.Tinv, tilde.H), pub.tilde));

  // The two realizations are related by a unit upper-triangular gauge whose
  // only off-diagonal entry is h^2 in the corner.
  auto M = gauge_relate(pub.hat, pub.tilde, GaugeShape::UnitUpperTriangular);
  REQUIRE(M.has_value());
  LimitMatrix expected = identity_mat<HPoly>(3);
  expected(0, 2) = kH * kH;
  CHECK(mat_eq(*M, expected));
}

TEST_CASE("diagonal gauge connects the weight bases") {
  // The engine's own basis normalizes raising entries to descending
  // q-integers; a diagonal gauge maps its R-matrix onto the uniform-two one.
  Sl2RepClassical mine = sl2_classical_irrep(Rational(1));
  HatTriple hmine = hat_map(mine);
  TildeTriple tmine = tilde_map(mine);
  LimitMatrix Rhat_mine = rh_from_realization(hmine.T, hmine.Tinv, hmine.H);
  LimitMatrix Rtilde_mine = rh_from_realization(tmine.T, tmine.Tinv, tmine.H);

  ReferencePair pub = reference_half_one();
  auto D = gauge_relate(Rhat_mine, pub.hat, GaugeShape::Diagonal);
  REQUIRE(D.has_value());
  CHECK(mat_eq(*D, diag_mat<HPoly>({HPoly(1), HPoly(2), HPoly(2)})));

  // The same gauge must carry the other branch across as well.
  LimitMatrix Dinv = diag_mat<HPoly>(
      {HPoly(1), HPoly(Rational(1, 2)), HPoly(Rational(1, 2))});
  LimitMatrix big = kron(identity_mat<HPoly>(2), *D);
  LimitMatrix biginv = kron(identity_mat<HPoly>(2), Dinv);
  CHECK(mat_eq(LimitMatrix(biginv * Rtilde_mine * big), pub.tilde));
}

TEST_CASE("self-gauge is the identity and unrelated matrices have none") {
  LimitMatrix R = rh_closed_sl2(sl2_classical_irrep(Rational(1)));
  auto self = gauge_relate(R, R, GaugeShape::Diagonal);
  REQUIRE(self.has_value());
  CHECK(mat_eq(*self, identity_mat<HPoly>(3)));

  auto none = gauge_relate(R, identity_mat<HPoly>(6), GaugeShape::UnitUpperTriangular);
  CHECK(!none.has_value());
}

TEST_CASE("two-exponential form reproduces the closed matrix") {
  Sl2RepClassical half = sl2_classical_irrep(Rational(1, 2));
  for (Rational j : {Rational(1, 2), Rational(1), Rational(3, 2)}) {
    Sl2RepClassical b = sl2_classical_irrep(j);
    CHECK(mat_eq(universal_rh(half, b), rh_closed_sl2(b)));
  }
}

TEST_CASE("Yang-Baxter holds on mixed spin triples") {
  Sl2RepClassical half = sl2_classical_irrep(Rational(1, 2));
  Sl2RepClassical one = sl2_classical_irrep(Rational(1));

  YbeResult small = ybe_check(universal_rh(half, half), universal_rh(half, half),
                              universal_rh(half, half), 2, 2, 2);
  CHECK(small.pass);

  YbeResult mixed = ybe_check(universal_rh(half, half), universal_rh(half, one),
                              universal_rh(half, one), 2, 2, 3);
  CHECK(mixed.pass);

  // Tampering with one factor must be detected.
  LimitMatrix bad = universal_rh(half, one);
  bad(0, 1) = bad(0, 1) + kH;
  YbeResult broken = ybe_check(universal_rh(half, half), universal_rh(half, one),
                               bad, 2, 2, 3);
  CHECK(!broken.pass);
  CHECK(!is_zero_mat(broken.residual));
}
