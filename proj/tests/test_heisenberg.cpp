#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qh/heisenberg.hpp"
#include "qh/series.hpp"

using namespace qh;

TEST_CASE("ladder operators on truncated polynomials") {
  const int N = 4;
  PolyOp up = a_plus(N);
  PolyOp down = a_minus(N);
  REQUIRE(up.matrix.rows() == N + 1);

  for (int k = 0; k < N; ++k) CHECK(up.matrix(k + 1, k) == HPoly(1));
  CHECK(up.matrix(0, N) == HPoly(0));  // top degree falls off the space
  for (int k = 1; k <= N; ++k) CHECK(down.matrix(k - 1, k) == HPoly(Rational(k)));

  // [a-, a+] = 1 everywhere except the truncated top degree, where the
  // commutator instead shows the -N defect (the trace must vanish).
  LimitMatrix c = commutator(down.matrix, up.matrix);
  for (int k = 0; k < N; ++k) CHECK(c(k, k) == HPoly(1));
  CHECK(c(N, N) == HPoly(Rational(-N)));
}

TEST_CASE("base pair passes below the top degree and fails on it") {
  const int N = 6;
  HeisPair base{a_plus(N), a_minus(N)};
  CHECK(heis_commutator_check(base, N - 1).pass);
  CHECK(!heis_commutator_check(base, N).pass);
}

TEST_CASE("arcsinh transform keeps the raising map polynomial in h") {
  const int N = 8;
  HeisPair hat = heis_hat(N);
  const std::vector<Rational> s = arcsinh_series(N);

  // Column of the constant polynomial: coefficient k sits at h^{k-1}.
  for (int k = 1; k <= N; ++k) {
    CHECK(hat.plus.matrix(k, 0) == HPoly::h(k - 1, s[k]));
  }
  // Linear-in-argument part is the untransformed shift.
  for (int k = 0; k < N; ++k) CHECK(hat.plus.matrix(k + 1, k).coeff(0) == Rational(1));

  // Transformed lowering map: sqrt(1 + h^2 a+^2) a-.
  CHECK(hat.minus.matrix(0, 1) == HPoly(1));
  for (int k = 1; k <= N; ++k) CHECK(hat.minus.matrix(k - 1, k).coeff(0) == Rational(k));
  // First correction: (h^2/2) a+^2 a- adds k at two degrees higher.
  for (int k = 1; k + 1 <= N; ++k)
    CHECK(hat.minus.matrix(k + 1, k).coeff(2) == Rational(k, 2));
}

TEST_CASE("arctanh transform column matches its scaled series") {
  const int N = 8;
  HeisPair tld = heis_tilde(N);
  const std::vector<Rational> t = arctanh_series(N);
  // (2/h) arctanh(h a+ / 2): coefficient k picks up 2^{1-k}.
  for (int k = 1; k <= N; ++k) {
    CHECK(tld.plus.matrix(k, 0) == HPoly::h(k - 1, t[k] * Rational(2).pow(1 - k)));
  }
  // S a- S with S = sqrt(1 - h^2 a+^2 / 4): leading entries undeformed.
  for (int k = 1; k <= N; ++k) CHECK(tld.minus.matrix(k - 1, k).coeff(0) == Rational(k));
  // The sandwich collects -(1/8)(a+^2 a- + a- a+^2) at h^2, which lands at
  // (k+1, k) with weight k + (k+2) away from the truncation boundary.
  for (int k = 1; k + 2 <= N; ++k)
    CHECK(tld.minus.matrix(k + 1, k).coeff(2) == Rational(-(k + 1), 4));
}

TEST_CASE("canonical commutator survives both transforms on the safe window") {
  for (int N : {8, 12}) {
    HeisPair hat = heis_hat(N);
    RelationCheck hc = heis_commutator_check(hat, N - 3);
    INFO(hc.name);
    CHECK(hc.pass);

    HeisPair tld = heis_tilde(N);
    RelationCheck tc = heis_commutator_check(tld, N - 3);
    INFO(tc.name);
    CHECK(tc.pass);
  }
}

TEST_CASE("truncation defect is confined to the top degree") {
  // Including the top row must break the identity: the commutator of a
  // faithful pair is traceless, the identity is not.
  const int N = 8;
  CHECK(!heis_commutator_check(heis_hat(N), N).pass);
  CHECK(!heis_commutator_check(heis_tilde(N), N).pass);
  // One row below the top is already exact for these transforms.
  CHECK(heis_commutator_check(heis_hat(N), N - 1).pass);
}

TEST_CASE("transformed pairs stay within the polynomial degree bound") {
  const int N = 6;
  HeisPair hat = heis_hat(N);
  for (Eigen::Index i = 0; i <= N; ++i)
    for (Eigen::Index j = 0; j <= N; ++j) {
      // Series term k of the raising map carries h^{k-1}, k <= N; the
      // lowering map's square root stops at h^N on an (N+1)-dimensional space.
      CHECK(hat.plus.matrix(i, j).degree() <= N - 1);
      CHECK(hat.minus.matrix(i, j).degree() <= N);
    }
}
