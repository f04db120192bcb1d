#include "qh/verify.hpp"

#include <random>
#include <sstream>

#include "qh/contraction_sl2.hpp"
#include "qh/errors.hpp"
#include "qh/h_realization.hpp"
#include "qh/heisenberg.hpp"
#include "qh/series.hpp"
#include "qh/sl2.hpp"
#include "qh/sl3.hpp"
#include "qh/strings.hpp"

namespace qh {

namespace {

struct Collector {
  std::string suite;
  std::vector<CheckResult> out;

  void add(const std::string& name, bool pass, const std::string& detail = "") {
    out.push_back({suite, name, pass, detail});
  }
  template <class F>
  void section(const std::string& label, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      add(label, false, std::string("exception: ") + e.what());
    }
  }
};

struct Rng {
  std::mt19937 gen;
  explicit Rng(unsigned seed) : gen(seed) {}
  int i(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(gen);
  }
  Rational rational() { return Rational(i(-9, 9), i(1, 9)); }
  Rational nonzero_rational() {
    while (true) {
      Rational r = rational();
      if (!r.is_zero()) return r;
    }
  }
  LaurentPoly laurent() {
    LaurentPoly p;
    const int terms = i(1, 4);
    for (int t = 0; t < terms; ++t)
      p += LaurentPoly::monomial(rational(), i(-5, 5));
    return p;
  }
  LaurentPoly nonzero_laurent() {
    while (true) {
      LaurentPoly p = laurent();
      if (!p.is_zero()) return p;
    }
  }
  LaurentPoly laurent_nonzero_at_one() {
    while (true) {
      LaurentPoly p = laurent();
      if (!p.is_zero() && !p.eval_at_one().is_zero()) return p;
    }
  }
  RatFun ratfun() { return RatFun(laurent(), nonzero_laurent()); }
  RatFun ratfun_finite_at_one() {
    return RatFun(laurent(), laurent_nonzero_at_one());
  }
  Scalar scalar() {
    Scalar s;
    const int deg = i(0, 2);
    for (int k = 0; k <= deg; ++k) s += Scalar::h(k, ratfun());
    return s;
  }
  Scalar scalar_finite_at_one() {
    Scalar s;
    const int deg = i(0, 2);
    for (int k = 0; k <= deg; ++k) s += Scalar::h(k, ratfun_finite_at_one());
    return s;
  }
  HPoly hpoly() {
    HPoly p;
    const int deg = i(0, 2);
    for (int k = 0; k <= deg; ++k) p += HPoly::h(k, rational());
    return p;
  }
  LimitMatrix hpoly_matrix(int r, int c) {
    LimitMatrix M = zero_mat<HPoly>(r, c);
    for (int jj = 0; jj < c; ++jj)
      for (int ii = 0; ii < r; ++ii) M(ii, jj) = hpoly();
    return M;
  }
};

std::string spin_str(const Rational& j) { return "j = " + to_string(j); }

// ---------------------------------------------------------------- scalar ---

void suite_scalar(Collector& c, const VerifyOptions& opt) {
  Rng rng(opt.seed);
  const RingConfig& cfg = opt.ring;

  c.section("rational function field laws", [&] {
    bool ok = true;
    for (int t = 0; t < 40 && ok; ++t) {
      RatFun a = rng.ratfun(), b = rng.ratfun(), d = rng.ratfun();
      ok = ok && ((a + b) + d == a + (b + d));
      ok = ok && ((a * b) * d == a * (b * d));
      ok = ok && (a + b == b + a) && (a * b == b * a);
      ok = ok && (a * (b + d) == a * b + a * d);
      ok = ok && ((a - a).is_zero());
      if (!a.is_zero()) ok = ok && ((a * a.inverse()).is_one());
    }
    c.add("rational function field laws", ok, "40 random triples");
  });

  c.section("canonical form is scale invariant", [&] {
    bool ok = true;
    for (int t = 0; t < 25 && ok; ++t) {
      LaurentPoly n = rng.laurent(), d = rng.nonzero_laurent(),
                  s = rng.nonzero_laurent();
      ok = RatFun(n * s, d * s) == RatFun(n, d);
    }
    c.add("canonical form is scale invariant", ok, "25 random fractions");
  });

  c.section("q-integer product identity", [&] {
    bool ok = true;
    for (long m = -8; m <= 8 && ok; ++m)
      for (long n = -8; n <= 8 && ok; ++n) {
        LaurentPoly lhs = q_int_poly(cfg, m) * q_int_poly(cfg, n + 1);
        LaurentPoly sub = q_int_poly(cfg, m + 1) * q_int_poly(cfg, n);
        lhs -= sub;
        lhs -= q_int_poly(cfg, m - n);
        ok = lhs.is_zero();
      }
    c.add("[m][n+1] - [m+1][n] = [m-n]", ok, "|m|,|n| <= 8");
  });

  c.section("difference of squares at the working root", [&] {
    LaurentPoly lhs =
        (q_pow_poly(cfg, 1) + LaurentPoly::monomial(Rational(1), 0)) *
        (q_pow_poly(cfg, 1) - LaurentPoly::monomial(Rational(1), 0));
    LaurentPoly rhs = q_pow_poly(cfg, 2);
    rhs -= LaurentPoly::monomial(Rational(1), 0);
    lhs -= rhs;
    c.add("(q+1)(q-1) = q^2 - 1", lhs.is_zero());
  });

  c.section("limit respects + and *", [&] {
    bool ok = true;
    for (int t = 0; t < 25 && ok; ++t) {
      Scalar x = rng.scalar_finite_at_one(), y = rng.scalar_finite_at_one();
      ScalarLimit lx = limit_q1(x), ly = limit_q1(y);
      ScalarLimit ls = limit_q1(x + y), lp = limit_q1(x * y);
      ok = lx.finite() && ly.finite() && ls.finite() && lp.finite();
      if (ok) ok = (*ls.value == *lx.value + *ly.value);
      if (ok) ok = (*lp.value == *lx.value * *ly.value);
    }
    c.add("limit respects + and *", ok, "25 random pairs");
  });

  c.section("limit matches numeric evaluation near u = 1", [&] {
    bool ok = true;
    const Rational h0(1, 3);
    for (int t = 0; t < 15 && ok; ++t) {
      Scalar x = rng.scalar_finite_at_one();
      ScalarLimit lx = limit_q1(x);
      if (!lx.finite()) {
        ok = false;
        break;
      }
      Rational target = lx.value->eval(h0);
      Rational d3 =
          (x.eval_numeric(Rational(1) + Rational(1, 1000), h0) - target).abs();
      Rational d6 =
          (x.eval_numeric(Rational(1) + Rational(1, 1000000), h0) - target).abs();
      ok = d6 <= d3;
    }
    c.add("limit matches numeric evaluation near u = 1", ok,
          "u = 1 + 1/K, K = 1e3 vs 1e6");
  });

  c.section("singular unit reports a pole", [&] {
    ScalarLimit l = limit_q1(eta(cfg));
    bool ok = !l.finite() && l.divergences.size() == 1 &&
              l.divergences[0].h_power == 1 && l.divergences[0].pole_order == 1;
    c.add("h/(q-1) diverges with pole order 1 at h^1", ok);
  });

  c.section("print/parse round trip", [&] {
    bool ok = true;
    for (int t = 0; t < 25 && ok; ++t) {
      Scalar x = rng.scalar();
      ok = parse_scalar(to_string(x)) == x;
    }
    c.add("print/parse round trip", ok, "25 random scalars");
  });

  c.section("Kronecker mixed product", [&] {
    bool ok = true;
    for (int t = 0; t < 10 && ok; ++t) {
      LimitMatrix A = rng.hpoly_matrix(2, 2), C = rng.hpoly_matrix(2, 2);
      LimitMatrix B = rng.hpoly_matrix(3, 3), D = rng.hpoly_matrix(3, 3);
      LimitMatrix lhs = kron(A, B) * kron(C, D);
      LimitMatrix rhs = kron(LimitMatrix(A * C), LimitMatrix(B * D));
      ok = mat_eq(lhs, rhs);
    }
    c.add("(A kron B)(C kron D) = (AC) kron (BD)", ok, "10 random quadruples");
  });

  c.section("exp/ln round trip on nilpotent matrices", [&] {
    bool ok = true;
    for (int t = 0; t < 10 && ok; ++t) {
      LimitMatrix N = zero_mat<HPoly>(3, 3);
      for (int jj = 0; jj < 3; ++jj)
        for (int ii = 0; ii < jj; ++ii) N(ii, jj) = rng.hpoly();
      LimitMatrix E = series_apply(exp_series(3), N);
      LimitMatrix back =
          series_apply(ln1p_series(3), LimitMatrix(E - identity_mat<HPoly>(3)));
      ok = mat_eq(back, N);
    }
    c.add("ln(exp(N)) = N for nilpotent N", ok, "10 random strictly upper 3x3");
  });
}

// --------------------------------------------------------------- sl2-rep ---

void suite_sl2_rep(Collector& c, const VerifyOptions& opt) {
  for (Rational j(1, 2); !(opt.jmax < j); j = j + Rational(1, 2)) {
    const std::string dj = spin_str(j);
    c.section("q-irrep construction " + dj, [&] {
      Sl2RepQ rep = sl2_q_irrep(opt.ring, j);
      c.add("q-irrep defining relations", true, dj);

      std::vector<Scalar> d(rep.dim);
      for (int k = 0; k < rep.dim; ++k) d[k] = q_int(rep.ring, rep.weights[k]);
      c.add("[J+,J-] = [J0] as q-integers",
            mat_eq(ExactMatrix(commutator(rep.Jp, rep.Jm)), diag_mat(d)), dj);

      Sl2RepClassical cl = sl2_classical_irrep(j);
      c.add("classical relations [J0,J+-] = +-2J+-, [J+,J-] = J0", true, dj);

      ContractionReport lp = limit_mat(rep.Jp), lm = limit_mat(rep.Jm);
      bool ok = lp.finite() && lm.finite() && mat_eq(*lp.limit, cl.Jp) &&
                mat_eq(*lm.limit, cl.Jm);
      c.add("q-generators limit to the classical ones", ok, dj);
    });
  }
}

// ----------------------------------------------------------- contraction ---

void suite_contraction(Collector& c, const VerifyOptions& opt) {
  for (Rational j(1, 2); !(opt.jmax < j); j = j + Rational(1, 2)) {
    const std::string dj = spin_str(j);
    c.section("contraction " + dj, [&] {
      ContractionReport rep = contract_sl2(opt.ring, j);
      c.add("transformed R-matrix is finite at q -> 1", rep.finite(), dj);
      if (!rep.finite()) return;

      LimitMatrix closed = rh_closed_sl2(sl2_classical_irrep(j));
      c.add("contraction equals the closed form", mat_eq(*rep.limit, closed), dj);

      int worst = 0;
      for (Eigen::Index a = 0; a < rep.cancellation.rows(); ++a)
        for (Eigen::Index b = 0; b < rep.cancellation.cols(); ++b)
          worst = std::max(worst, rep.cancellation(a, b));
      c.add("singular intermediates genuinely cancelled", worst >= 1,
            dj + ", worst pole order " + std::to_string(worst));
    });
  }

  c.section("negative controls", [&] {
    Sl2RepQ rep = sl2_q_irrep(opt.ring, 1);
    ContractionReport g = limit_mat(build_g_sl2(rep), "transform alone");
    bool diverges = !g.finite();
    int pole = 0;
    for (const auto& d : g.divergences) pole = std::max(pole, d.pole_order);
    c.add("transform alone diverges at q -> 1", diverges && pole >= 1,
          "j = 1, worst pole order " + std::to_string(pole));

    ContractionReport r = limit_mat(build_rq_sl2(rep), "untransformed limit");
    c.add("untransformed R_q limit carries no h",
          r.finite() && r.deformation_free(), "j = 1");
  });

  c.section("coefficient table", [&] {
    for (int sign : {+1, -1}) {
      std::vector<Rational> got = c_coefficients(opt.ring, 12, sign);
      // Oracle: Taylor coefficients of sign*z + sqrt(1 + z^2).
      std::vector<Rational> half = binomial_series(Rational(1, 2), 6);
      bool ok = got.size() == 13;
      for (int k = 0; k <= 12 && ok; ++k) {
        Rational expect = k % 2 == 0 ? half[k / 2] : Rational(0);
        if (k == 1) expect = expect + Rational(sign);
        ok = got[k] == expect;
      }
      const Rational first_six[6] = {Rational(1),  Rational(sign), Rational(1, 2),
                                     Rational(0), Rational(-1, 8), Rational(0)};
      for (int k = 0; k < 6 && ok; ++k) ok = got[k] == first_six[k];
      c.add(std::string("limit coefficients match z -> ") +
                (sign > 0 ? "+" : "-") + "z + sqrt(1+z^2)",
            ok, "orders 0..12");
    }
  });
}

// --------------------------------------------------------- h-realization ---

void suite_h_realization(Collector& c, const VerifyOptions& opt) {
  Rational cap = opt.jmax < Rational(2) ? opt.jmax : Rational(2);
  if (opt.corrupt_yhat && cap < Rational(1)) cap = Rational(1);

  for (Rational j(1, 2); !(cap < j); j = j + Rational(1, 2)) {
    const std::string dj = spin_str(j);
    c.section("realization " + dj, [&] {
      Sl2RepClassical cl = sl2_classical_irrep(j);
      HatTriple hat = hat_map(cl);
      std::string note = dj + ", arcsinh branch";
      if (opt.corrupt_yhat) {
        LimitMatrix j0sq = cl.J0 * cl.J0;
        LimitMatrix corr = cl.Jp * LimitMatrix(j0sq - identity_mat<HPoly>(cl.dim));
        hat.Y = hat.Y + LimitMatrix(HPoly::h(2, Rational(1, 2)) * corr);
        note += ", Y corrupted (h^2 term sign flipped)";
      }
      for (const auto& chk : verify_uh_algebra(hat).checks)
        c.add(chk.name, chk.pass, note);

      TildeTriple tilde = tilde_map(cl);
      for (const auto& chk : verify_uh_algebra(tilde).checks)
        c.add(chk.name, chk.pass, dj + ", rational branch");

      LimitMatrix closed = rh_closed_sl2(cl);
      c.add("closed form equals its realization assembly",
            mat_eq(closed, rh_from_realization(hat.T, hat.Tinv, hat.H)), dj);

      Sl2RepClassical half = sl2_classical_irrep(Rational(1, 2));
      c.add("two-exponential form at (1/2, j) equals the closed form",
            mat_eq(universal_rh(half, cl), closed), dj);

      auto gauge = gauge_relate(closed, closed, GaugeShape::Diagonal);
      c.add("self-gauge is the identity",
            gauge && mat_eq(*gauge, identity_mat<HPoly>(cl.dim)), dj);
    });
  }
}

// ------------------------------------------------------------------- sl3 ---

void suite_sl3(Collector& c, const VerifyOptions& opt) {
  for (int n = 1; n <= opt.sl3_nmax; ++n) {
    const std::string dn = "n = " + std::to_string(n);
    c.section("symmetric irrep " + dn, [&] {
      Sl3RepQ rep = sl3_sym_irrep_q(opt.ring, n);
      c.add("Chevalley and Serre relations verified", true, dn);

      e3f3(rep);
      c.add("composite root generator identities verified", true, dn);

      for (const auto& chk : verify_sl3_qexp_identities(rep).checks)
        c.add(chk.name, chk.pass, dn);

      ContractionReport con = contract_sl3(rep);
      c.add("transformed R-matrix is finite at q -> 1", con.finite(), dn);
      if (!con.finite()) return;
      LimitMatrix closed = rh_closed_sl3(sl3_classical(rep));
      c.add("contraction equals the closed form", mat_eq(*con.limit, closed), dn);

      int worst = 0;
      for (Eigen::Index a = 0; a < con.cancellation.rows(); ++a)
        for (Eigen::Index b = 0; b < con.cancellation.cols(); ++b)
          worst = std::max(worst, con.cancellation(a, b));
      c.add("singular intermediates genuinely cancelled", worst >= 1,
            dn + ", worst pole order " + std::to_string(worst));
    });
  }

  c.section("fundamental equals n = 1", [&] {
    Sl3RepQ f = sl3_fund_q(opt.ring), s = sl3_sym_irrep_q(opt.ring, 1);
    bool ok = mat_eq(f.e1, s.e1) && mat_eq(f.e2, s.e2) && mat_eq(f.f1, s.f1) &&
              mat_eq(f.f2, s.f2);
    c.add("fundamental equals the n = 1 symmetric irrep", ok);
  });
}

// ------------------------------------------------------------ heisenberg ---

void suite_heisenberg(Collector& c, const VerifyOptions& opt) {
  std::vector<int> orders = {8};
  if (opt.heis_order != 8) orders.push_back(opt.heis_order);

  for (int N : orders) {
    const std::string dN = "N = " + std::to_string(N);
    c.section("heisenberg " + dN, [&] {
      HeisPair base{a_plus(N), a_minus(N)};
      RelationCheck b = heis_commutator_check(base, N - 1);
      c.add("base pair: " + b.name, b.pass, dN);

      RelationCheck hat = heis_commutator_check(heis_hat(N), N - 3);
      c.add("arcsinh pair: " + hat.name, hat.pass, dN);

      RelationCheck tld = heis_commutator_check(heis_tilde(N), N - 3);
      c.add("arctanh pair: " + tld.name, tld.pass, dN);
    });
  }

  c.section("series parallel with the nonlinear map", [&] {
    const int N = std::max(9, opt.heis_order);
    HeisPair hat = heis_hat(N), tld = heis_tilde(N);
    std::vector<Rational> s = arcsinh_series(N), t = arctanh_series(N);
    bool ok_hat = true, ok_tld = true;
    for (int k = 1; k <= 9; ++k) {
      // Column 0 of the transformed raising operator carries the k-th series
      // coefficient at h^{k-1} in row k.
      HPoly expect_hat = HPoly::h(k - 1, s[k]);
      ok_hat = ok_hat && hat.plus.matrix(k, 0) == expect_hat;
      HPoly expect_tld =
          HPoly::h(k - 1, t[k] * Rational(2).pow(1 - k));
      ok_tld = ok_tld && tld.plus.matrix(k, 0) == expect_tld;
    }
    c.add("transformed raising series matches arcsinh coefficients", ok_hat,
          "orders 1..9");
    c.add("transformed raising series matches scaled arctanh coefficients",
          ok_tld, "orders 1..9");
  });
}

// ------------------------------------------------------------------- ybe ---

void suite_ybe(Collector& c, const VerifyOptions& opt) {
  c.section("two-spin family", [&] {
    const Rational spins[2] = {Rational(1, 2), Rational(1)};
    Sl2RepClassical reps[2] = {sl2_classical_irrep(spins[0]),
                               sl2_classical_irrep(spins[1])};
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int d = 0; d < 2; ++d) {
          LimitMatrix Rab = universal_rh(reps[a], reps[b]);
          LimitMatrix Rac = universal_rh(reps[a], reps[d]);
          LimitMatrix Rbc = universal_rh(reps[b], reps[d]);
          YbeResult y = ybe_check(Rab, Rac, Rbc, reps[a].dim, reps[b].dim,
                                  reps[d].dim);
          c.add("Yang-Baxter on spins (" + to_string(spins[a]) + "," +
                    to_string(spins[b]) + "," + to_string(spins[d]) + ")",
                y.pass);
        }
  });

  c.section("rank-two fundamental triple", [&] {
    Sl3Classical cl = sl3_classical(sl3_fund_q(opt.ring));
    LimitMatrix R = rh_closed_sl3(cl);
    YbeResult y = ybe_check(R, R, R, 3, 3, 3);
    c.add("Yang-Baxter on the 27-dimensional fundamental triple", y.pass);
  });
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "scalar",        "sl2-rep", "contraction", "h-realization",
      "sl3",           "heisenberg", "ybe"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& name,
                                   const VerifyOptions& opt) {
  Collector c;
  c.suite = name;
  if (name == "scalar")
    suite_scalar(c, opt);
  else if (name == "sl2-rep")
    suite_sl2_rep(c, opt);
  else if (name == "contraction")
    suite_contraction(c, opt);
  else if (name == "h-realization")
    suite_h_realization(c, opt);
  else if (name == "sl3")
    suite_sl3(c, opt);
  else if (name == "heisenberg")
    suite_heisenberg(c, opt);
  else if (name == "ybe")
    suite_ybe(c, opt);
  else
    throw InvalidArgument("unknown suite: " + name);
  return c.out;
}

bool all_pass(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

std::string check_results_text(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  for (const auto& r : results) {
    out << (r.pass ? "PASS" : "FAIL") << "  [" << r.suite << "] " << r.name;
    if (!r.detail.empty()) out << "  (" << r.detail << ")";
    out << "\n";
  }
  return out.str();
}

}  // namespace qh
