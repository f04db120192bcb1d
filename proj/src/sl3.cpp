#include "qh/sl3.hpp"

#include <map>
#include <sstream>
#include <utility>

#include "qh/contraction_sl2.hpp"  // qexp lives with the q-exponential machinery
#include "qh/errors.hpp"
#include "qh/series.hpp"

namespace qh {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ConstructionError("sl3 construction check failed: " + what);
}

int h_weight(const std::array<int, 3>& t, int i) {
  return i == 1 ? t[0] - t[1] : t[1] - t[2];
}

// Cartan matrix of sl3.
constexpr int kCartan[2][2] = {{2, -1}, {-1, 2}};

const ExactMatrix& pick_e(const Sl3RepQ& rep, int i) { return i == 1 ? rep.e1 : rep.e2; }
const ExactMatrix& pick_f(const Sl3RepQ& rep, int i) { return i == 1 ? rep.f1 : rep.f2; }

bool strictly_upper(const ExactMatrix& A) {
  for (Eigen::Index j = 0; j < A.cols(); ++j)
    for (Eigen::Index i = j; i < A.rows(); ++i)
      if (!A(i, j).is_zero()) return false;
  return true;
}

void verify_chevalley(const Sl3RepQ& rep) {
  const RingConfig& cfg = rep.ring;
  require(strictly_upper(rep.e1) && strictly_upper(rep.e2),
          "raising generators upper-triangular in the weight order");

  std::vector<Scalar> d1(rep.dim), d2(rep.dim);
  for (int k = 0; k < rep.dim; ++k) {
    d1[k] = q_int(cfg, h_weight(rep.basis[k], 1));
    d2[k] = q_int(cfg, h_weight(rep.basis[k], 2));
  }
  require(mat_eq(ExactMatrix(commutator(rep.e1, rep.f1)), diag_mat(d1)),
          "[e1,f1] = [h1]");
  require(mat_eq(ExactMatrix(commutator(rep.e2, rep.f2)), diag_mat(d2)),
          "[e2,f2] = [h2]");
  require(is_zero_mat(ExactMatrix(commutator(rep.e1, rep.f2))), "[e1,f2] = 0");
  require(is_zero_mat(ExactMatrix(commutator(rep.e2, rep.f1))), "[e2,f1] = 0");

  for (int i = 1; i <= 2; ++i) {
    ExactMatrix K = rep.kpow(i, 1);
    ExactMatrix Kinv = rep.kpow(i, -1);
    for (int j = 1; j <= 2; ++j) {
      const int a = kCartan[i - 1][j - 1];
      require(mat_eq(ExactMatrix(K * pick_e(rep, j) * Kinv),
                     ExactMatrix(q_pow(cfg, a) * pick_e(rep, j))),
              "Cartan conjugation of e");
      require(mat_eq(ExactMatrix(K * pick_f(rep, j) * Kinv),
                     ExactMatrix(q_pow(cfg, -a) * pick_f(rep, j))),
              "Cartan conjugation of f");
    }
  }

  const Scalar two = q_int(cfg, 2);
  auto serre = [&](const ExactMatrix& x, const ExactMatrix& y) {
    return ExactMatrix(x * x * y - ExactMatrix(two * (x * y * x)) + y * x * x);
  };
  require(is_zero_mat(serre(rep.e1, rep.e2)), "Serre relation e1 e1 e2");
  require(is_zero_mat(serre(rep.e2, rep.e1)), "Serre relation e2 e2 e1");
  require(is_zero_mat(serre(rep.f1, rep.f2)), "Serre relation f1 f1 f2");
  require(is_zero_mat(serre(rep.f2, rep.f1)), "Serre relation f2 f2 f1");
}

/// T = z + sqrt(1 + z^2) and its inverse for a nilpotent z.
std::pair<LimitMatrix, LimitMatrix> t_from_nilpotent(const LimitMatrix& z) {
  LimitMatrix zsq = z * z;
  LimitMatrix root =
      series_apply(sqrt1p_series(static_cast<int>(z.rows())), zsq);
  LimitMatrix T = z + root;
  return {T, inv_unipotent(T)};
}

}  // namespace

ExactMatrix Sl3RepQ::kpow(int i, const Rational& alpha) const {
  if (i != 1 && i != 2) throw InvalidArgument("Cartan index must be 1 or 2");
  std::vector<Scalar> d(dim);
  for (int k = 0; k < dim; ++k)
    d[k] = q_pow(ring, alpha * Rational(h_weight(basis[k], i)));
  return diag_mat(d);
}

ExactMatrix Sl3RepQ::kpow_comb(const Rational& c1, const Rational& c2) const {
  std::vector<Scalar> d(dim);
  for (int k = 0; k < dim; ++k)
    d[k] = q_pow(ring, c1 * Rational(h_weight(basis[k], 1)) +
                           c2 * Rational(h_weight(basis[k], 2)));
  return diag_mat(d);
}

Sl3RepQ sl3_sym_irrep_q(const RingConfig& cfg, int n) {
  if (n < 1) throw InvalidArgument("symmetric representation needs n >= 1");
  Sl3RepQ rep;
  rep.ring = cfg;
  rep.n = n;
  rep.dim = (n + 1) * (n + 2) / 2;
  {
    std::ostringstream lbl;
    lbl << "(" << n << ",0)";
    rep.label = lbl.str();
  }

  // Monomial basis x1^a x2^b x3^c, a+b+c = n, ordered a then b descending so
  // that every raising generator moves strictly toward lower indices.
  std::map<std::array<int, 3>, int> index;
  for (int a = n; a >= 0; --a)
    for (int b = n - a; b >= 0; --b) {
      index[{a, b, n - a - b}] = static_cast<int>(rep.basis.size());
      rep.basis.push_back({a, b, n - a - b});
    }

  rep.e1 = zero_mat<Scalar>(rep.dim, rep.dim);
  rep.e2 = zero_mat<Scalar>(rep.dim, rep.dim);
  rep.f1 = zero_mat<Scalar>(rep.dim, rep.dim);
  rep.f2 = zero_mat<Scalar>(rep.dim, rep.dim);
  for (int s = 0; s < rep.dim; ++s) {
    const auto [a, b, c] = rep.basis[s];
    if (b >= 1) rep.e1(index.at({a + 1, b - 1, c}), s) = q_int(cfg, b);
    if (a >= 1) rep.f1(index.at({a - 1, b + 1, c}), s) = q_int(cfg, a);
    if (c >= 1) rep.e2(index.at({a, b + 1, c - 1}), s) = q_int(cfg, c);
    if (b >= 1) rep.f2(index.at({a, b - 1, c + 1}), s) = q_int(cfg, b);
  }

  verify_chevalley(rep);
  return rep;
}

Sl3RepQ sl3_fund_q(const RingConfig& cfg) {
  Sl3RepQ rep = sl3_sym_irrep_q(cfg, 1);
  rep.label = "fund";
  return rep;
}

Sl3Composite e3f3(const Sl3RepQ& rep) {
  const RingConfig& cfg = rep.ring;
  const Scalar q = q_pow(cfg, 1);
  const Scalar qinv = q_pow(cfg, -1);

  Sl3Composite comp;
  comp.e3 = rep.e1 * rep.e2 - ExactMatrix(qinv * (rep.e2 * rep.e1));
  comp.f3 = rep.f2 * rep.f1 - ExactMatrix(q * (rep.f1 * rep.f2));

  for (int i = 1; i <= 2; ++i)
    require(mat_eq(ExactMatrix(rep.kpow(i, 1) * comp.e3),
                   ExactMatrix(q * (comp.e3 * rep.kpow(i, 1)))),
            "q^{h_i} e3 = e3 q^{h_i + 1}");

  std::vector<Scalar> d(rep.dim);
  for (int k = 0; k < rep.dim; ++k)
    d[k] = q_int(cfg, h_weight(rep.basis[k], 1) + h_weight(rep.basis[k], 2));
  require(mat_eq(ExactMatrix(commutator(comp.e3, comp.f3)), diag_mat(d)),
          "[e3,f3] = [h1+h2]");

  require(mat_eq(ExactMatrix(commutator(comp.e3, rep.f1)),
                 ExactMatrix(-ExactMatrix(rep.e2 * rep.kpow(1, -1)))),
          "[e3,f1] = -e2 q^{-h1}");
  require(mat_eq(ExactMatrix(commutator(comp.e3, rep.f2)),
                 ExactMatrix(rep.kpow(2, 1) * rep.e1)),
          "[e3,f2] = q^{h2} e1");
  require(mat_eq(ExactMatrix(rep.e1 * comp.e3), ExactMatrix(q * (comp.e3 * rep.e1))),
          "e1 e3 = q e3 e1");
  require(mat_eq(ExactMatrix(rep.e2 * comp.e3),
                 ExactMatrix(qinv * (comp.e3 * rep.e2))),
          "e2 e3 = q^{-1} e3 e2");
  return comp;
}

ExactMatrix build_rq_sl3(const Sl3RepQ& rep) {
  const RingConfig& cfg = rep.ring;
  Sl3Composite comp = e3f3(rep);

  const Scalar lam =
      q_pow(cfg, Rational(-1, 2)) * (q_pow(cfg, 1) - q_pow(cfg, -1));
  ExactMatrix L12 = lam * (rep.kpow(1, Rational(-1, 2)) * rep.f1);
  ExactMatrix L23 = lam * (rep.kpow(2, Rational(-1, 2)) * rep.f2);
  // The Cartan factor sits to the left of the composite lowering generator,
  // matching the simple-root terms; only this ordering passes the 27-dim
  // Yang-Baxter check and contracts onto the closed h-deformed form.
  ExactMatrix L13 = lam * (rep.kpow_comb(Rational(-1, 2), Rational(-1, 2)) * comp.f3);

  ExactMatrix K1 = rep.kpow_comb(Rational(2, 3), Rational(1, 3));
  ExactMatrix K2 = rep.kpow_comb(Rational(-1, 3), Rational(1, 3));
  ExactMatrix K3 = rep.kpow_comb(Rational(-1, 3), Rational(-2, 3));

  ExactMatrix Z = zero_mat<Scalar>(rep.dim, rep.dim);
  return from_blocks<Scalar>({{K1, ExactMatrix(K1 * L12), ExactMatrix(K1 * L13)},
                              {Z, K2, ExactMatrix(K2 * L23)},
                              {Z, Z, K3}});
}

ExactMatrix build_g_sl3(const Sl3RepQ& rep) {
  const Scalar et = eta(rep.ring);
  Sl3RepQ fund = sl3_fund_q(rep.ring);
  ExactMatrix gf = qexp(rep.ring, e3f3(fund).e3, et);
  ExactMatrix gr = qexp(rep.ring, e3f3(rep).e3, et);
  return kron(gf, gr);
}

ContractionReport contract_sl3(const Sl3RepQ& rep) {
  ExactMatrix R = build_rq_sl3(rep);
  ExactMatrix G = build_g_sl3(rep);
  std::ostringstream src;
  src << "sl3 (fund x " << rep.label << ") contraction";
  return contract(R, G, src.str());
}

Sl3Classical sl3_classical(const Sl3RepQ& rep) {
  Sl3Classical cl;
  cl.n = rep.n;
  cl.dim = rep.dim;
  auto take = [](const ExactMatrix& A, const char* what) {
    ContractionReport r = limit_mat(A);
    if (!r.finite()) throw Error(std::string("generator has no classical limit: ") + what);
    return *r.limit;
  };
  cl.e1 = take(rep.e1, "e1");
  cl.e2 = take(rep.e2, "e2");
  cl.f1 = take(rep.f1, "f1");
  cl.f2 = take(rep.f2, "f2");
  std::vector<HPoly> d1(rep.dim), d2(rep.dim);
  for (int k = 0; k < rep.dim; ++k) {
    d1[k] = HPoly(Rational(h_weight(rep.basis[k], 1)));
    d2[k] = HPoly(Rational(h_weight(rep.basis[k], 2)));
  }
  cl.h1 = diag_mat(d1);
  cl.h2 = diag_mat(d2);
  cl.e3 = commutator(cl.e1, cl.e2);
  cl.f3 = commutator(cl.f2, cl.f1);

  // The classical composites must be the limits of the q-composites.
  Sl3Composite comp = e3f3(rep);
  require(mat_eq(cl.e3, take(comp.e3, "e3")), "classical e3 is the limit of e3");
  require(mat_eq(cl.f3, take(comp.f3, "f3")), "classical f3 is the limit of f3");

  require(mat_eq(LimitMatrix(commutator(cl.e1, cl.f1)), cl.h1), "[e1,f1] = h1");
  require(mat_eq(LimitMatrix(commutator(cl.e2, cl.f2)), cl.h2), "[e2,f2] = h2");
  const LimitMatrix* es[2] = {&cl.e1, &cl.e2};
  const LimitMatrix* fs[2] = {&cl.f1, &cl.f2};
  const LimitMatrix* hs[2] = {&cl.h1, &cl.h2};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      require(mat_eq(LimitMatrix(commutator(*hs[i], *es[j])),
                     LimitMatrix(HPoly(Rational(kCartan[i][j])) * (*es[j]))),
              "[h_i, e_j] = a_ij e_j");
      require(mat_eq(LimitMatrix(commutator(*hs[i], *fs[j])),
                     LimitMatrix(HPoly(Rational(-kCartan[i][j])) * (*fs[j]))),
              "[h_i, f_j] = -a_ij f_j");
    }
  return cl;
}

LimitMatrix rh_closed_sl3(const Sl3Classical& cl) {
  const HPoly hh = HPoly::h();
  LimitMatrix he3 = hh * cl.e3;
  auto [T, Tinv] = t_from_nilpotent(he3);
  LimitMatrix Thalf = t_pow(T, Rational(1, 2));
  LimitMatrix Tmhalf = t_pow(T, Rational(-1, 2));

  LimitMatrix hsum = cl.h1 + cl.h2;
  LimitMatrix B12 = LimitMatrix(HPoly::h(1, Rational(2)) * (Tmhalf * cl.e2));
  LimitMatrix B23 = LimitMatrix(HPoly::h(1, Rational(-2)) * (Thalf * cl.e1));
  LimitMatrix B13 =
      LimitMatrix(HPoly::h(1, Rational(-1, 2)) * ((T + Tinv) * hsum)) +
      LimitMatrix(HPoly::h(1, Rational(1, 2)) * (T - Tinv));

  LimitMatrix I = identity_mat<HPoly>(cl.dim);
  LimitMatrix Z = zero_mat<HPoly>(cl.dim, cl.dim);
  return from_blocks<HPoly>({{T, B12, B13}, {Z, I, B23}, {Z, Z, Tinv}});
}

RelationReport verify_sl3_qexp_identities(const Sl3RepQ& rep) {
  const RingConfig& cfg = rep.ring;
  RelationReport report;

  auto add_exact = [&](const std::string& name, const ExactMatrix& lhs,
                       const ExactMatrix& rhs) {
    RelationCheck c;
    c.name = name;
    ExactMatrix res = lhs - rhs;
    c.pass = is_zero_mat(res);
    ContractionReport lim = limit_mat(res);
    if (lim.finite()) c.residual = *lim.limit;
    report.checks.push_back(std::move(c));
  };
  Sl3Composite comp = e3f3(rep);
  const Scalar et = eta(cfg);
  const Scalar q = q_pow(cfg, 1);
  const Scalar qinv = q_pow(cfg, -1);
  ExactMatrix g = qexp(cfg, comp.e3, et);
  ExactMatrix gq = qexp(cfg, comp.e3, Scalar(q * et));
  ExactMatrix gqi = qexp(cfg, comp.e3, Scalar(qinv * et));
  ExactMatrix ginv = inv_unipotent(g);

  add_exact("e1 Eq(eta e3) = Eq(q eta e3) e1", ExactMatrix(rep.e1 * g),
            ExactMatrix(gq * rep.e1));
  add_exact("e2 Eq(eta e3) = Eq(eta e3 / q) e2", ExactMatrix(rep.e2 * g),
            ExactMatrix(gqi * rep.e2));
  add_exact("[Eq(eta e3), f1] = -eta Eq(eta e3 / q) e2 q^{-h1}",
            ExactMatrix(commutator(g, rep.f1)),
            ExactMatrix(-ExactMatrix(et * (gqi * rep.e2 * rep.kpow(1, -1)))));
  add_exact("[Eq(eta e3), f2] = eta Eq(q eta e3) q^{h2} e1",
            ExactMatrix(commutator(g, rep.f2)),
            ExactMatrix(et * (gq * rep.kpow(2, 1) * rep.e1)));
  {
    const Scalar coef = et * (q - qinv).inverse();
    add_exact(
        "[Eq(eta e3), f3] = eta/(q - 1/q) (Eq(q eta e3) q^{h1+h2} - Eq(eta e3 / q) q^{-h1-h2})",
        ExactMatrix(commutator(g, comp.f3)),
        ExactMatrix(coef * (ExactMatrix(gq * rep.kpow_comb(1, 1)) -
                            ExactMatrix(gqi * rep.kpow_comb(-1, -1)))));
  }

  ExactMatrix that_p = ginv * gq;   // T_(+1) before the limit
  ExactMatrix that_m = ginv * gqi;  // T_(-1) before the limit
  ExactMatrix K1 = rep.kpow_comb(Rational(2, 3), Rational(1, 3));
  ExactMatrix K2 = rep.kpow_comb(Rational(-1, 3), Rational(1, 3));
  ExactMatrix K3 = rep.kpow_comb(Rational(-1, 3), Rational(-2, 3));
  add_exact("g^{-1} q^{(2h1+h2)/3} g = T_(+1) q^{(2h1+h2)/3}",
            ExactMatrix(ginv * (K1 * g)), ExactMatrix(that_p * K1));
  add_exact("g^{-1} q^{(h2-h1)/3} g = q^{(h2-h1)/3}", ExactMatrix(ginv * (K2 * g)),
            K2);
  add_exact("g^{-1} q^{-(h1+2h2)/3} g = T_(-1) q^{-(h1+2h2)/3}",
            ExactMatrix(ginv * (K3 * g)), ExactMatrix(that_m * K3));

  Sl3Classical cl = sl3_classical(rep);
  auto [Tcl, Tcl_inv] = t_from_nilpotent(LimitMatrix(HPoly::h() * cl.e3));
  {
    ContractionReport lp = limit_mat(that_p, "limit of T_(+1)");
    ContractionReport lm = limit_mat(that_m, "limit of T_(-1)");
    RelationCheck cp;
    cp.name = "lim T_(+1) = h e3 + sqrt(1 + (h e3)^2)";
    if (lp.finite()) {
      cp.residual = LimitMatrix(*lp.limit - Tcl);
      cp.pass = is_zero_mat(cp.residual);
    }
    report.checks.push_back(std::move(cp));
    RelationCheck cm;
    cm.name = "lim T_(-1) = -h e3 + sqrt(1 + (h e3)^2)";
    if (lm.finite()) {
      cm.residual = LimitMatrix(*lm.limit - Tcl_inv);
      cm.pass = is_zero_mat(cm.residual);
    }
    report.checks.push_back(std::move(cm));
  }
  return report;
}

}  // namespace qh
