#include "qh/h_realization.hpp"

#include "qh/linsolve.hpp"
#include "qh/series.hpp"

namespace qh {

namespace {

const HPoly kHalf = HPoly(Rational(1, 2));
const HPoly kH = HPoly::h();

LimitMatrix sqrt_one_plus(const LimitMatrix& Z) {
  // Terminating binomial series; Z nilpotent.
  return series_apply(sqrt1p_series(static_cast<int>(Z.rows())), Z);
}

}  // namespace

TPair t_closed(const Sl2RepClassical& rep) {
  LimitMatrix hJp = kH * rep.Jp;
  LimitMatrix S = sqrt_one_plus(LimitMatrix(hJp * hJp));
  return {LimitMatrix(hJp + S), LimitMatrix(S - hJp)};
}

LimitMatrix t_pow(const LimitMatrix& T, const Rational& alpha) {
  Rational two_alpha = alpha * Rational(2);
  if (!two_alpha.is_integer())
    throw InvalidArgument("t_pow needs an integer or half-integer exponent");
  long k2 = two_alpha.num().get_si();
  LimitMatrix base = k2 < 0 ? inv_unipotent(T) : T;
  long n = k2 < 0 ? -k2 : k2;  // |2 alpha|
  LimitMatrix acc = identity_mat<HPoly>(T.rows());
  for (long i = 0; i < n / 2; ++i) acc = acc * base;
  if (n % 2) {
    LimitMatrix N = base - identity_mat<HPoly>(T.rows());
    auto idx = nilpotency_index(N);
    if (!idx) throw NotUnipotent("t_pow needs a unipotent matrix");
    LimitMatrix half = series_apply(sqrt1p_series(*idx), N);
    acc = acc * half;
  }
  return acc;
}

HatTriple hat_map(const Sl2RepClassical& rep) {
  HatTriple t;
  t.rep = rep;
  TPair tp = t_closed(rep);
  t.T = tp.T;
  t.Tinv = tp.Tinv;
  LimitMatrix N = t.T - identity_mat<HPoly>(rep.dim);
  t.hX = series_apply(ln1p_series(rep.dim), N);
  t.H = kHalf * ((t.T + t.Tinv) * rep.J0);
  LimitMatrix J0sq = rep.J0 * rep.J0 - identity_mat<HPoly>(rep.dim);
  t.Y = rep.Jm - LimitMatrix(HPoly::h(2, Rational(1, 4)) * (rep.Jp * J0sq));
  return t;
}

TildeTriple tilde_map(const Sl2RepClassical& rep) {
  TildeTriple t;
  t.rep = rep;
  LimitMatrix A = LimitMatrix((kHalf * kH) * rep.Jp);  // (h/2) J+
  LimitMatrix I = identity_mat<HPoly>(rep.dim);
  t.T = (I + A) * inv_unipotent(LimitMatrix(I - A));
  t.Tinv = (I - A) * inv_unipotent(LimitMatrix(I + A));
  t.hX = series_apply(ln1p_series(rep.dim), LimitMatrix(t.T - I));
  t.H = rep.J0;
  LimitMatrix S = sqrt_one_plus(LimitMatrix(-(A * A)));
  t.Y = S * rep.Jm * S;
  return t;
}

LimitMatrix rh_from_realization(const LimitMatrix& Tplus, const LimitMatrix& Tminus,
                                const LimitMatrix& H) {
  LimitMatrix B = LimitMatrix((-kH) * H) + LimitMatrix((kHalf * kH) * (Tplus - Tminus));
  std::vector<std::vector<LimitMatrix>> grid(2);
  grid[0] = {Tplus, B};
  grid[1] = {zero_mat<HPoly>(H.rows(), H.cols()), Tminus};
  return from_blocks(grid);
}

LimitMatrix rh_closed_sl2(const Sl2RepClassical& rep) {
  TPair tp = t_closed(rep);
  LimitMatrix B = LimitMatrix((-kHalf * kH) * ((tp.T + tp.Tinv) * rep.J0)) +
                  LimitMatrix((kHalf * kH) * (tp.T - tp.Tinv));
  std::vector<std::vector<LimitMatrix>> grid(2);
  grid[0] = {tp.T, B};
  grid[1] = {zero_mat<HPoly>(rep.dim, rep.dim), tp.Tinv};
  return from_blocks(grid);
}

LimitMatrix universal_rh(const Sl2RepClassical& a, const Sl2RepClassical& b) {
  HatTriple ha = hat_map(a);
  HatTriple hb = hat_map(b);
  LimitMatrix THa = ha.T * ha.H;
  LimitMatrix THb = hb.T * hb.H;
  LimitMatrix M1 = -kron(ha.hX, THb);
  LimitMatrix M2 = kron(THa, hb.hX);
  auto expm = [](const LimitMatrix& M) {
    auto idx = nilpotency_index(M);
    if (!idx) throw NotNilpotent("universal exponent is not nilpotent");
    return series_apply(exp_series(*idx), M);
  };
  return expm(M1) * expm(M2);
}

namespace {

template <class Triple>
RelationReport verify_realization(const Triple& t, bool tilde) {
  RelationReport rep;
  const LimitMatrix I = identity_mat<HPoly>(t.rep.dim);
  auto add = [&rep](std::string name, const LimitMatrix& lhs, const LimitMatrix& rhs) {
    RelationCheck c;
    c.name = std::move(name);
    c.residual = lhs - rhs;
    c.pass = is_zero_mat(c.residual);
    rep.checks.push_back(std::move(c));
  };

  add("T*Tinv = 1", LimitMatrix(t.T * t.Tinv), I);
  // How T reaches down to the classical raising map differs per branch: the
  // square-root realization satisfies T - T^{-1} = 2h J+, the rational one the
  // Cayley form T - 1 = (h/2) J+ (T + 1).
  if (tilde)
    add("T - 1 = (h/2) J+ (T + 1)", LimitMatrix(t.T - I),
        LimitMatrix(LimitMatrix((kHalf * kH) * t.rep.Jp) * LimitMatrix(t.T + I)));
  else
    add("T - Tinv = 2h J+", LimitMatrix(t.T - t.Tinv),
        LimitMatrix((HPoly(2) * kH) * t.rep.Jp));
  add("[H,T] = T^2 - 1", commutator(t.H, t.T), LimitMatrix(t.T * t.T - I));
  add("[H,Tinv] = Tinv^2 - 1", commutator(t.H, t.Tinv), LimitMatrix(t.Tinv * t.Tinv - I));
  LimitMatrix cosh = kHalf * (t.T + t.Tinv);
  add("[H,Y] = -(Y cosh(hX) + cosh(hX) Y)", commutator(t.H, t.Y),
      LimitMatrix(-(t.Y * cosh + cosh * t.Y)));
  add("[hX,Y] = h H", commutator(t.hX, t.Y), LimitMatrix(kH * t.H));
  if (tilde) {
    LimitMatrix half_hX = kHalf * t.hX;
    add("tanh(hX/2) = (h/2) J+",
        series_apply(tanh_series(t.rep.dim), half_hX),
        LimitMatrix((kHalf * kH) * t.rep.Jp));
  } else {
    add("sinh(hX) = h J+", series_apply(sinh_series(t.rep.dim), t.hX),
        LimitMatrix(kH * t.rep.Jp));
  }
  // Exponential consistency of the stored pair with hX itself.
  add("exp(hX) = T", series_apply(exp_series(t.rep.dim), t.hX), t.T);
  add("exp(-hX) = Tinv", series_apply(exp_series(t.rep.dim), LimitMatrix(-t.hX)), t.Tinv);
  return rep;
}

}  // namespace

RelationReport verify_uh_algebra(const HatTriple& t) { return verify_realization(t, false); }
RelationReport verify_uh_algebra(const TildeTriple& t) { return verify_realization(t, true); }

namespace {

// R acting on factors (a,c) of V_a x V_b x V_c.
LimitMatrix embed_13(const LimitMatrix& R, int da, int db, int dc) {
  LimitMatrix out = zero_mat<HPoly>(da * db * dc, da * db * dc);
  for (int i = 0; i < da; ++i)
    for (int ip = 0; ip < da; ++ip)
      for (int l = 0; l < dc; ++l)
        for (int lp = 0; lp < dc; ++lp) {
          const HPoly& v = R(i * dc + l, ip * dc + lp);
          if (v.is_zero()) continue;
          for (int k = 0; k < db; ++k)
            out((i * db + k) * dc + l, (ip * db + k) * dc + lp) = v;
        }
  return out;
}

}  // namespace

YbeResult ybe_check(const LimitMatrix& Rab, const LimitMatrix& Rac,
                    const LimitMatrix& Rbc, int da, int db, int dc) {
  if (Rab.rows() != da * db || Rab.cols() != da * db)
    throw ShapeError("R_ab has the wrong shape");
  if (Rac.rows() != da * dc || Rac.cols() != da * dc)
    throw ShapeError("R_ac has the wrong shape");
  if (Rbc.rows() != db * dc || Rbc.cols() != db * dc)
    throw ShapeError("R_bc has the wrong shape");
  LimitMatrix R12 = kron(Rab, identity_mat<HPoly>(dc));
  LimitMatrix R23 = kron(identity_mat<HPoly>(da), Rbc);
  LimitMatrix R13 = embed_13(Rac, da, db, dc);
  YbeResult out;
  out.residual = LimitMatrix(R12 * R13 * R23 - R23 * R13 * R12);
  out.pass = is_zero_mat(out.residual);
  return out;
}

std::optional<LimitMatrix> gauge_relate(const LimitMatrix& R1, const LimitMatrix& R2,
                                        GaugeShape shape) {
  if (R1.rows() != R1.cols() || R2.rows() != R2.cols() || R1.rows() != R2.rows())
    throw ShapeError("gauge_relate needs square matrices of equal size");
  if (R1.rows() % 2 != 0) throw ShapeError("gauge_relate expects a doubled space");
  const int n = static_cast<int>(R1.rows()) / 2;

  std::vector<std::pair<int, int>> slots;
  if (shape == GaugeShape::Diagonal) {
    for (int i = 1; i < n; ++i) slots.push_back({i, i});
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) slots.push_back({i, j});
  }

  int deg = 0;
  for (Eigen::Index j = 0; j < R1.cols(); ++j)
    for (Eigen::Index i = 0; i < R1.rows(); ++i)
      deg = std::max({deg, R1(i, j).degree(), R2(i, j).degree()});
  const int D = deg;           // max h-degree of the gauge entries
  const int E = 2 * deg + 1;   // enough h-powers to pin every equation

  const LimitMatrix I2 = identity_mat<HPoly>(2 * n);
  auto embed_unit = [n](int r, int c) {
    LimitMatrix M = zero_mat<HPoly>(2 * n, 2 * n);
    for (int blk = 0; blk < 2; ++blk) M(blk * n + r, blk * n + c) = HPoly(1);
    return M;
  };

  // residual(M) = R1 (1 kron M) - (1 kron M) R2 is affine in M's entries.
  LimitMatrix res0 = R1 - R2;  // M = identity
  std::vector<LimitMatrix> dirs;
  dirs.reserve(slots.size());
  for (auto [r, c] : slots) {
    LimitMatrix Eu = embed_unit(r, c);
    dirs.push_back(LimitMatrix(R1 * Eu - Eu * R2));
  }

  const int unknowns = static_cast<int>(slots.size()) * (D + 1);
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  for (Eigen::Index i = 0; i < R1.rows(); ++i)
    for (Eigen::Index j = 0; j < R1.cols(); ++j)
      for (int e = 0; e <= E; ++e) {
        std::vector<Rational> row(unknowns, Rational(0));
        bool any = false;
        for (std::size_t u = 0; u < slots.size(); ++u)
          for (int d = 0; d <= D && d <= e; ++d) {
            Rational cf = dirs[u](i, j).coeff(e - d);
            if (!cf.is_zero()) any = true;
            row[u * (D + 1) + d] = cf;
          }
        Rational rhs = -res0(i, j).coeff(e);
        if (!any && rhs.is_zero()) continue;
        A.push_back(std::move(row));
        b.push_back(rhs);
      }

  auto sol = solve_linear(std::move(A), std::move(b));
  if (!sol) return std::nullopt;

  LimitMatrix M = identity_mat<HPoly>(n);
  for (std::size_t u = 0; u < slots.size(); ++u) {
    std::vector<Rational> coeffs(D + 1, Rational(0));
    for (int d = 0; d <= D; ++d) coeffs[d] = (*sol)[u * (D + 1) + d];
    HPoly delta{std::vector<Rational>(coeffs)};
    auto [r, c] = slots[u];
    if (r == c)
      M(r, c) = HPoly(1) + delta;  // diagonal slots perturb the identity
    else
      M(r, c) = delta;
  }

  if (shape == GaugeShape::Diagonal) {
    // The gauge must stay invertible over h-polynomials: constant, nonzero.
    for (int i = 0; i < n; ++i)
      if (M(i, i).degree() != 0 || M(i, i).coeff(0).is_zero()) return std::nullopt;
  }
  LimitMatrix IM = kron(identity_mat<HPoly>(2), M);
  if (!mat_eq<HPoly>(LimitMatrix(R1 * IM), LimitMatrix(IM * R2))) return std::nullopt;
  return M;
}

}  // namespace qh
