#include "qh/ratfun.hpp"

namespace qh {

RatFun::RatFun(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw NotInvertible("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = LaurentPoly(Rational(1));
    return;
  }
  // Pull monomial factors out of both sides; only the ordinary parts carry
  // nontrivial common factors.
  int a = num.min_exp();
  int b = den.min_exp();
  LaurentPoly n0 = num.shifted(-a);
  LaurentPoly d0 = den.shifted(-b);
  if (!d0.is_one()) {
    LaurentPoly g = gcd_poly(n0, d0);
    if (!g.is_one()) {
      n0 = div_exact(n0, g);
      d0 = div_exact(d0, g);
    }
  }
  auto [scale, dprim] = primitive_normalize(d0);
  num_ = n0.scaled(scale.inverse()).shifted(a - b);
  den_ = dprim;
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_, already_canonical{}); }

// The fast paths below construct results directly in canonical form. Each
// relies on a coprimality argument: nums are coprime to their own dens, the
// cross factors are handled explicitly, and products of integer-primitive
// polynomials stay primitive (Gauss).
RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.is_one() && b.den_.is_one()) {
    LaurentPoly num = a.num_ + b.num_;
    if (num.is_zero()) return RatFun();
    return RatFun(std::move(num), a.den_, RatFun::already_canonical{});
  }
  if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
  if (a.den_.is_one()) {
    LaurentPoly num = a.num_ * b.den_ + b.num_;
    if (num.is_zero()) return RatFun();
    return RatFun(std::move(num), b.den_, RatFun::already_canonical{});
  }
  if (b.den_.is_one()) {
    LaurentPoly num = a.num_ + b.num_ * a.den_;
    if (num.is_zero()) return RatFun();
    return RatFun(std::move(num), a.den_, RatFun::already_canonical{});
  }
  LaurentPoly g = gcd_poly(a.den_, b.den_);
  if (g.is_one()) {
    LaurentPoly num = a.num_ * b.den_ + b.num_ * a.den_;
    if (num.is_zero()) return RatFun();
    return RatFun(std::move(num), a.den_ * b.den_, RatFun::already_canonical{});
  }
  LaurentPoly da = div_exact(a.den_, g);
  LaurentPoly db = div_exact(b.den_, g);
  return RatFun(a.num_ * db + b.num_ * da, da * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return RatFun();
  if (a.den_.is_one() && b.den_.is_one())
    return RatFun(a.num_ * b.num_, a.den_, RatFun::already_canonical{});
  // Cross-reduce, then the product is canonical without another gcd.
  int ea = a.num_.min_exp();
  int eb = b.num_.min_exp();
  LaurentPoly na = a.num_.shifted(-ea);
  LaurentPoly nb = b.num_.shifted(-eb);
  LaurentPoly da = a.den_;
  LaurentPoly db = b.den_;
  if (!db.is_one()) {
    LaurentPoly g = gcd_poly(na, db);
    if (!g.is_one()) {
      na = div_exact(na, g);
      db = div_exact(db, g);
    }
  }
  if (!da.is_one()) {
    LaurentPoly g = gcd_poly(nb, da);
    if (!g.is_one()) {
      nb = div_exact(nb, g);
      da = div_exact(da, g);
    }
  }
  return RatFun((na * nb).shifted(ea + eb), da * db, RatFun::already_canonical{});
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw NotInvertible("inverse of zero rational function");
  return RatFun(den_, num_);
}

Rational RatFun::eval(const Rational& u0) const {
  Rational d = den_.eval(u0);
  if (d.is_zero()) throw EvaluationPole("denominator vanishes at evaluation point");
  return num_.eval(u0) / d;
}

RatFun::LimitAtOne RatFun::limit_at_one() const {
  LimitAtOne out;
  if (is_zero()) return out;
  int pole = multiplicity_at_one(den_);
  if (pole > 0) {
    // Canonical form keeps num and den coprime, so the numerator cannot also
    // vanish at u=1; the pole is genuine.
    out.finite = false;
    out.pole_order = pole;
    return out;
  }
  out.vanish_order = multiplicity_at_one(num_);
  out.value = out.vanish_order > 0 ? Rational(0)
                                   : num_.eval_at_one() / den_.eval_at_one();
  return out;
}

int RatFun::order_at_one() const {
  if (is_zero()) throw InvalidArgument("order_at_one of zero");
  return multiplicity_at_one(num_) - multiplicity_at_one(den_);
}

}  // namespace qh
