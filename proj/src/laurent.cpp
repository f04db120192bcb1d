#include "qh/laurent.hpp"

#include <algorithm>
#include <numeric>

namespace qh {

int LaurentPoly::min_exp() const {
  if (c_.empty()) throw InvalidArgument("min_exp of zero polynomial");
  return c_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (c_.empty()) throw InvalidArgument("max_exp of zero polynomial");
  return c_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : c_) r.c_[e] = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.c_) {
    auto it = c_.find(e);
    if (it == c_.end()) {
      c_[e] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) c_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.c_) {
    auto it = c_.find(e);
    if (it == c_.end()) {
      c_[e] = -c;
    } else {
      it->second -= c;
      if (it->second.is_zero()) c_.erase(it);
    }
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly();
  if (a.is_monomial()) {
    const auto& [e, c] = *a.c_.begin();
    return b.shifted(e).scaled(c);
  }
  if (b.is_monomial()) {
    const auto& [e, c] = *b.c_.begin();
    return a.shifted(e).scaled(c);
  }
  LaurentPoly r;
  for (const auto& [ea, ca] : a.c_)
    for (const auto& [eb, cb] : b.c_) {
      int e = ea + eb;
      auto it = r.c_.find(e);
      if (it == r.c_.end()) {
        Rational c = ca * cb;
        if (!c.is_zero()) r.c_[e] = c;
      } else {
        it->second += ca * cb;
        if (it->second.is_zero()) r.c_.erase(it);
      }
    }
  return r;
}

LaurentPoly LaurentPoly::shifted(int e) const {
  if (e == 0) return *this;
  LaurentPoly r;
  for (const auto& [k, c] : c_) r.c_[k + e] = c;
  return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& s) const {
  if (s.is_zero()) return LaurentPoly();
  if (s.is_one()) return *this;
  LaurentPoly r;
  for (const auto& [k, c] : c_) r.c_[k] = c * s;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned long e) const {
  LaurentPoly r(Rational(1));
  LaurentPoly base = *this;
  while (e) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

Rational LaurentPoly::eval(const Rational& u0) const {
  if (c_.empty()) return Rational(0);
  if (u0.is_zero()) {
    if (min_exp() < 0) throw EvaluationPole("evaluation at u=0 with negative exponents");
    return coeff(0);
  }
  Rational acc(0);
  for (const auto& [e, c] : c_) acc += c * u0.pow(e);
  return acc;
}

Rational LaurentPoly::eval_at_one() const {
  Rational acc(0);
  for (const auto& [e, c] : c_) acc += c;
  return acc;
}

std::vector<Rational> dense_coeffs(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  if (p.min_exp() < 0) throw InvalidArgument("dense view needs an ordinary polynomial");
  std::vector<Rational> v(p.max_exp() + 1, Rational(0));
  for (const auto& [e, c] : p.terms()) v[e] = c;
  return v;
}

LaurentPoly from_dense(const std::vector<Rational>& c) {
  LaurentPoly p;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) p.set_coeff(static_cast<int>(i), c[i]);
  return p;
}

int multiplicity_at_one(const LaurentPoly& p) {
  if (p.is_zero()) throw InvalidArgument("multiplicity of zero polynomial");
  // Monomial shifts are units at u=1, so drop them and work densely.
  std::vector<Rational> a = dense_coeffs(p.shifted(-p.min_exp()));
  int mult = 0;
  while (true) {
    Rational val(0);
    for (const auto& c : a) val += c;
    if (!val.is_zero()) break;
    // Synthetic division by (u-1); exactness is guaranteed by val == 0.
    std::vector<Rational> b(a.size() - 1, Rational(0));
    Rational carry(0);
    for (std::size_t i = a.size(); i-- > 1;) {
      carry = a[i] + carry;
      b[i - 1] = carry;
    }
    a = std::move(b);
    ++mult;
  }
  return mult;
}

LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw NotInvertible("division by zero polynomial");
  if (a.is_zero()) return LaurentPoly();
  if (b.is_monomial()) {
    const auto& [e, c] = *b.terms().begin();
    return a.shifted(-e).scaled(c.inverse());
  }
  int shift = a.min_exp() - b.min_exp();
  std::vector<Rational> num = dense_coeffs(a.shifted(-a.min_exp()));
  std::vector<Rational> den = dense_coeffs(b.shifted(-b.min_exp()));
  if (num.size() < den.size()) throw Error("non-exact polynomial division");
  std::vector<Rational> q(num.size() - den.size() + 1, Rational(0));
  Rational lead = den.back();
  for (std::size_t i = q.size(); i-- > 0;) {
    Rational f = num[i + den.size() - 1] / lead;
    q[i] = f;
    if (!f.is_zero())
      for (std::size_t k = 0; k < den.size(); ++k) num[i + k] -= f * den[k];
  }
  for (const auto& r : num)
    if (!r.is_zero()) throw Error("non-exact polynomial division");
  return from_dense(q).shifted(shift);
}

std::pair<Rational, LaurentPoly> primitive_normalize(const LaurentPoly& p) {
  if (p.is_zero()) throw InvalidArgument("primitive part of zero");
  Integer den_lcm(1);
  for (const auto& [e, c] : p.terms()) den_lcm = lcm_int(den_lcm, c.den());
  Integer num_gcd(0);
  for (const auto& [e, c] : p.terms())
    num_gcd = gcd_int(num_gcd, c.num() * (den_lcm / c.den()));
  Rational scale(num_gcd, den_lcm);
  if (p.terms().rbegin()->second.sign() < 0) scale = -scale;
  LaurentPoly prim = p.scaled(scale.inverse());
  return {scale, prim};
}

namespace {

using ZPoly = std::vector<Integer>;  // dense, index = exponent

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(ZPoly& p) {
  trim(p);
  if (p.empty()) return;
  Integer g(0);
  for (const auto& c : p) g = gcd_int(g, c);
  if (p.back() < 0) g = -g;
  if (g != 1)
    for (auto& c : p) c /= g;
}

}  // namespace

LaurentPoly gcd_poly(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return LaurentPoly();
  if (a.is_zero()) return primitive_normalize(b).second;
  if (b.is_zero()) return primitive_normalize(a).second;
  if (a.min_exp() < 0 || b.min_exp() < 0)
    throw InvalidArgument("gcd_poly needs ordinary polynomials");

  int u_factor = std::min(a.min_exp(), b.min_exp());
  if (a.is_monomial() || b.is_monomial()) return LaurentPoly::u(u_factor);

  LaurentPoly a0 = a.shifted(-a.min_exp());
  LaurentPoly b0 = b.shifted(-b.min_exp());

  // Both supports usually live on a sublattice (all exponents multiples of
  // some g > 1); substituting w = u^g shrinks the degrees the remainder
  // sequence has to chew through. Constant terms are nonzero after the shift,
  // so the lattice is the gcd of the nonzero exponents alone.
  int lattice = 0;
  for (const auto& [e, c] : a0.terms()) lattice = std::gcd(lattice, e);
  for (const auto& [e, c] : b0.terms()) lattice = std::gcd(lattice, e);
  if (lattice == 0) lattice = 1;

  auto compress = [lattice](const LaurentPoly& p) {
    ZPoly out(p.max_exp() / lattice + 1, Integer(0));
    LaurentPoly prim = primitive_normalize(p).second;
    for (const auto& [e, c] : prim.terms()) out[e / lattice] = c.num();
    return out;
  };
  ZPoly f = compress(a0);
  ZPoly g = compress(b0);
  if (f.size() < g.size()) std::swap(f, g);

  // Primitive polynomial remainder sequence over Z.
  while (true) {
    if (g.size() == 1) return LaurentPoly::u(u_factor);  // coprime aside from u^k
    ZPoly r = f;
    const Integer lg = g.back();
    const long dg = static_cast<long>(g.size()) - 1;
    long dr = static_cast<long>(r.size()) - 1;
    while (dr >= dg) {
      Integer top = r[dr];
      if (top != 0) {
        for (auto& c : r) c *= lg;
        for (long k = 0; k <= dg; ++k) r[dr - dg + k] -= top * g[k];
      }
      r.pop_back();
      trim(r);
      dr = static_cast<long>(r.size()) - 1;
    }
    if (r.empty()) {
      make_primitive(g);
      LaurentPoly out;
      for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i] != 0) out.set_coeff(static_cast<int>(i) * lattice, Rational(g[i]));
      return out.shifted(u_factor);
    }
    make_primitive(r);
    f = std::move(g);
    g = std::move(r);
  }
}

}  // namespace qh
