#include "qh/scalar.hpp"

#include <climits>

namespace qh {

HPoly HPoly::h(int power, const Rational& c) {
  if (power < 0) throw InvalidArgument("negative h power");
  HPoly p;
  if (!c.is_zero()) {
    p.c_.assign(power + 1, Rational(0));
    p.c_[power] = c;
  }
  return p;
}

HPoly HPoly::operator-() const {
  HPoly r;
  r.c_.reserve(c_.size());
  for (const auto& c : c_) r.c_.push_back(-c);
  return r;
}

HPoly& HPoly::operator+=(const HPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

HPoly& HPoly::operator-=(const HPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

HPoly operator*(const HPoly& a, const HPoly& b) {
  if (a.is_zero() || b.is_zero()) return HPoly();
  HPoly r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t k = 0; k < b.c_.size(); ++k) r.c_[i + k] += a.c_[i] * b.c_[k];
  }
  r.trim();
  return r;
}

HPoly HPoly::scaled(const Rational& c) const {
  if (c.is_zero()) return HPoly();
  HPoly r;
  r.c_.reserve(c_.size());
  for (const auto& x : c_) r.c_.push_back(x * c);
  return r;
}

HPoly HPoly::div_h() const {
  if (is_zero()) return HPoly();
  if (!c_[0].is_zero()) throw InvalidArgument("h division with nonzero constant term");
  HPoly r;
  r.c_.assign(c_.begin() + 1, c_.end());
  return r;
}

Rational HPoly::eval(const Rational& h0) const {
  Rational acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * h0 + c_[i];
  return acc;
}

Scalar Scalar::h(int power, const RatFun& c) {
  if (power < 0) throw InvalidArgument("negative h power");
  Scalar s;
  if (!c.is_zero()) {
    s.c_.assign(power + 1, RatFun());
    s.c_[power] = c;
  }
  return s;
}

Scalar Scalar::from_hpoly(const HPoly& p) {
  std::vector<RatFun> c;
  c.reserve(p.degree() + 1);
  for (int k = 0; k <= p.degree(); ++k) c.emplace_back(p.coeff(k));
  return Scalar(std::move(c));
}

const RatFun& Scalar::coeff(int k) const {
  static const RatFun zero;
  return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : zero;
}

Scalar Scalar::operator-() const {
  Scalar r;
  r.c_.reserve(c_.size());
  for (const auto& c : c_) r.c_.push_back(-c);
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return Scalar();
  Scalar r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, RatFun());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t k = 0; k < b.c_.size(); ++k) {
      if (b.c_[k].is_zero()) continue;
      r.c_[i + k] += a.c_[i] * b.c_[k];
    }
  }
  r.trim();
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw NotInvertible("inverse of zero");
  if (h_degree() != 0)
    throw NotInvertible("element with positive h-degree has no polynomial inverse");
  return Scalar(c_[0].inverse());
}

Rational Scalar::eval_numeric(const Rational& u0, const Rational& h0) const {
  Rational acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * h0 + c_[i].eval(u0);
  return acc;
}

ScalarLimit limit_q1(const Scalar& s) {
  ScalarLimit out;
  std::vector<Rational> coeffs;
  for (int k = 0; k <= s.h_degree(); ++k) {
    const RatFun& c = s.coeff(k);
    if (c.is_zero()) {
      coeffs.emplace_back(0);
      continue;
    }
    RatFun::LimitAtOne lim = c.limit_at_one();
    if (!lim.finite) {
      out.divergences.push_back({k, lim.pole_order});
      continue;
    }
    coeffs.push_back(lim.value);
  }
  if (out.divergences.empty()) out.value = HPoly(std::move(coeffs));
  return out;
}

int order_at_one(const Scalar& s) {
  if (s.is_zero()) return INT_MAX / 4;
  int ord = INT_MAX / 4;
  for (int k = 0; k <= s.h_degree(); ++k)
    if (!s.coeff(k).is_zero()) ord = std::min(ord, s.coeff(k).order_at_one());
  return ord;
}

}  // namespace qh
