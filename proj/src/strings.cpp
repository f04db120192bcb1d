#include "qh/strings.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace qh {

std::string to_string(const Rational& r) { return r.str(); }

namespace {

void append_monomial(std::string& out, const Rational& mag, int e) {
  // mag is the absolute value of the coefficient; sign handled by the caller.
  if (e == 0) {
    out += mag.str();
    return;
  }
  if (!mag.is_one()) {
    out += mag.str();
    out += '*';
  }
  out += 'u';
  if (e != 1) {
    out += '^';
    out += std::to_string(e);
  }
}

}  // namespace

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    if (first) {
      if (c.sign() < 0) out += '-';
      first = false;
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    append_monomial(out, c.abs(), e);
  }
  return out;
}

std::string to_string(const RatFun& f) {
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

std::string to_string(const Scalar& s) {
  if (s.is_zero()) return "(0)/(1)*h^0";
  std::string out;
  bool first = true;
  for (int k = 0; k <= s.h_degree(); ++k) {
    if (s.coeff(k).is_zero()) continue;
    if (!first) out += " + ";
    first = false;
    out += to_string(s.coeff(k));
    out += "*h^";
    out += std::to_string(k);
  }
  return out;
}

std::string to_string(const HPoly& p) { return to_string(Scalar::from_hpoly(p)); }

namespace {

class Scanner {
 public:
  explicit Scanner(const std::string& s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& why) {
    throw ParseError(why + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }

  long integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected integer");
    return std::stol(s_.substr(start, pos_ - start));
  }

  Rational unsigned_rational() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected number");
    Integer num(s_.substr(start, pos_ - start));
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      std::size_t dstart = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ == dstart) fail("expected denominator");
      return Rational(num, Integer(s_.substr(dstart, pos_ - dstart)));
    }
    return Rational(num);
  }

  // coefficient and exponent of one monomial: num[/den]["*"u["^"exp]] | u["^"exp]
  std::pair<Rational, int> monomial() {
    Rational c(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = unsigned_rational();
      have_coeff = true;
    }
    bool star = accept('*');
    if (star || peek() == 'u') {
      if (peek() != 'u') fail("expected 'u'");
      ++pos_;
      int e = 1;
      if (accept('^')) e = static_cast<int>(integer());
      return {c, e};
    }
    if (!have_coeff) fail("expected monomial");
    return {c, 0};
  }

  LaurentPoly laurent() {
    LaurentPoly p;
    int sign = 1;
    if (accept('-'))
      sign = -1;
    else
      accept('+');
    while (true) {
      auto [c, e] = monomial();
      Rational coeff = sign < 0 ? -c : c;
      p.set_coeff(e, p.coeff(e) + coeff);
      skip_ws();
      if (accept('+')) {
        sign = 1;
      } else if (accept('-')) {
        sign = -1;
      } else {
        break;
      }
    }
    return p;
  }

  std::size_t pos() const { return pos_; }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(const std::string& s) {
  Scanner sc(s);
  LaurentPoly p = sc.laurent();
  if (!sc.done()) sc.fail("trailing input after polynomial");
  return p;
}

Scalar parse_scalar(const std::string& s) {
  Scanner sc(s);
  Scalar out;
  while (true) {
    sc.expect('(');
    LaurentPoly num = sc.laurent();
    sc.expect(')');
    sc.expect('/');
    sc.expect('(');
    LaurentPoly den = sc.laurent();
    sc.expect(')');
    sc.expect('*');
    sc.expect('h');
    sc.expect('^');
    long k = sc.integer();
    if (k < 0) sc.fail("negative h power");
    out += Scalar::h(static_cast<int>(k), RatFun(num, den));
    if (sc.done()) break;
    sc.expect('+');
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << to_string(r); }
std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, const RatFun& f) { return os << to_string(f); }
std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << to_string(s); }
std::ostream& operator<<(std::ostream& os, const HPoly& p) { return os << to_string(p); }

}  // namespace qh
