#pragma once

#include <iosfwd>
#include <string>

#include "qh/scalar.hpp"

namespace qh {

/// Canonical string forms. A Scalar prints as a sum of terms
///   (<laurent num>)/(<den poly>)*h^<k>
/// in ascending h-power, Laurent polynomials with exponents descending,
/// e.g. "(u^6 + u^-6)/(1)*h^0". Zero prints as "(0)/(1)*h^0".
/// parse_scalar round-trips this form bit-exactly.
std::string to_string(const Rational& r);
std::string to_string(const LaurentPoly& p);
std::string to_string(const RatFun& f);
std::string to_string(const Scalar& s);
std::string to_string(const HPoly& p);

LaurentPoly parse_laurent(const std::string& s);
Scalar parse_scalar(const std::string& s);

std::ostream& operator<<(std::ostream& os, const Rational& r);
std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);
std::ostream& operator<<(std::ostream& os, const RatFun& f);
std::ostream& operator<<(std::ostream& os, const Scalar& s);
std::ostream& operator<<(std::ostream& os, const HPoly& p);

}  // namespace qh
