#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace ncalg {

// Exact scalar arithmetic. Rational is always in lowest terms with a
// positive denominator; zero is canonically 0/1.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rational(long num, long den = 1) { return Rational(num, den); }

inline Integer num(const Rational &r) { return boost::multiprecision::numerator(r); }
inline Integer den(const Rational &r) { return boost::multiprecision::denominator(r); }

std::string to_string(const Rational &r);

} // namespace ncalg
