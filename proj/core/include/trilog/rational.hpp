#pragma once

// Exact arbitrary-precision rational arithmetic. Backed by
// boost::multiprecision; values are always stored in lowest terms with a
// positive denominator, which is exactly the canonical form the algebra
// layers rely on.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace trilog {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rational(long long num, long long den = 1) {
    if (den == 0) throw std::domain_error("division by zero");
    return Rational(num, den);
}

inline BigInt rat_num(const Rational& r) { return numerator(r); }
inline BigInt rat_den(const Rational& r) { return denominator(r); }

inline Rational rat_inv(const Rational& r) {
    if (r == 0) throw std::domain_error("division by zero");
    return 1 / r;
}

/// Factorial as an exact rational (used for the exp/log coefficient ladders).
inline Rational factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return Rational(f);
}

inline std::string rat_to_string(const Rational& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

}  // namespace trilog
