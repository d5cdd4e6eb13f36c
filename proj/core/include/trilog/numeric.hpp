#pragma once

// High-precision binary floats (128 fractional bits) and a small complex
// value type on top of them. 128 bits leaves ample headroom over the 1e-12
// residual checks for series-tail error.

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <stdexcept>
#include <string>

namespace trilog {

using BigFloat = boost::multiprecision::number<
    boost::multiprecision::backends::cpp_bin_float<
        128, boost::multiprecision::backends::digit_base_2>,
    boost::multiprecision::et_off>;

inline BigFloat pi_bf() { return boost::math::constants::pi<BigFloat>(); }

struct ComplexVal {
    BigFloat re{0}, im{0};

    ComplexVal() = default;
    ComplexVal(BigFloat r) : re(std::move(r)) {}
    ComplexVal(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    friend ComplexVal operator+(const ComplexVal& a, const ComplexVal& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexVal operator-(const ComplexVal& a, const ComplexVal& b) {
        return {a.re - b.re, a.im - b.im};
    }
    ComplexVal operator-() const { return {-re, -im}; }
    friend ComplexVal operator*(const ComplexVal& a, const ComplexVal& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ComplexVal operator/(const ComplexVal& a, const ComplexVal& b) {
        BigFloat n = b.re * b.re + b.im * b.im;
        if (n == 0) throw std::domain_error("division by zero");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    ComplexVal& operator+=(const ComplexVal& o) { return *this = *this + o; }
    ComplexVal& operator-=(const ComplexVal& o) { return *this = *this - o; }
    ComplexVal& operator*=(const ComplexVal& o) { return *this = *this * o; }

    ComplexVal operator/(long long k) const { return {re / k, im / k}; }
    friend ComplexVal operator*(const ComplexVal& a, long long k) { return {a.re * k, a.im * k}; }

    BigFloat abs() const {
        using boost::multiprecision::sqrt;
        return sqrt(re * re + im * im);
    }
    std::string str(unsigned digits = 20) const {
        return "(" + re.str(digits) + (im < 0 ? "" : "+") + im.str(digits) + "i)";
    }
};

/// 2*pi*i
inline ComplexVal two_pi_i() { return ComplexVal(BigFloat(0), 2 * pi_bf()); }

}  // namespace trilog
