#pragma once

#include "comprat/real.hpp"

namespace comprat {

// Rectangular complex scalar: a pair of high-precision reals with
// componentwise precision.
struct Complex {
    Real re;
    Real im;

    Complex() = default;
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(const Real& r) : re(r), im(0L, r.precision_bits()) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    friend Complex operator+(const Complex& a, const Complex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend Complex operator-(const Complex& a, const Complex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(const Real& a, const Complex& b) { return {a * b.re, a * b.im}; }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Real d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    friend Complex operator/(const Complex& a, const Real& b) { return {a.re / b, a.im / b}; }
};

inline Real abs(const Complex& z) { return hypot(z.re, z.im); }

inline Complex pow_ui(const Complex& z, unsigned long e) {
    Complex acc(Real(1L, z.re.precision_bits()), Real(0L, z.re.precision_bits()));
    Complex base = z;
    while (e > 0) {
        if (e & 1UL) acc = acc * base;
        e >>= 1UL;
        if (e > 0) base = base * base;
    }
    return acc;
}

// e^(i*theta) scaled by r.
inline Complex from_polar(const Real& r, const Real& theta) {
    Real s, c;
    sin_cos(theta, s, c);
    return {r * c, r * s};
}

} // namespace comprat
