#pragma once

#include <vector>

#include "comprat/complexnum.hpp"
#include "comprat/real.hpp"

namespace comprat {

/**
 * Dense univariate polynomial, coefficients in ascending degree. Normalized
 * form is empty (the zero polynomial) or free of structural-zero trailing
 * coefficients: a coefficient is a structural zero iff it is exactly zero or
 * smaller than 2^(-bits/2) times the largest coefficient magnitude.
 */
class Poly {
public:
    Poly() = default;
    Poly(std::vector<Real> coeffs, long bits);

    static Poly one(long bits);
    static Poly x(long bits);
    static Poly constant(const Real& c);

    bool is_zero() const noexcept { return c_.empty(); }
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Real>& coeffs() const noexcept { return c_; }
    const Real& leading() const { return c_.back(); }

private:
    std::vector<Real> c_;
};

Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_pow(const Poly& a, long e);
Poly poly_scale(const Poly& a, const Real& s);
Poly poly_add(const Poly& a, const Poly& b);
Real poly_eval(const Poly& a, const Real& x);
Complex poly_eval(const Poly& a, const Complex& x);

} // namespace comprat
