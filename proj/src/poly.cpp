#include "comprat/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace comprat {

namespace {

// Trim structural-zero trailing coefficients in place.
void normalize(std::vector<Real>& c, long bits) {
    if (c.empty()) return;
    Real maxmag(0L, bits);
    for (const Real& v : c) maxmag = max(maxmag, abs(v));
    if (maxmag.is_zero()) {
        c.clear();
        return;
    }
    Real threshold = mul_2si(maxmag, -(bits / 2));
    while (!c.empty() && (c.back().is_zero() || abs(c.back()) < threshold)) c.pop_back();
}

long max_bits(const Poly& a, const Poly& b) {
    long bits = PrecisionContext::kMinBits;
    for (const Real& v : a.coeffs()) bits = std::max(bits, v.precision_bits());
    for (const Real& v : b.coeffs()) bits = std::max(bits, v.precision_bits());
    return bits;
}

} // namespace

Poly::Poly(std::vector<Real> coeffs, long bits) : c_(std::move(coeffs)) { normalize(c_, bits); }

Poly Poly::one(long bits) { return Poly({Real(1L, bits)}, bits); }

Poly Poly::x(long bits) { return Poly({Real(0L, bits), Real(1L, bits)}, bits); }

Poly Poly::constant(const Real& c) { return Poly({c}, c.precision_bits()); }

Poly poly_mul(const Poly& a, const Poly& b) {
    long bits = max_bits(a, b);
    if (a.is_zero() || b.is_zero()) return Poly();
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    std::vector<Real> out(ac.size() + bc.size() - 1, Real(0L, bits));
    for (std::size_t i = 0; i < ac.size(); ++i) {
        for (std::size_t j = 0; j < bc.size(); ++j) {
            out[i + j] += ac[i] * bc[j];
        }
    }
    return Poly(std::move(out), bits);
}

Poly poly_pow(const Poly& a, long e) {
    if (e < 0) throw std::domain_error("poly_pow: exponent must be >= 0");
    long bits = max_bits(a, a);
    Poly acc = Poly::one(bits);
    for (long i = 0; i < e; ++i) acc = poly_mul(acc, a);
    return acc;
}

Poly poly_scale(const Poly& a, const Real& s) {
    long bits = std::max(max_bits(a, a), s.precision_bits());
    std::vector<Real> out;
    out.reserve(a.coeffs().size());
    for (const Real& v : a.coeffs()) out.push_back(v * s);
    return Poly(std::move(out), bits);
}

Poly poly_add(const Poly& a, const Poly& b) {
    long bits = max_bits(a, b);
    std::vector<Real> out(std::max(a.coeffs().size(), b.coeffs().size()), Real(0L, bits));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) out[i] += a.coeffs()[i];
    for (std::size_t i = 0; i < b.coeffs().size(); ++i) out[i] += b.coeffs()[i];
    return Poly(std::move(out), bits);
}

Real poly_eval(const Poly& a, const Real& x) {
    if (a.is_zero()) return Real(0L, x.precision_bits());
    const auto& c = a.coeffs();
    Real acc = c.back();
    for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * x + c[i];
    return acc;
}

Complex poly_eval(const Poly& a, const Complex& x) {
    if (a.is_zero()) return Complex(Real(0L, x.re.precision_bits()));
    const auto& c = a.coeffs();
    Complex acc(c.back());
    for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * x + Complex(c[i]);
    return acc;
}

} // namespace comprat
