#include "comprat/rational_form.hpp"

#include <stdexcept>
#include <string>

#include "comprat/errors.hpp"

namespace comprat {

namespace {

long checked_target_degree(int p, int k, long cap, const char* who) {
    long deg = 1;
    for (int j = 0; j < k; ++j) {
        if (deg > cap / p) {
            throw expansion_cap_error(std::string(who) + ": degree p^k exceeds cap " +
                                      std::to_string(cap));
        }
        deg *= p;
    }
    return deg;
}

RationalForm monic_normalized(Poly num, Poly den, Real scale) {
    // Degree counting must be invariant to common scaling of num and den.
    Real lead = den.leading();
    return RationalForm{poly_scale(num, 1L / lead), poly_scale(den, 1L / lead), std::move(scale)};
}

} // namespace

RationalForm expand(const Approximant& a, bool scaled, long cap) {
    if (a.k() < 1) throw std::domain_error("expand: requires k >= 1");
    const int p = a.p();
    const long bits = a.ctx().bits();
    checked_target_degree(p, a.k() - 1, cap, "expand");

    // f = num/den with f_0 = 1; one step reads
    //   num' = (p-1)*mu^p*num^p + x*den^p,  den' = p*mu^(p-1)*num^(p-1)*den.
    Poly num = Poly::one(bits);
    Poly den = Poly::one(bits);
    Poly x = Poly::x(bits);
    for (const Real& m : a.mus()) {
        Poly num_pm1 = poly_pow(num, p - 1);
        Poly den_p = poly_pow(den, p);
        Poly t1 = poly_scale(poly_mul(num_pm1, num), pow_si(m, p) * static_cast<long>(p - 1));
        Poly t2 = poly_mul(x, den_p);
        Poly next_num = poly_add(t1, t2);
        Poly next_den = poly_scale(poly_mul(num_pm1, den),
                                   pow_si(m, p - 1) * static_cast<long>(p));
        num = std::move(next_num);
        den = std::move(next_den);
    }
    Real scale = scaled ? a.scale() : Real(1L, bits);
    return monic_normalized(std::move(num), std::move(den), std::move(scale));
}

RationalForm expand_sector(const Approximant& a, bool scaled, long cap) {
    if (a.k() < 1) throw std::domain_error("expand_sector: requires k >= 1");
    const int p = a.p();
    const long bits = a.ctx().bits();
    checked_target_degree(p, a.k(), cap, "expand_sector");

    // g = num/den with g_0 = z; one step reads
    //   num' = p*num*den^(p-1),  den' = (p-1)*mu*den^p + mu^(1-p)*num^p.
    Poly num = Poly::x(bits);
    Poly den = Poly::one(bits);
    for (const Real& m : a.mus()) {
        Poly den_pm1 = poly_pow(den, p - 1);
        Poly t1 = poly_scale(poly_mul(den_pm1, den), m * static_cast<long>(p - 1));
        Poly t2 = poly_scale(poly_pow(num, p), pow_si(m, 1 - p));
        Poly next_num = poly_scale(poly_mul(num, den_pm1), Real(static_cast<long>(p), bits));
        Poly next_den = poly_add(t1, t2);
        num = std::move(next_num);
        den = std::move(next_den);
    }
    Real scale = scaled ? Real(2L, bits) / (a.alpha_k() + 1L) : Real(1L, bits);
    return monic_normalized(std::move(num), std::move(den), std::move(scale));
}

} // namespace comprat
