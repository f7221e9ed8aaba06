#include "comprat/balance.hpp"

#include <stdexcept>

#include "comprat/approximant.hpp"
#include "comprat/errors.hpp"

namespace comprat {

Real epsilon_after_k(int p, const Real& alpha, int k) {
    Real a = alpha;
    for (int j = 0; j < k; ++j) a = detail::alpha_step_clamped(a, p);
    return (1L - a) / (1L + a);
}

BalanceResult balance_alpha(int p, int k, const Real& rel_tol, const PrecisionContext& ctx) {
    if (p < 2) throw std::domain_error("balance_alpha: p must be >= 2");
    if (k < 1) throw std::domain_error("balance_alpha: k must be >= 1");
    const long bits = ctx.bits();
    Real zero(0L, bits);
    Real one(1L, bits);
    if (!(rel_tol > zero && rel_tol < one)) {
        throw std::domain_error("balance_alpha: rel_tol must lie in (0,1)");
    }

    auto phi = [&](const Real& a) { return a * 2L - epsilon_after_k(p, a, k); };

    // The root sits near eps/2, which is exponentially small in k; square the
    // lower bracket end until it lands left of the root.
    Real lo = ctx.pow2(-(bits / 2));
    int widen = 0;
    while (!(phi(lo) < zero)) {
        if (++widen > 64 || lo.is_zero()) {
            throw nonconvergence_error("balance_alpha: no sign change bracket in (0,1)");
        }
        lo = lo * lo;
    }
    Real hi = one - ctx.pow2(-16);
    if (!(phi(hi) > zero)) {
        throw nonconvergence_error("balance_alpha: no sign change bracket in (0,1)");
    }

    // bisection in t = log2(alpha): the stopping test is relative in alpha,
    // so the exponent scale converges in O(log(bits)) steps regardless of the
    // root's magnitude
    Real ln2 = log(Real(2L, bits));
    Real t_lo = log(lo) / ln2;
    Real t_hi = log(hi) / ln2;
    const long max_iter = 4 * bits + 64;
    for (long it = 1; it <= max_iter; ++it) {
        Real t = (t_lo + t_hi) / 2L;
        Real mid = exp(t * ln2);
        Real v = phi(mid);
        if (abs(v) <= rel_tol * mid * 2L) {
            return BalanceResult{mid, epsilon_after_k(p, mid, k), it};
        }
        if (v < zero) {
            t_lo = t;
        } else {
            t_hi = t;
        }
    }
    throw nonconvergence_error("balance_alpha: iteration budget exhausted");
}

} // namespace comprat
