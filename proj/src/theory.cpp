#include "comprat/theory.hpp"

#include <stdexcept>
#include <vector>

#include "comprat/approximant.hpp"
#include "comprat/errors.hpp"

namespace comprat {

Real exponent_c(int p, const PrecisionContext& ctx) {
    if (p < 2) throw std::domain_error("exponent_c: p must be >= 2");
    const long bits = ctx.bits();
    Real pr(static_cast<long>(p), bits);
    Real log2 = log(Real(2L, bits));
    Real num = log2 * log(pr / (p - 1));
    Real den = log(pr) * log(pr * 2L / (p - 1));
    return num / den;
}

Real exponent_c_hat(int p, const PrecisionContext& ctx) {
    if (p < 2) throw std::domain_error("exponent_c_hat: p must be >= 2");
    const long bits = ctx.bits();
    return log(Real(2L, bits)) / log(Real(static_cast<long>(p), bits));
}

Real contraction_delta(int p, const Real& alpha) {
    if (p < 2) throw std::domain_error("contraction_delta: p must be >= 2");
    return Real(static_cast<long>(p), alpha.precision_bits()) / 2L * (1L - alpha) / (1L + alpha);
}

long predict_k(int p, const Real& epsilon, long k2_tilde, const PrecisionContext& ctx) {
    if (p < 2) throw std::domain_error("predict_k: p must be >= 2");
    const long bits = ctx.bits();
    Real zero(0L, bits);
    Real one(1L, bits);
    Real eps = ctx.round(epsilon);
    if (!(eps > zero && eps < one)) {
        throw std::domain_error("predict_k: epsilon must lie in (0,1)");
    }
    Real two(2L, bits);
    Real inner = two / (eps * static_cast<long>(p));
    if (!(log(inner) > zero)) {
        throw std::domain_error("predict_k: epsilon too large, needs eps < 2/p");
    }
    Real pr(static_cast<long>(p), bits);
    Real t1 = log(log(two / eps)) / log(pr / (p - 1));
    Real t3 = log(log(inner)) / log(two);
    long k = (t1 + t3).to_long_ceil() + k2_tilde;
    return k < 0 ? 0 : k;
}

StageCounts stage_counts(int p, const Real& alpha, const Real& epsilon,
                         const PrecisionContext& ctx) {
    if (p < 2) throw std::domain_error("stage_counts: p must be >= 2");
    const long bits = ctx.bits();
    Real zero(0L, bits);
    Real one(1L, bits);
    Real a = ctx.round(alpha);
    Real eps = ctx.round(epsilon);
    if (!(a > zero && a < one)) throw std::domain_error("stage_counts: alpha must lie in (0,1)");
    if (!(eps > zero && eps < one)) {
        throw std::domain_error("stage_counts: epsilon must lie in (0,1)");
    }
    Real two(2L, bits);
    Real inv_e = 1L / ctx.e();

    StageCounts out;
    out.k1 = 0;
    if (a < inv_e) {
        Real pr(static_cast<long>(p), bits);
        Real t = log(log(1L / a)) / log(pr / (p - 1));
        out.k1 = t.to_long_ceil();
        if (out.k1 < 0) out.k1 = 0;
    }

    // alpha_star: smallest grid point from which the contraction inequality
    // holds on the verification grid through to 1
    const long ngrid = 1000;
    Real lo_bound = max(inv_e, Real(static_cast<long>(p - 2), bits) / (p + 2));
    std::vector<bool> ok(ngrid, false);
    Real half_p = Real(static_cast<long>(p), bits) / 2L;
    for (long i = 1; i < ngrid; ++i) {
        Real av = lo_bound + (one - lo_bound) * Real(i, bits) / ngrid;
        Real h = detail::alpha_step_clamped(av, p);
        Real lhs = (1L - h) / (1L + h);
        Real t = (1L - av) / (1L + av);
        Real rhs = half_p * t * t;
        ok[i] = lhs <= rhs;
    }
    long first = -1;
    for (long i = ngrid - 1; i >= 1; --i) {
        if (!ok[i]) break;
        first = i;
    }
    if (first < 0) {
        throw nonconvergence_error("stage_counts: no grid point satisfies the contraction bound");
    }
    out.alpha_star = lo_bound + (one - lo_bound) * Real(first, bits) / ngrid;

    // k3: ((p/2) t*)^(2^k3) <= (p/2) eps
    Real inner_eps = two / (eps * static_cast<long>(p));
    if (!(log(inner_eps) > zero)) {
        throw std::domain_error("stage_counts: epsilon too large, needs eps < 2/p");
    }
    Real inner_star = (two / static_cast<long>(p)) * (1L + out.alpha_star) / (1L - out.alpha_star);
    Real t3 = (log(log(inner_eps)) - log(log(inner_star))) / log(two);
    out.k3 = t3.to_long_ceil();
    if (out.k3 < 0) out.k3 = 0;
    return out;
}

} // namespace comprat
