#include "comprat/study.hpp"

#include <algorithm>
#include <stdexcept>

#include "comprat/approximant.hpp"
#include "comprat/balance.hpp"
#include "comprat/errors.hpp"
#include "comprat/scan.hpp"
#include "comprat/theory.hpp"

namespace comprat {

AffineFit ols_fit(const std::vector<Real>& xs, const std::vector<Real>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2) {
        throw std::domain_error("ols_fit: need two or more paired samples");
    }
    long bits = PrecisionContext::kMinBits;
    for (const Real& x : xs) bits = std::max(bits, x.precision_bits());
    const long n = static_cast<long>(xs.size());
    Real mx(0L, bits), my(0L, bits);
    for (const Real& x : xs) mx += x;
    for (const Real& y : ys) my += y;
    mx = mx / n;
    my = my / n;
    Real sxx(0L, bits), sxy(0L, bits), syy(0L, bits);
    for (long i = 0; i < n; ++i) {
        Real dx = xs[i] - mx;
        Real dy = ys[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    AffineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    Real ssr(0L, bits);
    for (long i = 0; i < n; ++i) {
        Real r = ys[i] - (fit.slope * xs[i] + fit.intercept);
        ssr += r * r;
    }
    fit.r_squared = 1L - ssr / syy;
    return fit;
}

ConvergenceTable convergence_study(int p, int k_min, int k_max, const PrecisionContext& ctx,
                                   const StudyOptions& opts) {
    if (k_min < 1) throw std::domain_error("convergence_study: k_min must be >= 1");
    if (k_max < k_min) throw std::domain_error("convergence_study: k_max must be >= k_min");
    const long bits = ctx.bits();
    Real noise_floor = ctx.pow2(-(bits - 20));
    Real rel_tol = ctx.make(opts.balance_rel_tol);

    ConvergenceTable table;
    table.c = exponent_c(p, ctx);
    table.precision_bits = bits;
    std::vector<Real> xs, ys;
    for (int k = k_min; k <= k_max; ++k) {
        BalanceResult bal;
        try {
            bal = balance_alpha(p, k, rel_tol, ctx);
        } catch (const nonconvergence_error&) {
            // the balanced alpha sits below the resolution of ctx
            throw precision_insufficient_error(
                "convergence_study: balanced alpha at k=" + std::to_string(k) +
                " is below the resolution of " + std::to_string(bits) +
                "-bit arithmetic; raise significand_bits");
        }
        Approximant a = make_approximant(p, bal.alpha, k, ctx);
        ErrorReport rep = scan_abs_error(a, ctx.make(0.0), ctx.make(1.0), opts.samples);
        if (!(rep.max_err > noise_floor)) {
            throw precision_insufficient_error(
                "convergence_study: error at k=" + std::to_string(k) +
                " is below the resolution of " + std::to_string(bits) +
                "-bit arithmetic; raise significand_bits");
        }
        if (!table.rows.empty() && !(rep.max_err < table.rows.back().epsilon)) {
            throw precision_insufficient_error(
                "convergence_study: error column failed to decrease at k=" + std::to_string(k) +
                "; raise significand_bits");
        }
        StudyRow row;
        row.k = k;
        row.alpha = bal.alpha;
        row.epsilon = rep.max_err;
        row.degree = pow_si(Real(static_cast<long>(p), bits), k - 1);
        row.p_to_ck = exp(table.c * Real(static_cast<long>(k), bits) *
                          log(Real(static_cast<long>(p), bits)));
        row.log_eps = log(rep.max_err);
        xs.push_back(row.p_to_ck);
        ys.push_back(row.log_eps);
        table.rows.push_back(std::move(row));
    }
    table.fit = ols_fit(xs, ys);
    return table;
}

Real newton_baseline(int p, int k, const Real& x, const PrecisionContext& ctx) {
    if (p < 2) throw std::domain_error("newton_baseline: p must be >= 2");
    if (k < 0) throw std::domain_error("newton_baseline: k must be >= 0");
    const long bits = ctx.bits();
    Real xw = ctx.round(x);
    if (xw < Real(0L, bits)) throw std::domain_error("newton_baseline: x must be >= 0");
    Real f(1L, bits);
    for (int j = 0; j < k; ++j) {
        f = (f * static_cast<long>(p - 1) + xw / pow_si(f, p - 1)) / static_cast<long>(p);
    }
    return f;
}

long empirical_k(int p, const Real& eps_target, const PrecisionContext& ctx, long k_cap) {
    Real rel_tol = ctx.make(1e-3);
    for (long k = 1; k <= k_cap; ++k) {
        BalanceResult bal = balance_alpha(p, static_cast<int>(k), rel_tol, ctx);
        if (bal.epsilon <= eps_target) return k;
    }
    throw nonconvergence_error("empirical_k: k_cap exhausted before reaching target");
}

long calibrate_k2_tilde(int p, const std::vector<Real>& eps_grid, const PrecisionContext& ctx) {
    long best = 0;
    bool first = true;
    for (const Real& eps : eps_grid) {
        long base = predict_k(p, eps, 0, ctx);
        long emp = empirical_k(p, eps, ctx);
        long need = emp - base;
        if (first || need > best) {
            best = need;
            first = false;
        }
    }
    return best;
}

long default_k2_tilde(int p) {
    // fitted once per p over eps in {1e-4, 1e-8, 1e-12}; see calibrate_k2_tilde
    switch (p) {
        case 2: return -2;
        case 3: return -2;
        case 5: return -4;
        default: return 0;
    }
}

} // namespace comprat
