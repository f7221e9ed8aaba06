#pragma once

#include <vector>

#include "comprat/real.hpp"

namespace comprat {

/// mu(alpha) = ((alpha - alpha^p) / ((p-1)(1 - alpha)))^(1/p). Throws
/// std::domain_error unless 0 < alpha < 1.
Real mu(const Real& alpha, int p);

/// One step of the alpha recursion:
/// H(alpha) = p*alpha / ((p-1)*mu + mu^(1-p)*alpha^p), in (alpha^(1-1/p), 1).
Real alpha_step(const Real& alpha, int p);

namespace detail {
// Limit-aware variants used by the internal iteration: at finite precision a
// sequence close to 1 eventually rounds to exactly 1, where the recursion is
// continued by its fixed point (mu(1) = H(1) = 1).
Real mu_clamped(const Real& alpha, int p);
Real alpha_step_clamped(const Real& alpha, int p);
// s_hat(x, alpha) = p*x / ((p-1)*mu + mu^(1-p)*x^p); alpha_step is
// s_hat(alpha, alpha), evaluated through this same code path.
Real s_hat(const Real& x, const Real& mu_alpha, int p);
} // namespace detail

/**
 * Composite rational approximant to x^(1/p) on [0,1]: the k-step recursion
 * together with its alpha sequence and cached mu values. Immutable after
 * construction; evaluation is pure, so concurrent use is safe.
 */
class Approximant {
public:
    int p() const noexcept { return p_; }
    int k() const noexcept { return k_; }
    const PrecisionContext& ctx() const noexcept { return ctx_; }
    const Real& alpha0() const { return alphas_.front(); }
    const Real& alpha_k() const { return alphas_.back(); }
    const std::vector<Real>& alphas() const noexcept { return alphas_; }
    const std::vector<Real>& mus() const noexcept { return mus_; }

    /// Scale factor of the equioscillating variant: 2*alpha_k / (1 + alpha_k).
    Real scale() const;

private:
    friend Approximant make_approximant(int p, const Real& alpha0, int k,
                                        const PrecisionContext& ctx);
    Approximant(int p, int k, PrecisionContext ctx, std::vector<Real> alphas,
                std::vector<Real> mus);

    int p_;
    int k_;
    PrecisionContext ctx_;
    std::vector<Real> alphas_;  // alpha_0 .. alpha_k
    std::vector<Real> mus_;     // mu(alpha_0) .. mu(alpha_{k-1})
};

Approximant make_approximant(int p, const Real& alpha0, int k, const PrecisionContext& ctx);

/// Unscaled f_k(x) for x >= 0; f_0 = 1. f_k(0) is evaluated by the closed
/// product formula f_{j+1}(0) = f_j(0) * ((p-1)/p) * mu(alpha_j).
Real eval_f(const Approximant& a, const Real& x);

/// Scaled variant: (2*alpha_k/(1+alpha_k)) * f_k(x). Its relative error on
/// [alpha0^p, 1] equioscillates at the level rel_error_bound(a).
Real eval_f_scaled(const Approximant& a, const Real& x);

/// (1 - alpha_k) / (1 + alpha_k).
Real rel_error_bound(const Approximant& a);

/// Evaluator for x^(1/p) on [0, s]: x -> s^(1/p) * f_scaled(x/s).
class DomainRescaledEvaluator {
public:
    DomainRescaledEvaluator(Approximant a, const Real& s);
    Real operator()(const Real& x) const;
    const Real& domain_scale() const noexcept { return s_; }

private:
    Approximant a_;
    Real s_;
    Real s_root_;
};

DomainRescaledEvaluator rescale_domain(const Approximant& a, const Real& s);

/// Reference p-th root under the approximant's precision context.
Real proot(const Real& x, int p);

} // namespace comprat
