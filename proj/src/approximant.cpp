#include "comprat/approximant.hpp"

#include <stdexcept>
#include <utility>

namespace comprat {

namespace {
void check_open_unit(const Real& alpha, const char* who) {
    if (alpha.is_nan() || alpha <= Real(0L, PrecisionContext::kMinBits) ||
        alpha >= Real(1L, PrecisionContext::kMinBits)) {
        throw std::domain_error(std::string(who) + ": alpha must lie in (0,1)");
    }
}
void check_p(int p, const char* who) {
    if (p < 2) throw std::domain_error(std::string(who) + ": p must be >= 2");
}
} // namespace

namespace detail {

Real mu_clamped(const Real& alpha, int p) {
    Real one(1L, alpha.precision_bits());
    if (alpha == one) return one;  // limit of mu as alpha -> 1
    // ((alpha - alpha^p) / ((p-1)(1 - alpha)))^(1/p)
    Real num = alpha - pow_si(alpha, p);
    Real den = (one - alpha) * static_cast<long>(p - 1);
    return rootn(num / den, static_cast<unsigned long>(p));
}

Real s_hat(const Real& x, const Real& mu_alpha, int p) {
    // p*x / ((p-1)*mu + mu^(1-p) * x^p)
    Real den = mu_alpha * static_cast<long>(p - 1) +
               pow_si(mu_alpha, 1 - p) * pow_si(x, p);
    return (x * static_cast<long>(p)) / den;
}

Real alpha_step_clamped(const Real& alpha, int p) {
    Real one(1L, alpha.precision_bits());
    if (alpha == one) return one;  // fixed point
    return s_hat(alpha, mu_clamped(alpha, p), p);
}

} // namespace detail

Real mu(const Real& alpha, int p) {
    check_p(p, "mu");
    check_open_unit(alpha, "mu");
    return detail::mu_clamped(alpha, p);
}

Real alpha_step(const Real& alpha, int p) {
    check_p(p, "alpha_step");
    check_open_unit(alpha, "alpha_step");
    return detail::alpha_step_clamped(alpha, p);
}

Approximant::Approximant(int p, int k, PrecisionContext ctx, std::vector<Real> alphas,
                         std::vector<Real> mus)
    : p_(p), k_(k), ctx_(ctx), alphas_(std::move(alphas)), mus_(std::move(mus)) {}

Real Approximant::scale() const {
    const Real& ak = alphas_.back();
    return (ak * 2L) / (ak + 1L);
}

Approximant make_approximant(int p, const Real& alpha0, int k, const PrecisionContext& ctx) {
    check_p(p, "make_approximant");
    check_open_unit(alpha0, "make_approximant");
    if (k < 0) throw std::domain_error("make_approximant: k must be >= 0");

    std::vector<Real> alphas;
    std::vector<Real> mus;
    alphas.reserve(k + 1);
    mus.reserve(k);
    alphas.push_back(ctx.round(alpha0));
    for (int j = 0; j < k; ++j) {
        mus.push_back(detail::mu_clamped(alphas.back(), p));
        alphas.push_back(detail::alpha_step_clamped(alphas.back(), p));
    }
    return Approximant(p, k, ctx, std::move(alphas), std::move(mus));
}

Real eval_f(const Approximant& a, const Real& x) {
    const long bits = a.ctx().bits();
    Real zero(0L, bits);
    if (x < zero) throw std::domain_error("eval_f: x must be >= 0");
    const int p = a.p();
    if (x.is_zero()) {
        // closed product: f_{j+1}(0) = f_j(0) * ((p-1)/p) * mu_j
        Real f(1L, bits);
        Real ratio = Real(static_cast<long>(p - 1), bits) / static_cast<long>(p);
        for (const Real& m : a.mus()) f = f * ratio * m;
        return f;
    }
    Real f(1L, bits);
    Real xw = a.ctx().round(x);
    for (const Real& m : a.mus()) {
        // f <- ((p-1)*m*f + x / (m^(p-1) * f^(p-1))) / p
        Real t = xw / (pow_si(m, p - 1) * pow_si(f, p - 1));
        f = (m * static_cast<long>(p - 1) * f + t) / static_cast<long>(p);
    }
    return f;
}

Real eval_f_scaled(const Approximant& a, const Real& x) { return a.scale() * eval_f(a, x); }

Real rel_error_bound(const Approximant& a) {
    const Real& ak = a.alpha_k();
    return (1L - ak) / (1L + ak);
}

DomainRescaledEvaluator::DomainRescaledEvaluator(Approximant a, const Real& s)
    : a_(std::move(a)), s_(s), s_root_(proot(s, a_.p())) {}

Real DomainRescaledEvaluator::operator()(const Real& x) const {
    return s_root_ * eval_f_scaled(a_, x / s_);
}

DomainRescaledEvaluator rescale_domain(const Approximant& a, const Real& s) {
    if (s <= Real(0L, PrecisionContext::kMinBits)) {
        throw std::domain_error("rescale_domain: s must be > 0");
    }
    return DomainRescaledEvaluator(a, s);
}

Real proot(const Real& x, int p) {
    if (x < Real(0L, PrecisionContext::kMinBits)) {
        throw std::domain_error("proot: x must be >= 0");
    }
    return rootn(x, static_cast<unsigned long>(p));
}

} // namespace comprat
