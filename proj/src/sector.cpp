#include "comprat/sector.hpp"

#include "comprat/errors.hpp"

namespace comprat {

SectorEvaluator::SectorEvaluator(Approximant a, bool scaled) : a_(std::move(a)), scaled_(scaled) {}

Real SectorEvaluator::operator()(const Real& r) const {
    const int p = a_.p();
    Real g = a_.ctx().round(r);
    for (const Real& m : a_.mus()) g = detail::s_hat(g, m, p);
    if (scaled_) g = g * 2L / (a_.alpha_k() + 1L);
    return g;
}

Complex SectorEvaluator::operator()(const Complex& z) const {
    const int p = a_.p();
    const long bits = a_.ctx().bits();
    Complex g(a_.ctx().round(z.re), a_.ctx().round(z.im));
    for (const Real& m : a_.mus()) {
        // s_hat(g, alpha) = p*g / ((p-1)*mu + mu^(1-p)*g^p)
        Complex den = Complex(m * static_cast<long>(p - 1)) +
                      Complex(pow_si(m, 1 - p)) * pow_ui(g, static_cast<unsigned long>(p));
        if (den.is_zero()) {
            throw singularity_error("eval_sector: intermediate denominator vanished (z off S_p)");
        }
        g = Complex(Real(static_cast<long>(p), bits)) * g / den;
    }
    if (scaled_) {
        Real s = Real(2L, bits) / (a_.alpha_k() + 1L);
        g = s * g;
    }
    return g;
}

Real eval_sector(const SectorEvaluator& s, const Real& r) { return s(r); }
Complex eval_sector(const SectorEvaluator& s, const Complex& z) { return s(z); }

} // namespace comprat
