#pragma once

#include "comprat/approximant.hpp"
#include "comprat/complexnum.hpp"

namespace comprat {

/**
 * Pure composite approximant to the p-sector function z/(z^p)^(1/p):
 * g_0(z) = z, g_{j+1} = s_hat(g_j, alpha_j); the scaled variant multiplies by
 * 2/(1+alpha_k). Evaluation on a ray of S_p reduces to the real segment [0,1]
 * times a phase, so the complex path is only needed off the positive ray.
 */
class SectorEvaluator {
public:
    explicit SectorEvaluator(Approximant a, bool scaled = true);

    const Approximant& approximant() const noexcept { return a_; }
    bool scaled() const noexcept { return scaled_; }

    /// Evaluate along the positive real ray.
    Real operator()(const Real& r) const;

    /// Full complex evaluation; throws singularity_error if an intermediate
    /// denominator vanishes (possible off S_p).
    Complex operator()(const Complex& z) const;

private:
    Approximant a_;
    bool scaled_;
};

Real eval_sector(const SectorEvaluator& s, const Real& r);
Complex eval_sector(const SectorEvaluator& s, const Complex& z);

} // namespace comprat
