#pragma once

#include "comprat/real.hpp"

namespace comprat {

/// Convergence exponent in the degree:
/// c = log 2 * log(p/(p-1)) / (log p * log(2p/(p-1))); c(2) = 1/2.
Real exponent_c(int p, const PrecisionContext& ctx);

/// Sector exponent log 2 / log p; strictly greater than exponent_c(p).
Real exponent_c_hat(int p, const PrecisionContext& ctx);

/// Contraction variable delta = (p/2)(1-alpha)/(1+alpha); one alpha step
/// squares it (up to lower order) once alpha is past the contraction onset.
Real contraction_delta(int p, const Real& alpha);

/// Number of recursions sufficient for accuracy epsilon:
/// ceil( loglog(2/eps)/log(p/(p-1)) + loglog(2/(eps*p))/log 2 ) + k2_tilde,
/// clamped at 0. Monotone nonincreasing in epsilon.
long predict_k(int p, const Real& epsilon, long k2_tilde, const PrecisionContext& ctx);

struct StageCounts {
    long k1 = 0;        // steps to reach alpha >= 1/e
    Real alpha_star;    // onset of the contraction regime, located on a grid
    long k3 = 0;        // squaring-stage steps to reach epsilon
};

/// Staged iteration counts: k1 from the alpha^(1-1/p) lower bound, alpha_star
/// as the smallest grid point in (max{1/e, (p-2)/(p+2)}, 1) from which
/// (1-H(a))/(1+H(a)) <= (p/2)((1-a)/(1+a))^2 holds through to 1, and k3 from
/// the delta-squaring argument.
StageCounts stage_counts(int p, const Real& alpha, const Real& epsilon,
                         const PrecisionContext& ctx);

} // namespace comprat
