#pragma once

#include "comprat/real.hpp"

namespace comprat {

struct BalanceResult {
    Real alpha;
    Real epsilon;   // (1 - alpha_k)/(1 + alpha_k) at the returned alpha
    long iterations = 0;
};

/// epsilon_k(alpha): the equioscillation level after k alpha-steps from alpha.
Real epsilon_after_k(int p, const Real& alpha, int k);

/// Solve 2*alpha = epsilon_k(alpha) by bisection on phi(alpha) =
/// 2*alpha - epsilon_k(alpha); stops once |phi| <= rel_tol * 2*alpha.
/// Throws nonconvergence_error if no bracket exists in (0,1).
BalanceResult balance_alpha(int p, int k, const Real& rel_tol, const PrecisionContext& ctx);

} // namespace comprat
