#pragma once

#include <vector>

#include "comprat/real.hpp"

namespace comprat {

struct StudyRow {
    int k = 0;
    Real alpha;     // balanced alpha
    Real epsilon;   // scanned max absolute error on [0,1]
    Real degree;    // p^(k-1), exact
    Real p_to_ck;   // p^(c*k), the fit abscissa
    Real log_eps;   // natural log of epsilon
};

struct AffineFit {
    Real slope;
    Real intercept;
    Real r_squared;
};

struct ConvergenceTable {
    std::vector<StudyRow> rows;
    AffineFit fit;  // log_eps against p_to_ck
    Real c;
    long precision_bits = 0;

    /// Fitted bound for a row: the affine model evaluated at its abscissa.
    /// The rate constants are existential, so the prediction is post-hoc.
    Real predicted_log_eps(const StudyRow& row) const {
        return fit.slope * row.p_to_ck + fit.intercept;
    }
};

struct StudyOptions {
    long samples = 10000;
    double balance_rel_tol = 1e-3;
};

/// Per-k balanced construction and [0,1] error scan, with the least-squares
/// fit in the (p^(ck), log eps) coordinates. Throws
/// precision_insufficient_error when the scanned error sinks below the
/// resolution of ctx.
ConvergenceTable convergence_study(int p, int k_min, int k_max, const PrecisionContext& ctx,
                                   const StudyOptions& opts = {});

/// Ordinary least squares of ys against xs.
AffineFit ols_fit(const std::vector<Real>& xs, const std::vector<Real>& ys);

/// Unscaled Newton iterate: f_{j+1} = ((p-1) f_j + x / f_j^(p-1)) / p, f_0 = 1.
Real newton_baseline(int p, int k, const Real& x, const PrecisionContext& ctx);

/// Smallest k whose balanced construction reaches eps_target.
long empirical_k(int p, const Real& eps_target, const PrecisionContext& ctx, long k_cap = 64);

/// Smallest integer making predict_k an upper bound on empirical_k over the
/// given epsilon grid.
long calibrate_k2_tilde(int p, const std::vector<Real>& eps_grid, const PrecisionContext& ctx);

/// Calibrated k2_tilde defaults (fitted once per p; see calibrate_k2_tilde).
long default_k2_tilde(int p);

} // namespace comprat
