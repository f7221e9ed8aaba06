#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "comprat/approximant.hpp"
#include "comprat/sector.hpp"

namespace comprat {

enum class ErrorMetric { absolute, relative, weighted };

struct ErrorReport {
    Real max_err;
    Real arg_max;
    Real lo;
    Real hi;
    long samples = 0;
    bool refined = false;
    ErrorMetric metric = ErrorMetric::absolute;
};

using ScalarFn = std::function<Real(const Real&)>;

/// Equispaced grid on [lo, hi]; first and last points are exactly lo and hi.
std::vector<Real> sample_grid(const Real& lo, const Real& hi, long n);

/// Serial reference kernel: out[i] = f(xs[i]).
std::vector<Real> map_samples_serial(const ScalarFn& f, const std::vector<Real>& xs);

/// OpenMP kernel with the same contract; results are bitwise identical to the
/// serial reference for any worker count.
std::vector<Real> map_samples(const ScalarFn& f, const std::vector<Real>& xs);

/// Golden-section maximization of f on [a, b]; returns the best sampled point.
/// Iterates until the bracket width drops below 2^(-bits/4).
std::pair<Real, Real> golden_max(const ScalarFn& f, Real a, Real b, long bits);

/// Grid scan of |f| followed by golden-section refinement around the best
/// three grid maxima.
ErrorReport scan_max(const ScalarFn& abs_err, const Real& lo, const Real& hi, long n, long bits,
                     ErrorMetric metric, bool refine = true);

/// Max of |f_scaled(x) - x^(1/p)| over [lo, hi] \subseteq [0, 1].
ErrorReport scan_abs_error(const Approximant& a, const Real& lo, const Real& hi, long n_samples);

/// Max of |f_scaled(x) - x^(1/p)| / x^(1/p) over [alpha0^p, 1]; equals
/// rel_error_bound(a) up to the precision budget, attained at x = 1.
ErrorReport scan_rel_error(const Approximant& a, long n_samples);

/// Sign-alternating local extrema of the relative error on [alpha0^p, 1].
std::vector<std::pair<Real, Real>> equioscillation_points(const Approximant& a, long n_samples);

/// Weighted scan of |z(g(z) - sect_p(z))| over S_p (reduced to one ray) and
/// unweighted scan of |g - sect_p| over [alpha_cut, 1].
std::pair<ErrorReport, ErrorReport> sector_error_scan(const Approximant& a, const Real& alpha_cut,
                                                      long n_samples);

/// Sign alternations between successive extrema of g_scaled - 1 on
/// [alpha_cut, 1].
long sector_alternation_count(const Approximant& a, const Real& alpha_cut, long n_samples);

} // namespace comprat
