#include "comprat/scan.hpp"

#include <algorithm>
#include <stdexcept>

namespace comprat {

std::vector<Real> sample_grid(const Real& lo, const Real& hi, long n) {
    if (n < 2) throw std::domain_error("sample_grid: need n >= 2");
    long bits = std::max(lo.precision_bits(), hi.precision_bits());
    std::vector<Real> xs;
    xs.reserve(n);
    Real span = hi - lo;
    xs.push_back(lo);
    for (long i = 1; i + 1 < n; ++i) {
        xs.push_back(lo + span * Real(i, bits) / (n - 1));
    }
    xs.push_back(hi);
    return xs;
}

std::vector<Real> map_samples_serial(const ScalarFn& f, const std::vector<Real>& xs) {
    std::vector<Real> out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = f(xs[i]);
    return out;
}

std::vector<Real> map_samples(const ScalarFn& f, const std::vector<Real>& xs) {
    std::vector<Real> out(xs.size());
    const long n = static_cast<long>(xs.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) out[i] = f(xs[i]);
    return out;
}

std::pair<Real, Real> golden_max(const ScalarFn& f, Real a, Real b, long bits) {
    Real width_limit = mul_2si(Real(1L, bits), -(bits / 4));
    // (sqrt(5)-1)/2
    Real invphi = (sqrt(Real(5L, bits)) - 1L) / 2L;

    Real best_x = a;
    Real best_v = f(a);
    Real fb = f(b);
    if (fb > best_v) {
        best_v = fb;
        best_x = b;
    }
    Real c = b - invphi * (b - a);
    Real d = a + invphi * (b - a);
    Real fc = f(c);
    Real fd = f(d);
    auto consider = [&](const Real& x, const Real& v) {
        if (v > best_v) {
            best_v = v;
            best_x = x;
        }
    };
    consider(c, fc);
    consider(d, fd);
    while (b - a > width_limit) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
            consider(c, fc);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
            consider(d, fd);
        }
    }
    return {best_x, best_v};
}

ErrorReport scan_max(const ScalarFn& abs_err, const Real& lo, const Real& hi, long n, long bits,
                     ErrorMetric metric, bool refine) {
    std::vector<Real> xs = sample_grid(lo, hi, n);
    std::vector<Real> vals = map_samples(abs_err, xs);

    std::size_t best = 0;
    for (std::size_t i = 1; i < vals.size(); ++i) {
        if (vals[i] > vals[best]) best = i;
    }

    ErrorReport rep{vals[best], xs[best], lo, hi, n, false, metric};

    std::vector<std::pair<Real, Real>> refined_pts;
    if (refine) {
        // local grid maxima (endpoints included), best three by value
        std::vector<std::size_t> maxima;
        for (std::size_t i = 0; i < vals.size(); ++i) {
            bool left_ok = (i == 0) || vals[i] >= vals[i - 1];
            bool right_ok = (i + 1 == vals.size()) || vals[i] >= vals[i + 1];
            if (left_ok && right_ok) maxima.push_back(i);
        }
        std::stable_sort(maxima.begin(), maxima.end(),
                         [&](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });
        if (maxima.size() > 3) maxima.resize(3);

        for (std::size_t idx : maxima) {
            Real a = idx == 0 ? xs.front() : xs[idx - 1];
            Real b = idx + 1 == xs.size() ? xs.back() : xs[idx + 1];
            refined_pts.push_back(golden_max(abs_err, a, b, bits));
            if (refined_pts.back().second > rep.max_err) {
                rep.max_err = refined_pts.back().second;
                rep.arg_max = refined_pts.back().first;
            }
        }
        rep.refined = true;
    }

    // The maximum may be attained at several points (equioscillation); the
    // values then agree to rounding and the winner would be noise. Report the
    // largest abscissa among candidates within the 2^(-bits/2) budget of the
    // maximum.
    Real window = mul_2si(rep.max_err.abs(), -(bits / 2));
    Real floor_v = rep.max_err - window;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (vals[i] >= floor_v && xs[i] > rep.arg_max) rep.arg_max = xs[i];
    }
    for (const auto& [x, v] : refined_pts) {
        if (v >= floor_v && x > rep.arg_max) rep.arg_max = x;
    }
    return rep;
}

namespace {
ScalarFn abs_err_fn(const Approximant& a) {
    return [&a](const Real& x) { return abs(eval_f_scaled(a, x) - proot(x, a.p())); };
}
} // namespace

ErrorReport scan_abs_error(const Approximant& a, const Real& lo, const Real& hi, long n_samples) {
    const long bits = a.ctx().bits();
    Real zero(0L, bits);
    Real one(1L, bits);
    if (lo < zero || hi > one || !(lo < hi)) {
        throw std::domain_error("scan_abs_error: need 0 <= lo < hi <= 1");
    }
    return scan_max(abs_err_fn(a), a.ctx().round(lo), a.ctx().round(hi), n_samples, bits,
                    ErrorMetric::absolute);
}

ErrorReport scan_rel_error(const Approximant& a, long n_samples) {
    const long bits = a.ctx().bits();
    Real lo = pow_si(a.alpha0(), a.p());
    Real hi(1L, bits);
    ScalarFn f = [&a](const Real& x) {
        Real root = proot(x, a.p());
        return abs(eval_f_scaled(a, x) - root) / root;
    };
    return scan_max(f, lo, hi, n_samples, bits, ErrorMetric::relative);
}

std::vector<std::pair<Real, Real>> equioscillation_points(const Approximant& a, long n_samples) {
    const long bits = a.ctx().bits();
    Real lo = pow_si(a.alpha0(), a.p());
    Real hi(1L, bits);
    ScalarFn signed_rel = [&a](const Real& x) {
        Real root = proot(x, a.p());
        return (eval_f_scaled(a, x) - root) / root;
    };
    std::vector<Real> xs = sample_grid(lo, hi, n_samples);
    std::vector<Real> vals = map_samples(signed_rel, xs);

    // candidate extrema: endpoints plus interior slope sign changes
    std::vector<std::pair<Real, Real>> candidates;
    candidates.emplace_back(xs.front(), vals.front());
    for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
        Real dl = vals[i] - vals[i - 1];
        Real dr = vals[i + 1] - vals[i];
        bool is_max = dl.sign() >= 0 && dr.sign() < 0;
        bool is_min = dl.sign() <= 0 && dr.sign() > 0;
        if (!is_max && !is_min) continue;
        ScalarFn obj = is_max ? signed_rel : ScalarFn([&signed_rel](const Real& x) {
            return -signed_rel(x);
        });
        auto [x, v] = golden_max(obj, xs[i - 1], xs[i + 1], bits);
        candidates.emplace_back(x, is_max ? v : -v);
    }
    candidates.emplace_back(xs.back(), vals.back());

    // keep a sign-alternating subsequence, preferring the larger magnitude
    std::vector<std::pair<Real, Real>> out;
    for (auto& c : candidates) {
        if (c.second.is_zero()) continue;
        if (!out.empty() && out.back().second.sign() == c.second.sign()) {
            if (abs(c.second) > abs(out.back().second)) out.back() = c;
        } else {
            out.push_back(c);
        }
    }
    return out;
}

std::pair<ErrorReport, ErrorReport> sector_error_scan(const Approximant& a, const Real& alpha_cut,
                                                      long n_samples) {
    const long bits = a.ctx().bits();
    Real zero(0L, bits);
    Real one(1L, bits);
    if (alpha_cut <= zero || alpha_cut >= one) {
        throw std::domain_error("sector_error_scan: need 0 < alpha_cut < 1");
    }
    SectorEvaluator g(a, /*scaled=*/true);
    // on the positive ray sect_p is identically 1; r = 0 contributes weighted
    // error 0 since g(0) = 0 and the weight vanishes
    ScalarFn weighted = [&g, bits](const Real& r) {
        if (r.is_zero()) return Real(0L, bits);
        return abs(r * (g(r) - 1L));
    };
    ScalarFn unweighted = [&g](const Real& r) { return abs(g(r) - 1L); };
    ErrorReport w = scan_max(weighted, zero, one, n_samples, bits, ErrorMetric::weighted);
    ErrorReport u =
        scan_max(unweighted, a.ctx().round(alpha_cut), one, n_samples, bits, ErrorMetric::absolute);
    return {w, u};
}

long sector_alternation_count(const Approximant& a, const Real& alpha_cut, long n_samples) {
    const long bits = a.ctx().bits();
    SectorEvaluator g(a, /*scaled=*/true);
    ScalarFn signed_err = [&g](const Real& r) { return g(r) - 1L; };
    std::vector<Real> xs = sample_grid(a.ctx().round(alpha_cut), Real(1L, bits), n_samples);
    std::vector<Real> vals = map_samples(signed_err, xs);

    std::vector<int> ext_signs;
    ext_signs.push_back(vals.front().sign());
    for (std::size_t i = 1; i + 1 < vals.size(); ++i) {
        Real dl = vals[i] - vals[i - 1];
        Real dr = vals[i + 1] - vals[i];
        if ((dl.sign() >= 0 && dr.sign() < 0) || (dl.sign() <= 0 && dr.sign() > 0)) {
            ext_signs.push_back(vals[i].sign());
        }
    }
    ext_signs.push_back(vals.back().sign());

    long alternations = 0;
    for (std::size_t i = 1; i < ext_signs.size(); ++i) {
        if (ext_signs[i] != 0 && ext_signs[i - 1] != 0 && ext_signs[i] != ext_signs[i - 1]) {
            ++alternations;
        }
    }
    return alternations;
}

} // namespace comprat
