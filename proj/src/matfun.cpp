#include "comprat/matfun.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>

#include "comprat/errors.hpp"

namespace comprat {

DenseMatrix::DenseMatrix(long n, long bits) : n_(n), a_(n * n, Real(0L, bits)) {
    if (n < 1) throw std::domain_error("DenseMatrix: n must be >= 1");
}

DenseMatrix DenseMatrix::identity(long n, long bits) {
    DenseMatrix m(n, bits);
    for (long i = 0; i < n; ++i) m.at(i, i) = Real(1L, bits);
    return m;
}

Real DenseMatrix::max_abs() const {
    Real best(0L, PrecisionContext::kMinBits);
    for (const Real& v : a_) best = max(best, abs(v));
    return best;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
    const long n = a.n();
    if (b.n() != n) throw std::domain_error("matmul: size mismatch");
    long bits = std::max(a.at(0, 0).precision_bits(), b.at(0, 0).precision_bits());
    DenseMatrix out(n, bits);
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) {
            Real acc(0L, bits);
            for (long l = 0; l < n; ++l) acc += a.at(i, l) * b.at(l, j);
            out.at(i, j) = std::move(acc);
        }
    }
    return out;
}

DenseMatrix matadd(const DenseMatrix& a, const DenseMatrix& b) {
    const long n = a.n();
    if (b.n() != n) throw std::domain_error("matadd: size mismatch");
    long bits = std::max(a.at(0, 0).precision_bits(), b.at(0, 0).precision_bits());
    DenseMatrix out(n, bits);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) out.at(i, j) = a.at(i, j) + b.at(i, j);
    return out;
}

DenseMatrix matscale(const DenseMatrix& a, const Real& s) {
    const long n = a.n();
    DenseMatrix out(n, std::max(a.at(0, 0).precision_bits(), s.precision_bits()));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) out.at(i, j) = a.at(i, j) * s;
    return out;
}

DenseMatrix symmetrize(const DenseMatrix& a) {
    const long n = a.n();
    DenseMatrix out(n, a.at(0, 0).precision_bits());
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) out.at(i, j) = (a.at(i, j) + a.at(j, i)) / 2L;
    return out;
}

Real max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
    const long n = a.n();
    if (b.n() != n) throw std::domain_error("max_abs_diff: size mismatch");
    Real best(0L, PrecisionContext::kMinBits);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) best = max(best, abs(a.at(i, j) - b.at(i, j)));
    return best;
}

Real commutation_residual(const DenseMatrix& a, const DenseMatrix& b) {
    return max_abs_diff(matmul(a, b), matmul(b, a));
}

namespace {

struct Lu {
    DenseMatrix lu;
    std::vector<long> perm;
};

Lu lu_factor(DenseMatrix m, const Real& pivot_floor) {
    const long n = m.n();
    Lu out{std::move(m), {}};
    out.perm.resize(n);
    for (long i = 0; i < n; ++i) out.perm[i] = i;
    for (long col = 0; col < n; ++col) {
        long piv = col;
        for (long r = col + 1; r < n; ++r) {
            if (abs(out.lu.at(r, col)) > abs(out.lu.at(piv, col))) piv = r;
        }
        if (!(abs(out.lu.at(piv, col)) > pivot_floor)) {
            throw solve_failure_error(
                "matrix_proot: iterate is numerically singular (spectrum outside [0,1]?)");
        }
        if (piv != col) {
            std::swap(out.perm[piv], out.perm[col]);
            for (long j = 0; j < n; ++j) {
                Real t = out.lu.at(piv, j);
                out.lu.at(piv, j) = out.lu.at(col, j);
                out.lu.at(col, j) = std::move(t);
            }
        }
#pragma omp parallel for schedule(static)
        for (long r = col + 1; r < n; ++r) {
            Real factor = out.lu.at(r, col) / out.lu.at(col, col);
            out.lu.at(r, col) = factor;
            for (long j = col + 1; j < n; ++j) {
                out.lu.at(r, j) -= factor * out.lu.at(col, j);
            }
        }
    }
    return out;
}

// Solve F * X = B column-wise.
DenseMatrix lu_solve(const Lu& f, const DenseMatrix& b) {
    const long n = b.n();
    const long bits = b.at(0, 0).precision_bits();
    DenseMatrix x(n, bits);
#pragma omp parallel for schedule(static)
    for (long col = 0; col < n; ++col) {
        std::vector<Real> y(n, Real(0L, bits));
        for (long i = 0; i < n; ++i) {
            Real acc = b.at(f.perm[i], col);
            for (long j = 0; j < i; ++j) acc -= f.lu.at(i, j) * y[j];
            y[i] = std::move(acc);
        }
        for (long i = n - 1; i >= 0; --i) {
            Real acc = std::move(y[i]);
            for (long j = i + 1; j < n; ++j) acc -= f.lu.at(i, j) * y[j];
            y[i] = acc / f.lu.at(i, i);
        }
        for (long i = 0; i < n; ++i) x.at(i, col) = std::move(y[i]);
    }
    return x;
}

} // namespace

DenseMatrix matrix_proot(const Approximant& a, const DenseMatrix& m, bool attested_spectrum) {
    const long n = m.n();
    if (n < 1) throw std::domain_error("matrix_proot: empty matrix");
    const long bits = a.ctx().bits();
    const int p = a.p();
    Real tol = mul_2si(max(m.max_abs(), Real(1L, bits)), -(bits / 2));

    for (long i = 0; i < n; ++i) {
        for (long j = i + 1; j < n; ++j) {
            if (abs(m.at(i, j) - m.at(j, i)) > tol) {
                throw std::domain_error("matrix_proot: matrix is not symmetric");
            }
        }
    }
    if (!attested_spectrum) {
        // Gershgorin: every disc must stay inside [0,1]
        Real zero(0L, bits);
        Real one(1L, bits);
        for (long i = 0; i < n; ++i) {
            Real radius(0L, bits);
            for (long j = 0; j < n; ++j) {
                if (j != i) radius += abs(m.at(i, j));
            }
            if (m.at(i, i) - radius < zero - tol || m.at(i, i) + radius > one + tol) {
                throw std::domain_error(
                    "matrix_proot: Gershgorin bound cannot place the spectrum in [0,1]; "
                    "pass attested_spectrum if the spectrum is known");
            }
        }
    }

    Real pivot_floor = mul_2si(max(m.max_abs(), Real(1L, bits)), -(bits - 16));
    DenseMatrix f = DenseMatrix::identity(n, bits);
    for (const Real& muj : a.mus()) {
        Lu lu = lu_factor(f, pivot_floor);
        DenseMatrix y = m;
        for (int t = 0; t < p - 1; ++t) y = lu_solve(lu, y);
        // f <- ((p-1)*mu*f + mu^(1-p)*y) / p, then re-symmetrize
        DenseMatrix term1 = matscale(f, muj * static_cast<long>(p - 1));
        DenseMatrix term2 = matscale(y, pow_si(muj, 1 - p));
        f = matscale(matadd(term1, term2), Real(1L, bits) / static_cast<long>(p));
        f = symmetrize(f);
    }
    return matscale(f, a.scale());
}

RandomSpd make_random_spd(long n, std::uint64_t seed, const PrecisionContext& ctx) {
    if (n < 1) throw std::domain_error("make_random_spd: n must be >= 1");
    const long bits = ctx.bits();
    std::mt19937_64 rng(seed);
    // map uint64 to [0,1) via the top 53 bits; portable across platforms
    auto unit = [&rng, bits]() {
        double d = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        return Real(d, bits);
    };

    RandomSpd out;
    out.lambda.reserve(n);
    for (long i = 0; i < n; ++i) out.lambda.push_back(unit());

    // random matrix, orthonormalized by modified Gram-Schmidt
    DenseMatrix q(n, bits);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) q.at(i, j) = unit() - Real(0.5, bits);
    for (long col = 0; col < n; ++col) {
        for (long prev = 0; prev < col; ++prev) {
            Real dot(0L, bits);
            for (long i = 0; i < n; ++i) dot += q.at(i, col) * q.at(i, prev);
            for (long i = 0; i < n; ++i) q.at(i, col) -= dot * q.at(i, prev);
        }
        Real norm(0L, bits);
        for (long i = 0; i < n; ++i) norm += q.at(i, col) * q.at(i, col);
        norm = sqrt(norm);
        if (norm.is_zero()) throw nonconvergence_error("make_random_spd: degenerate basis");
        for (long i = 0; i < n; ++i) q.at(i, col) = q.at(i, col) / norm;
    }

    DenseMatrix ql(n, bits);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) ql.at(i, j) = q.at(i, j) * out.lambda[j];
    DenseMatrix qt(n, bits);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) qt.at(i, j) = q.at(j, i);
    out.m = symmetrize(matmul(ql, qt));
    out.q = std::move(q);
    return out;
}

} // namespace comprat
