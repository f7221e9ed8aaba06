#pragma once

#include <cstdint>
#include <vector>

#include "comprat/approximant.hpp"

namespace comprat {

/// Dense row-major matrix of high-precision reals.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(long n, long bits);

    long n() const noexcept { return n_; }
    Real& at(long i, long j) { return a_[i * n_ + j]; }
    const Real& at(long i, long j) const { return a_[i * n_ + j]; }

    static DenseMatrix identity(long n, long bits);

    Real max_abs() const;

private:
    long n_ = 0;
    std::vector<Real> a_;
};

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix matadd(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix matscale(const DenseMatrix& a, const Real& s);
DenseMatrix symmetrize(const DenseMatrix& a);
Real max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

/// max-norm of A*B - B*A.
Real commutation_residual(const DenseMatrix& a, const DenseMatrix& b);

/**
 * F_k ~ f_scaled(M) for Hermitian M with spectrum in [0,1], via the scalar
 * recursion with matrix arguments; the inverse power is applied by repeated
 * linear solves against an LU factorization recomputed each iteration, and
 * each iterate is re-symmetrized by averaging.
 *
 * Preconditions are checked: symmetry to 2^(-bits/2) * max|M|, and spectrum
 * containment via the Gershgorin bound unless `attested_spectrum` is set by a
 * caller who already knows the spectrum. Throws solve_failure_error if an
 * iterate becomes numerically singular (a symptom of spectrum outside [0,1]).
 */
DenseMatrix matrix_proot(const Approximant& a, const DenseMatrix& m,
                         bool attested_spectrum = false);

/// Random symmetric PD matrix with prescribed-seed spectrum inside [0,1],
/// built as Q diag(lambda) Q^T from a random orthogonal Q. Also returns the
/// spectrum and Q so callers can form spectral references.
struct RandomSpd {
    DenseMatrix m;
    DenseMatrix q;
    std::vector<Real> lambda;
};
RandomSpd make_random_spd(long n, std::uint64_t seed, const PrecisionContext& ctx);

} // namespace comprat
