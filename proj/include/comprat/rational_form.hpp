#pragma once

#include "comprat/approximant.hpp"
#include "comprat/poly.hpp"

namespace comprat {

/**
 * Explicit numerator/denominator coefficients of a composite form, for degree
 * bookkeeping and cross-validation against the recursive evaluation. The
 * denominator is normalized to be monic; `scale` carries the equioscillation
 * scaling (or 1 for the unscaled function).
 */
struct RationalForm {
    Poly num;
    Poly den;
    Real scale;

    Real eval(const Real& x) const { return scale * poly_eval(num, x) / poly_eval(den, x); }
};

inline constexpr long kDefaultExpansionCap = 4096;

/// Expanded coefficients of f_k (or its scaled variant). Requires k >= 1 and
/// p^(k-1) <= cap; degrees are exactly (p^(k-1), p^(k-1)-1).
RationalForm expand(const Approximant& a, bool scaled, long cap = kDefaultExpansionCap);

/// Expanded coefficients of the sector approximant g_k (or scaled variant);
/// degrees are exactly (p^k - p + 1, p^k) for k >= 1.
RationalForm expand_sector(const Approximant& a, bool scaled, long cap = kDefaultExpansionCap);

} // namespace comprat
