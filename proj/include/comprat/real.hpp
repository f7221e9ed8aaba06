#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

namespace comprat {

class Real;

/**
 * Arbitrary-precision configuration. Immutable value type; every scalar
 * created through a context carries the context's significand width, and all
 * arithmetic is a deterministic function of the operands and their widths.
 */
class PrecisionContext {
public:
    static constexpr long kDefaultBits = 256;
    static constexpr long kMinBits = 64;
    static constexpr long kMaxBits = 1L << 22;

    explicit PrecisionContext(long significand_bits = kDefaultBits);

    long bits() const noexcept { return bits_; }

    Real make(double v = 0.0) const;
    Real make(long v) const;
    Real make(const std::string& decimal) const;
    Real round(const Real& x) const;  // re-round x to this context's width
    Real pow2(long e) const;          // exact 2^e
    Real pi() const;
    Real e() const;

private:
    long bits_;
};

/**
 * High-precision real scalar backed by MPFR. Results of binary operations
 * carry the wider of the two operand precisions; small-integer operands adopt
 * the other side's precision. Comparisons are exact.
 */
class Real {
public:
    Real();  // NaN at minimal precision; meant to be assigned over
    Real(double v, long bits);
    Real(long v, long bits);
    Real(const std::string& decimal, long bits);
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    long precision_bits() const noexcept { return mpfr_get_prec(v_); }

    bool is_nan() const noexcept { return mpfr_nan_p(v_) != 0; }
    bool is_inf() const noexcept { return mpfr_inf_p(v_) != 0; }
    bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
    int sign() const noexcept { return mpfr_sgn(v_); }

    double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long_floor() const;
    long to_long_ceil() const;

    // Scientific notation with `digits` significant decimal digits, RNDN.
    std::string str(long digits) const;

    Real operator-() const;
    Real abs() const;

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    friend Real operator+(const Real& a, long b);
    friend Real operator-(const Real& a, long b);
    friend Real operator*(const Real& a, long b);
    friend Real operator/(const Real& a, long b);
    friend Real operator+(long a, const Real& b);
    friend Real operator-(long a, const Real& b);
    friend Real operator*(long a, const Real& b);
    friend Real operator/(long a, const Real& b);

    Real& operator+=(const Real& b);
    Real& operator-=(const Real& b);
    Real& operator*=(const Real& b);
    Real& operator/=(const Real& b);

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) == 0; }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

    friend Real sqrt(const Real& x);
    friend Real rootn(const Real& x, unsigned long n);  // x^(1/n), x >= 0
    friend Real pow_si(const Real& x, long e);          // integer power
    friend Real exp(const Real& x);
    friend Real log(const Real& x);
    friend Real mul_2si(const Real& x, long e);         // exact x * 2^e
    friend Real hypot(const Real& x, const Real& y);
    friend void sin_cos(const Real& x, Real& s, Real& c);

    friend Real min(const Real& a, const Real& b) { return b < a ? b : a; }
    friend Real max(const Real& a, const Real& b) { return a < b ? b : a; }

    mpfr_srcptr raw() const noexcept { return v_; }

private:
    friend class PrecisionContext;
    explicit Real(mpfr_prec_t prec);  // uninitialized value (NaN) at prec
    mpfr_t v_;
};

Real abs(const Real& x);

} // namespace comprat
