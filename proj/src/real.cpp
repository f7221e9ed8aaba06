#include "comprat/real.hpp"

#include <algorithm>
#include <stdexcept>

namespace comprat {

namespace {
mpfr_prec_t result_prec(const Real& a, const Real& b) {
    return std::max(a.precision_bits(), b.precision_bits());
}
} // namespace

PrecisionContext::PrecisionContext(long significand_bits) : bits_(significand_bits) {
    if (significand_bits < kMinBits || significand_bits > kMaxBits) {
        throw std::domain_error("PrecisionContext: significand_bits must lie in [64, 2^22]");
    }
}

Real PrecisionContext::make(double v) const { return Real(v, bits_); }
Real PrecisionContext::make(long v) const { return Real(v, bits_); }
Real PrecisionContext::make(const std::string& decimal) const { return Real(decimal, bits_); }

Real PrecisionContext::round(const Real& x) const {
    Real r(static_cast<mpfr_prec_t>(bits_));
    mpfr_set(r.v_, x.raw(), MPFR_RNDN);
    return r;
}

Real PrecisionContext::pow2(long e) const {
    Real r(static_cast<mpfr_prec_t>(bits_));
    mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
}

Real PrecisionContext::pi() const {
    Real r(static_cast<mpfr_prec_t>(bits_));
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

Real PrecisionContext::e() const {
    Real r(static_cast<mpfr_prec_t>(bits_));
    mpfr_set_ui(r.v_, 1, MPFR_RNDN);
    mpfr_exp(r.v_, r.v_, MPFR_RNDN);
    return r;
}

Real::Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }

Real::Real() { mpfr_init2(v_, MPFR_PREC_MIN); }

Real::Real(double v, long bits) {
    mpfr_init2(v_, bits);
    mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(long v, long bits) {
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(const std::string& decimal, long bits) {
    mpfr_init2(v_, bits);
    if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
        mpfr_clear(v_);
        throw std::domain_error("Real: cannot parse '" + decimal + "'");
    }
}

Real::Real(const Real& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    if (this != &other) mpfr_swap(v_, other.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

long Real::to_long_floor() const {
    if (!mpfr_fits_slong_p(v_, MPFR_RNDD)) throw std::domain_error("Real: out of long range");
    return mpfr_get_si(v_, MPFR_RNDD);
}

long Real::to_long_ceil() const {
    if (!mpfr_fits_slong_p(v_, MPFR_RNDU)) throw std::domain_error("Real: out of long range");
    return mpfr_get_si(v_, MPFR_RNDU);
}

std::string Real::str(long digits) const {
    if (digits < 2) digits = 2;
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", static_cast<int>(digits - 1), v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

Real Real::operator-() const {
    Real r(mpfr_get_prec(v_));
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

Real Real::abs() const {
    Real r(mpfr_get_prec(v_));
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

Real abs(const Real& x) { return x.abs(); }

#define COMPRAT_BINOP(op, fn)                                   \
    Real operator op(const Real& a, const Real& b) {            \
        Real r(result_prec(a, b));                              \
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);                        \
        return r;                                               \
    }

COMPRAT_BINOP(+, mpfr_add)
COMPRAT_BINOP(-, mpfr_sub)
COMPRAT_BINOP(*, mpfr_mul)
COMPRAT_BINOP(/, mpfr_div)
#undef COMPRAT_BINOP

Real operator+(const Real& a, long b) {
    Real r(a.precision_bits());
    mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}
Real operator-(const Real& a, long b) {
    Real r(a.precision_bits());
    mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}
Real operator*(const Real& a, long b) {
    Real r(a.precision_bits());
    mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}
Real operator/(const Real& a, long b) {
    Real r(a.precision_bits());
    mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}
Real operator+(long a, const Real& b) { return b + a; }
Real operator-(long a, const Real& b) {
    Real r(b.precision_bits());
    mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
}
Real operator*(long a, const Real& b) { return b * a; }
Real operator/(long a, const Real& b) {
    Real r(b.precision_bits());
    mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
}

Real& Real::operator+=(const Real& b) {
    mpfr_prec_t p = std::max(mpfr_get_prec(v_), mpfr_get_prec(b.v_));
    Real r((mpfr_prec_t)p);
    mpfr_add(r.v_, v_, b.v_, MPFR_RNDN);
    mpfr_swap(v_, r.v_);
    return *this;
}
Real& Real::operator-=(const Real& b) {
    mpfr_prec_t p = std::max(mpfr_get_prec(v_), mpfr_get_prec(b.v_));
    Real r((mpfr_prec_t)p);
    mpfr_sub(r.v_, v_, b.v_, MPFR_RNDN);
    mpfr_swap(v_, r.v_);
    return *this;
}
Real& Real::operator*=(const Real& b) {
    mpfr_prec_t p = std::max(mpfr_get_prec(v_), mpfr_get_prec(b.v_));
    Real r((mpfr_prec_t)p);
    mpfr_mul(r.v_, v_, b.v_, MPFR_RNDN);
    mpfr_swap(v_, r.v_);
    return *this;
}
Real& Real::operator/=(const Real& b) {
    mpfr_prec_t p = std::max(mpfr_get_prec(v_), mpfr_get_prec(b.v_));
    Real r((mpfr_prec_t)p);
    mpfr_div(r.v_, v_, b.v_, MPFR_RNDN);
    mpfr_swap(v_, r.v_);
    return *this;
}

Real sqrt(const Real& x) {
    Real r(x.precision_bits());
    mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
    return r;
}

Real rootn(const Real& x, unsigned long n) {
    Real r(x.precision_bits());
    mpfr_rootn_ui(r.v_, x.v_, n, MPFR_RNDN);
    return r;
}

Real pow_si(const Real& x, long e) {
    Real r(x.precision_bits());
    if (e >= 0) {
        mpfr_pow_ui(r.v_, x.v_, static_cast<unsigned long>(e), MPFR_RNDN);
    } else {
        mpfr_pow_si(r.v_, x.v_, e, MPFR_RNDN);
    }
    return r;
}

Real exp(const Real& x) {
    Real r(x.precision_bits());
    mpfr_exp(r.v_, x.v_, MPFR_RNDN);
    return r;
}

Real log(const Real& x) {
    Real r(x.precision_bits());
    mpfr_log(r.v_, x.v_, MPFR_RNDN);
    return r;
}

Real mul_2si(const Real& x, long e) {
    Real r(x.precision_bits());
    mpfr_mul_2si(r.v_, x.v_, e, MPFR_RNDN);
    return r;
}

Real hypot(const Real& x, const Real& y) {
    Real r(result_prec(x, y));
    mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN);
    return r;
}

void sin_cos(const Real& x, Real& s, Real& c) {
    Real rs(x.precision_bits());
    Real rc(x.precision_bits());
    mpfr_sin_cos(rs.v_, rc.v_, x.v_, MPFR_RNDN);
    s = std::move(rs);
    c = std::move(rc);
}

} // namespace comprat
