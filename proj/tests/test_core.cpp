#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "comprat/approximant.hpp"
#include "comprat/errors.hpp"
#include "comprat/rational_form.hpp"
#include "comprat/sector.hpp"
#include "expected_values.hpp"
#include "test_support.hpp"

using namespace comprat;
using testutil::rel_close;

namespace {
const PrecisionContext ctx(256);
const Real kTolTight = ctx.pow2(-240);
} // namespace

TEST_CASE("mu examples and domain") {
    CHECK(mu(ctx.make(0.25), 2) == ctx.make(0.5));  // exact: sqrt(0.25)
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        Real a = testutil::unit_real(rng, 256);
        if (a.is_zero()) continue;
        CHECK(mu(a, 2) == sqrt(a));  // p=2 reduction is an algebraic identity
    }
    CHECK(rel_close(mu(ctx.make(0.5), 3), ctx.make(std::string(expected::kMuHalfP3)),
                    testutil::frozen_tol(ctx)));

    CHECK_THROWS_AS(mu(ctx.make(0.0), 2), std::domain_error);
    CHECK_THROWS_AS(mu(ctx.make(1.0), 2), std::domain_error);
    CHECK_THROWS_AS(mu(ctx.make(-0.5), 2), std::domain_error);
    CHECK_THROWS_AS(mu(ctx.make(1.5), 2), std::domain_error);
    CHECK_THROWS_AS(mu(ctx.make(0.5), 1), std::domain_error);
}

TEST_CASE("alpha_step examples and lower bound") {
    CHECK(rel_close(alpha_step(ctx.make(0.25), 2), ctx.make(std::string("0.8")), kTolTight));
    CHECK(rel_close(alpha_step(ctx.make(std::string("0.8")), 2),
                    ctx.make(std::string(expected::kAlphaStep08P2)), testutil::frozen_tol(ctx)));
    CHECK(alpha_step(ctx.make(0.25), 2) > ctx.make(0.5));  // H(a) > a^(1-1/p)

    std::mt19937_64 rng(7);
    for (int pi : {2, 3, 5, 31}) {
        for (int i = 0; i < 10; ++i) {
            Real a = testutil::unit_real(rng, 256);
            if (a.is_zero()) continue;
            Real lower = exp(log(a) * (1L - Real(1L, 256) / pi));
            CHECK(alpha_step(a, pi) > lower);
        }
    }
    CHECK_THROWS_AS(alpha_step(ctx.make(0.0), 2), std::domain_error);
    CHECK_THROWS_AS(alpha_step(ctx.make(1.0), 3), std::domain_error);
}

TEST_CASE("make_approximant alpha sequence") {
    Approximant a = make_approximant(2, ctx.make(0.25), 2, ctx);
    REQUIRE(a.alphas().size() == 3);
    CHECK(a.alphas()[0] == ctx.make(0.25));
    CHECK(rel_close(a.alphas()[1], ctx.make(std::string("0.8")), kTolTight));
    CHECK(rel_close(a.alphas()[2], ctx.make(std::string(expected::kAlphaStep08P2)),
                    testutil::frozen_tol(ctx)));

    Approximant k0 = make_approximant(5, ctx.make(0.37), 0, ctx);
    REQUIRE(k0.alphas().size() == 1);
    CHECK(k0.alphas()[0] == ctx.make(0.37));
    CHECK(k0.mus().empty());

    for (int pi : {2, 3, 5}) {
        Approximant b = make_approximant(pi, ctx.make(0.05), 6, ctx);
        for (int j = 0; j < 6; ++j) {
            CHECK(b.alphas()[j + 1] > b.alphas()[j]);
            Real lower = exp(log(b.alphas()[j]) * (1L - Real(1L, 256) / pi));
            CHECK(b.alphas()[j + 1] >= lower);
            // cached mus recompute identically under ctx
            CHECK(b.mus()[j] == mu(b.alphas()[j], pi));
        }
    }

    CHECK_THROWS_AS(make_approximant(1, ctx.make(0.5), 1, ctx), std::domain_error);
    CHECK_THROWS_AS(make_approximant(2, ctx.make(0.0), 1, ctx), std::domain_error);
    CHECK_THROWS_AS(make_approximant(2, ctx.make(0.5), -1, ctx), std::domain_error);
}

TEST_CASE("eval_f worked values") {
    Approximant a = make_approximant(2, ctx.make(0.25), 1, ctx);
    CHECK(eval_f(a, ctx.make(1.0)) == ctx.make(1.25));  // exact in binary
    CHECK(eval_f(a, ctx.make(0.0)) == ctx.make(0.25));  // product formula, exact

    Approximant k0 = make_approximant(3, ctx.make(0.6), 0, ctx);
    CHECK(eval_f(k0, ctx.make(0.123)) == ctx.make(1.0));
    CHECK(eval_f(k0, ctx.make(17.0)) == ctx.make(1.0));

    CHECK_THROWS_AS(eval_f(a, ctx.make(-0.5)), std::domain_error);
}

TEST_CASE("f(0) follows the closed product through the recursion limit") {
    Approximant a = make_approximant(3, ctx.make(0.1), 5, ctx);
    Real f(1L, 256);
    for (const Real& m : a.mus()) f = f * (Real(2L, 256) / 3L) * m;
    CHECK(eval_f(a, ctx.make(0.0)) == f);
}

TEST_CASE("eval_f_scaled worked values and endpoint identities") {
    Approximant a = make_approximant(2, ctx.make(0.25), 1, ctx);
    Real ten_ninths = ctx.make(10.0) / 9L;
    CHECK(rel_close(eval_f_scaled(a, ctx.make(1.0)), ten_ninths, kTolTight));
    CHECK(rel_close(eval_f_scaled(a, ctx.make(0.0625)), ctx.make(5.0) / 18L, kTolTight));

    Approximant k0 = make_approximant(2, ctx.make(0.5), 0, ctx);
    CHECK(eval_f_scaled(k0, ctx.make(0.77)) == ctx.make(1.0) / 3L * 2L);

    for (int pi : {2, 3, 5}) {
        for (int k : {1, 3, 5}) {
            Approximant b = make_approximant(pi, ctx.make(0.2), k, ctx);
            Real ak = b.alpha_k();
            // ftilde(1) = 2/(1+alpha_k)
            CHECK(rel_close(eval_f_scaled(b, ctx.make(1.0)), Real(2L, 256) / (1L + ak),
                            ctx.pow2(-235)));
            // ftilde(alpha0^p) = alpha0 (1 + eps)
            Real lhs = eval_f_scaled(b, pow_si(b.alpha0(), pi));
            Real rhs = b.alpha0() * (1L + rel_error_bound(b));
            CHECK(rel_close(lhs, rhs, ctx.pow2(-235)));
        }
    }
}

TEST_CASE("rel_error_bound") {
    Approximant a = make_approximant(2, ctx.make(0.25), 1, ctx);  // alpha_1 = 0.8
    CHECK(rel_close(rel_error_bound(a), ctx.make(1.0) / 9L, kTolTight));
    Approximant third = make_approximant(2, ctx.make(1.0) / 3L, 0, ctx);
    CHECK(rel_close(rel_error_bound(third), ctx.make(0.5), kTolTight));
    // alpha_k -> 1 drives the bound to 0
    Approximant deep = make_approximant(2, ctx.make(0.25), 5, ctx);
    CHECK(rel_error_bound(deep) < ctx.pow2(-40));
    CHECK(rel_error_bound(deep) > ctx.make(0.0));
}

TEST_CASE("rescale_domain") {
    Approximant a = make_approximant(2, ctx.make(0.25), 1, ctx);
    auto ev1 = rescale_domain(a, ctx.make(1.0));
    Real x = ctx.make(std::string("0.35"));
    CHECK(ev1(x) == eval_f_scaled(a, x));  // s = 1 is the identity rescaling

    auto ev4 = rescale_domain(a, ctx.make(4.0));
    CHECK(rel_close(ev4(ctx.make(4.0)), ctx.make(2.0) * (ctx.make(10.0) / 9L), ctx.pow2(-235)));
    // evaluator(s) = s^(1/p) * ftilde(1)
    auto ev9 = rescale_domain(a, ctx.make(9.0));
    CHECK(rel_close(ev9(ctx.make(9.0)), ctx.make(3.0) * eval_f_scaled(a, ctx.make(1.0)),
                    ctx.pow2(-235)));
    CHECK_THROWS_AS(rescale_domain(a, ctx.make(0.0)), std::domain_error);
}

TEST_CASE("expand one step is the hand expansion") {
    Approximant a = make_approximant(2, ctx.make(0.25), 1, ctx);
    RationalForm f = expand(a, /*scaled=*/false);
    REQUIRE(f.num.degree() == 1);
    REQUIRE(f.den.degree() == 0);
    CHECK(f.num.coeffs()[0] == ctx.make(0.25));
    CHECK(f.num.coeffs()[1] == ctx.make(1.0));
    CHECK(f.den.coeffs()[0] == ctx.make(1.0));
    CHECK(f.scale == ctx.make(1.0));
}

TEST_CASE("expand degree bookkeeping") {
    CHECK_THROWS_AS(expand(make_approximant(2, ctx.make(0.3), 0, ctx), false), std::domain_error);
    for (auto [p, k] : {std::pair{2, 2}, {3, 2}, {2, 4}, {5, 3}}) {
        Approximant a = make_approximant(p, ctx.make(0.3), k, ctx);
        RationalForm f = expand(a, true);
        long expect = 1;
        for (int j = 1; j < k; ++j) expect *= p;
        CHECK(f.num.degree() == expect);
        CHECK(f.den.degree() == expect - 1);
        CHECK(f.den.leading() == ctx.make(1.0));  // monic after normalization
    }
}

TEST_CASE("expansion matches recursion at random points") {
    std::mt19937_64 rng(11);
    for (auto [p, k] : {std::pair{2, 3}, {3, 2}, {5, 2}}) {
        Approximant a = make_approximant(p, ctx.make(0.22), k, ctx);
        RationalForm f = expand(a, true);
        for (int i = 0; i < 50; ++i) {
            Real x = testutil::unit_real(rng, 256);
            Real via_form = f.eval(x);
            Real via_rec = eval_f_scaled(a, x);
            Real budget = ctx.pow2(-128) * max(ctx.make(1.0), abs(via_rec));
            CHECK(abs(via_form - via_rec) <= budget);
        }
    }
}

TEST_CASE("expansion cap") {
    Approximant a = make_approximant(2, ctx.make(0.25), 14, ctx);  // 2^13 = 8192 > 4096
    CHECK_THROWS_AS(expand(a, false), expansion_cap_error);
    Approximant b = make_approximant(2, ctx.make(0.25), 4, ctx);
    CHECK_THROWS_AS(expand(b, false, 4), expansion_cap_error);
    CHECK_NOTHROW(expand(b, false, 8));
}

TEST_CASE("den has no zero on [0,1]") {
    std::mt19937_64 rng(13);
    for (auto [p, k] : {std::pair{2, 3}, {3, 2}}) {
        Approximant a = make_approximant(p, ctx.make(0.4), k, ctx);
        RationalForm f = expand(a, false);
        for (int i = 0; i < 200; ++i) {
            Real x = testutil::unit_real(rng, 256);
            CHECK(poly_eval(f.den, x) > ctx.make(0.0));
        }
        CHECK(poly_eval(f.den, ctx.make(0.0)) > ctx.make(0.0));
        CHECK(poly_eval(f.den, ctx.make(1.0)) > ctx.make(0.0));
    }
}

TEST_CASE("sector evaluation on the real ray") {
    Approximant a = make_approximant(2, ctx.make(0.25), 1, ctx);
    SectorEvaluator g_unscaled(a, /*scaled=*/false);
    SectorEvaluator g_scaled(a, /*scaled=*/true);

    // g_1(alpha0) = H(alpha0): shared code path, bitwise identical
    CHECK(g_unscaled(ctx.make(0.25)) == alpha_step(ctx.make(0.25), 2));
    // g_k(1) = alpha_k, bitwise
    CHECK(g_unscaled(ctx.make(1.0)) == a.alpha_k());
    CHECK(rel_close(g_scaled(ctx.make(0.25)), ctx.make(8.0) / 9L, kTolTight));

    Approximant k0 = make_approximant(3, ctx.make(0.5), 0, ctx);
    SectorEvaluator g0(k0, false);
    Real z = ctx.make(std::string("0.6180339887"));
    CHECK(g0(z) == ctx.round(z));
}

TEST_CASE("sector evaluation in the plane") {
    Approximant a = make_approximant(3, ctx.make(0.1), 2, ctx);
    SectorEvaluator g(a, true);

    Complex z(ctx.make(std::string("0.45")), ctx.make(0.0));
    Complex w = from_polar(ctx.make(1.0), ctx.pi() * 2L / 3L);
    Complex rotated = g(w * z);
    Complex direct = w * g(z);
    CHECK(abs(rotated.re - direct.re) <= ctx.pow2(-200));
    CHECK(abs(rotated.im - direct.im) <= ctx.pow2(-200));

    Approximant a2 = make_approximant(2, ctx.make(0.25), 1, ctx);
    SectorEvaluator g2(a2, false);
    // denominator mu + mu^-1 z^2 vanishes exactly at z = 0.5i
    Complex bad(ctx.make(0.0), ctx.make(0.5));
    CHECK_THROWS_AS(g2(bad), singularity_error);
}

TEST_CASE("sector expansion degree bookkeeping") {
    for (int p : {2, 3}) {
        for (int k = 1; k <= 3; ++k) {
            Approximant a = make_approximant(p, ctx.make(0.3), k, ctx);
            RationalForm g = expand_sector(a, true);
            long pk = 1;
            for (int j = 0; j < k; ++j) pk *= p;
            CHECK(g.num.degree() == pk - p + 1);
            CHECK(g.den.degree() == pk);
        }
    }
}

TEST_CASE("sector expansion matches the ray recursion") {
    std::mt19937_64 rng(17);
    Approximant a = make_approximant(3, ctx.make(0.2), 2, ctx);
    RationalForm form = expand_sector(a, true);
    SectorEvaluator g(a, true);
    for (int i = 0; i < 50; ++i) {
        Real r = testutil::unit_real(rng, 256);
        CHECK(abs(form.eval(r) - g(r)) <= ctx.pow2(-128));
    }
}
