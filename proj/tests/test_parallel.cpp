#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "comprat/approximant.hpp"
#include "comprat/matfun.hpp"
#include "comprat/scan.hpp"
#include "test_support.hpp"

using namespace comprat;

namespace {
const PrecisionContext ctx(256);
} // namespace

TEST_CASE("parallel sample kernel matches the serial reference bitwise") {
    Approximant a = make_approximant(3, ctx.make(0.15), 4, ctx);
    ScalarFn err = [&a](const Real& x) { return abs(eval_f_scaled(a, x) - proot(x, a.p())); };
    std::vector<Real> xs = sample_grid(ctx.make(0.0), ctx.make(1.0), 3001);
    std::vector<Real> serial = map_samples_serial(err, xs);
    std::vector<Real> parallel = map_samples(err, xs);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i] == parallel[i]);
    }
}

TEST_CASE("scan reports are reproducible across repeated runs") {
    Approximant a = make_approximant(2, ctx.make(0.1), 5, ctx);
    ErrorReport r1 = scan_abs_error(a, ctx.make(0.0), ctx.make(1.0), 2001);
    ErrorReport r2 = scan_abs_error(a, ctx.make(0.0), ctx.make(1.0), 2001);
    CHECK(r1.max_err == r2.max_err);
    CHECK(r1.arg_max == r2.arg_max);
}

TEST_CASE("parallel matrix kernels are reproducible") {
    RandomSpd spd = make_random_spd(8, 7, ctx);
    DenseMatrix p1 = matmul(spd.m, spd.m);
    DenseMatrix p2 = matmul(spd.m, spd.m);
    CHECK(max_abs_diff(p1, p2).is_zero());

    Approximant a = make_approximant(2, ctx.make(0.2), 3, ctx);
    DenseMatrix f1 = matrix_proot(a, spd.m, true);
    DenseMatrix f2 = matrix_proot(a, spd.m, true);
    CHECK(max_abs_diff(f1, f2).is_zero());
}
