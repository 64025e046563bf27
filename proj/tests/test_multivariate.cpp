#include <catch2/catch_amalgamated.hpp>

#include "qaw/multivariate.hpp"

using namespace qaw;
using Catch::Approx;

static const QContext ctx(0.5);
static const double q = 0.5, qi = 2.0;

static MultiBetaParams params2() {
    return MultiBetaParams{unit_circle(0.63), unit_circle(1.2), 2.7, {1.3, 0.8}};
}
static MultiBetaParams params3() {
    return MultiBetaParams{unit_circle(0.63), unit_circle(1.2), 2.7, {1.3, 0.8, 1.1}};
}

TEST_CASE("validation") {
    CHECK_NOTHROW(params3().validate(ctx));
    MultiBetaParams bad = params3();
    bad.t = 0.5;
    CHECK_THROWS_AS(bad.validate(ctx), DomainViolation);
    bad = params3();
    bad.kvec.clear();
    CHECK_THROWS_AS(bad.validate(ctx), DomainViolation);
}

TEST_CASE("grid points cascade") {
    MultiBetaParams mb = params3();
    // all m = 0: y_j = t q^{-(k_1+...+k_j)}
    std::vector<double> y = grid_points({0, 0, 0}, mb, q);
    double acc = 0.0;
    for (std::size_t j = 0; j < 3; ++j) {
        acc += mb.kvec[j];
        CHECK(y[j] == Approx(mb.t * std::pow(q, -acc)).epsilon(1e-14));
    }
    // raising m_1 divides the whole chain by q^2
    std::vector<double> y2 = grid_points({1, 0, 0}, mb, q);
    for (std::size_t j = 0; j < 3; ++j) CHECK(y2[j] == Approx(y[j] / (q * q)).epsilon(1e-14));
}

TEST_CASE("degree-zero product is the bare coupling chain") {
    MultiBetaParams mb = params2();
    std::vector<cplx> xs{unit_circle(0.9), unit_circle(0.41)};
    cplx v = mv_v({0, 0}, xs, mb.s, mb.kvec, q, ctx);
    CHECK(v == cplx(1.0));
}

TEST_CASE("three evaluation routes agree") {
    for (int N : {2, 3}) {
        MultiBetaParams mb = (N == 2) ? params2() : params3();
        std::vector<cplx> xs{unit_circle(0.9), unit_circle(0.41), unit_circle(1.7)};
        xs.resize(N);
        for (std::vector<long> m :
             {std::vector<long>(N, 0), std::vector<long>(N, 1)}) {
            cplx a = mv_pbeta_sum(xs, m, mb, ctx);
            cplx b = mv_pbeta_product(xs, m, mb, ctx);
            cplx c = mv_pbeta_closed(xs, m, mb, ctx);
            CHECK(std::abs(a - c) < 1e-9 * (1.0 + std::abs(c)));
            CHECK(std::abs(b - c) < 1e-9 * (1.0 + std::abs(c)));
        }
    }
}

TEST_CASE("difference operator eigen-equations, N = 2") {
    MultiBetaParams mb = params2();
    const int N = 2;
    std::vector<cplx> xs{unit_circle(0.9), unit_circle(0.41)};
    for (std::vector<long> m : {std::vector<long>{0, 0}, {1, 0}, {1, 1}}) {
        std::vector<double> ys = grid_points(m, mb, q);
        cplx P0 = mv_pbeta_product(xs, m, mb, ctx);
        for (int j = 1; j <= N; ++j) {
            PointFn f = [&](const std::vector<cplx>& x) {
                return mv_pbeta_product(x, m, mb, ctx);
            };
            cplx lam = (ys[j - 1] + 1.0 / ys[j - 1] - mb.t - 1.0 / mb.t) / (q - qi);
            cplx got = apply_mv_difference(j, xs, mb, q, f);
            CHECK(std::abs(got - lam * P0) < 1e-9 * (1.0 + std::abs(lam * P0)));
        }
    }
}

TEST_CASE("recurrence operator eigen-equations, N = 2") {
    MultiBetaParams mb = params2();
    const int N = 2;
    std::vector<cplx> xs{unit_circle(0.9), unit_circle(0.41)};
    for (std::vector<long> m : {std::vector<long>{1, 0}, {0, 1}}) {
        cplx P0 = mv_pbeta_product(xs, m, mb, ctx);
        for (int j = 1; j <= N; ++j) {
            GridFn g = [&](const std::vector<long>& mv) {
                return mv_pbeta_product(xs, mv, mb, ctx);
            };
            cplx xr = xs[N - j];
            cplx lam = (xr + 1.0 / xr - mb.s - 1.0 / mb.s) / (qi - q);
            cplx got = apply_mv_recurrence(j, m, mb, q, g);
            CHECK(std::abs(got - lam * P0) < 1e-9 * (1.0 + std::abs(lam * P0)));
        }
    }
}

TEST_CASE("K-operator eigenvalues") {
    MultiBetaParams mb = params3();
    const int N = 3;
    std::vector<cplx> xs{unit_circle(0.9), unit_circle(0.41), unit_circle(1.7)};
    std::vector<long> n{1, 0, 2};
    PointFn f = [&](const std::vector<cplx>& x) { return mv_v(n, x, mb.s, mb.kvec, q, ctx); };
    for (int j = 1; j <= N; ++j) {
        double expsum = 0.0;
        for (int i = 0; i < j; ++i) expsum += mb.kvec[i] + 2.0 * n[i];
        cplx want = std::pow(q, -expsum) * f(xs);
        cplx got = apply_mv_K(j, xs, mb.s, mb.kvec, q, f);
        CHECK(std::abs(got - want) < 1e-10 * (1.0 + std::abs(want)));
    }
}

TEST_CASE("weights are positive on the torus and the grid") {
    MultiBetaParams mb = params2();
    std::vector<cplx> xs{unit_circle(0.9), unit_circle(0.41)};
    CHECK(mv_w(xs, mb, ctx).real() > 0.0);
    for (std::vector<long> m : {std::vector<long>{0, 0}, {1, 0}, {2, 1}})
        CHECK(mv_wtilde(m, mb, ctx) > 0.0);
}

TEST_CASE("omega product is base-inversion invariant") {
    std::vector<double> kv{1.3, 0.8, 1.1};
    for (std::vector<long> n : {std::vector<long>{0, 0, 0}, {2, 1, 0}, {1, 3, 2}})
        CHECK(std::abs(mv_omega(n, kv, q) - mv_omega(n, kv, qi)) < 1e-13);
}

TEST_CASE("grid family is the base-inverted point family") {
    MultiBetaParams mb = params3();
    std::vector<long> m{1, 0, 1}, n{2, 1, 0};
    std::vector<double> y = grid_points(m, mb, q);
    std::vector<cplx> yhat{cplx(y[2]), cplx(y[1]), cplx(y[0])};
    std::vector<double> khat{mb.kvec[2], mb.kvec[1], mb.kvec[0]};
    std::vector<long> nhat{n[2], n[1], n[0]};
    cplx a = mv_v(nhat, yhat, cplx(mb.t), khat, qi, ctx);
    cplx b = mv_vtilde(n, m, mb, ctx);
    CHECK(std::abs(a - b) < 1e-12 * (1.0 + std::abs(b)));
}
