#include <catch2/catch_amalgamated.hpp>

#include "qaw/multivariate.hpp"
#include "qaw/operators.hpp"
#include "qaw/univariate.hpp"

using namespace qaw;
using Catch::Approx;

static const QContext ctx(0.5);
static const double q = 0.5, qi = 2.0, k = 1.3;

static BetaParams default_beta(double t) {
    return BetaParams{unit_circle(0.63), unit_circle(1.2), t, k};
}

TEST_CASE("three-term coefficients balance at the constant function") {
    // A(x) + B(x) + A(1/x) reproduces the eigenvalue of the constant
    cplx s = unit_circle(0.63);
    for (double ang : {0.4, 1.5, 2.6}) {
        cplx x = unit_circle(ang);
        cplx got = coef_A(x, s, k, q) + coef_B(x, s, k, q) + coef_A(1.0 / x, s, k, q);
        cplx lam = (std::pow(q, -k) - 1.0) * (1.0 - std::pow(q, k) * (s + 1.0 / s) * 0.0);
        // eigenvalue at degree 0 is q^{-k} picked up with zero shift weight
        CHECK(std::abs(got - std::pow(q, -k)) < 1e-12);
        (void)lam;
    }
}

TEST_CASE("diagonal coefficient alternate closed form") {
    BetaParams bp = default_beta(2.5);
    for (double ang : {0.37, 1.27, 2.17}) {
        cplx x = unit_circle(ang);
        cplx direct = coef_B_beta(x, bp.s, cplx(bp.t), bp.u, k, q);
        cplx alt = coef_B_beta_alt(x, bp.s, bp.t, bp.u, k, q);
        CHECK(std::abs(direct - alt) < 1e-12 * (1.0 + std::abs(direct)));
    }
}

TEST_CASE("difference operator eigen-equation on kernel columns") {
    BetaParams bp = default_beta(-2.7);
    const double q2 = q * q;
    for (long m = 0; m <= 3; ++m) {
        double y = bp.t * std::pow(q, -k - 2.0 * m);
        cplx lam = (y + 1.0 / y - bp.t - 1.0 / bp.t) / (q - qi);
        for (double ang : {0.52, 1.62}) {
            cplx x = unit_circle(ang);
            cplx got = coef_A_beta(x, bp.s, cplx(bp.t), bp.u, k, q) *
                           kernel_p_closed(q2 * x, m, bp, ctx) +
                       coef_B_beta(x, bp.s, cplx(bp.t), bp.u, k, q) *
                           kernel_p_closed(x, m, bp, ctx) +
                       coef_A_beta(1.0 / x, bp.s, cplx(bp.t), bp.u, k, q) *
                           kernel_p_closed(x / q2, m, bp, ctx);
            cplx want = lam * kernel_p_closed(x, m, bp, ctx);
            CHECK(std::abs(got - want) < 1e-10 * (1.0 + std::abs(want)));
        }
    }
}

TEST_CASE("single-variable stencil coefficients reduce to A and B") {
    // j = 1 stencil with nu = (+1), (0), (-1) against the direct coefficients
    std::vector<double> kv{k};
    cplx s = unit_circle(0.63);
    cplx x = unit_circle(0.9);
    std::vector<cplx> xl{x, s};
    CHECK(std::abs(mv_stencil_coef({1}, xl, kv, q) - coef_A(x, s, k, q)) < 1e-13);
    CHECK(std::abs(mv_stencil_coef({-1}, xl, kv, q) - coef_A(1.0 / x, s, k, q)) < 1e-13);
    CHECK(std::abs(mv_stencil_coef({0}, xl, kv, q) - coef_B(x, s, k, q)) < 1e-13);
}

TEST_CASE("discrete stencil acts with the expected eigenvalue") {
    std::vector<double> kv{1.3, 0.8};
    cplx s = unit_circle(0.63), u = unit_circle(1.2);
    std::vector<cplx> xs{unit_circle(0.9), unit_circle(0.41)};
    auto f = [&](const std::vector<long>& n) {
        cplx mu = std::pow(u, cplx(static_cast<double>(n[0] + n[1])));
        return mu * mv_v(n, xs, s, kv, q, ctx);
    };
    const int N = 2;
    for (int j = 1; j <= N; ++j) {
        cplx xj = xs[N - j];
        cplx lam = (xj + 1.0 / xj - s - 1.0 / s) / (qi - q);
        for (std::vector<long> n : {std::vector<long>{0, 0}, {1, 2}, {2, 1}}) {
            cplx got = apply_pi_Yj(f, n, j, kv, s, u, q);
            cplx want = lam * f(n);
            CHECK(std::abs(got - want) < 1e-11 * (1.0 + std::abs(want)));
        }
    }
}

TEST_CASE("alpha parameterization matches the amplitude form") {
    std::vector<double> kv{1.3, 0.8};
    MultiBetaParams mb{unit_circle(0.63), unit_circle(1.2), 2.7, kv};
    std::vector<cplx> xl{unit_circle(0.9), unit_circle(0.41), mb.s};
    std::vector<cplx> al = alpha_vector(mb, q);
    cplx mu_t = cplx(mb.t + 1.0 / mb.t) / (qi - q);
    for (int j = 1; j <= 2; ++j)
        for (auto& nu : all_shifts(j)) {
            cplx lhs = alpha_form_coef(nu, xl, al, q);
            cplx rhs = mv_stencil_coef(nu, xl, kv, q) *
                       beta_multiplier(nu[0], xl[0], mb.u, mu_t, q);
            CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(rhs)));
        }
}

TEST_CASE("alpha vector endpoints") {
    MultiBetaParams mb{unit_circle(0.63), unit_circle(1.2), 2.7, {1.3, 0.8, 1.1}};
    std::vector<cplx> al = alpha_vector(mb, q);
    REQUIRE(al.size() == 6);
    CHECK(std::abs(al.front() - mb.u) < 1e-15);
    CHECK(std::abs(al.back() - mb.s) < 1e-15);
    // interior entries scale by q^{k_j} steps
    for (std::size_t j = 2; j + 1 < al.size(); ++j)
        CHECK(std::abs(al[j] / al[j - 1] - std::pow(q, mb.kvec[j - 2])) < 1e-14);
}
