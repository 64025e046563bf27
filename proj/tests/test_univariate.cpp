#include <catch2/catch_amalgamated.hpp>

#include "qaw/univariate.hpp"
#include "qaw/verify.hpp"

using namespace qaw;
using Catch::Approx;

static const QContext ctx(0.5);

TEST_CASE("Al-Salam-Chihara base cases and reference value") {
    cplx x = unit_circle(0.9);
    cplx a = std::polar(0.6, 0.2), b(0.25);
    CHECK(alsalam_chihara(0, x, a, b, 0.25, ctx) == cplx(1.0));
    // degree 1 closed form a (x + 1/x - a - b) / (1 - ab)
    cplx q1 = a * (x + 1.0 / x - a - b) / (1.0 - a * b);
    CHECK(std::abs(alsalam_chihara(1, x, a, b, 0.25, ctx) - q1) < 1e-15);
    // 30-digit recurrence reference
    cplx ref(-0.0135171849334558634, 0.000666490590637662311);
    CHECK(std::abs(alsalam_chihara(5, x, a, b, 0.25, ctx) - ref) < 1e-15);
    CHECK_THROWS_AS(alsalam_chihara(-1, x, a, b, 0.25, ctx), IndexOutOfRange);
}

TEST_CASE("Askey-Wilson reference value and symmetry") {
    cplx x = unit_circle(0.7);
    double base = 0.25;
    cplx v = askey_wilson(4, x, cplx(0.9), cplx(0.4), cplx(-0.3), cplx(0.2), base, ctx);
    CHECK(v.real() == Approx(-0.597439432228973504).epsilon(1e-13));
    CHECK(std::abs(v.imag()) < 1e-13);
    // invariant under x -> 1/x
    cplx w = askey_wilson(4, 1.0 / x, cplx(0.9), cplx(0.4), cplx(-0.3), cplx(0.2), base, ctx);
    CHECK(std::abs(v - w) < 1e-13);
    // symmetric in the last three parameters
    cplx u = askey_wilson(4, x, cplx(0.9), cplx(-0.3), cplx(0.2), cplx(0.4), base, ctx);
    CHECK(std::abs(v - u) < 1e-12);
}

static BetaParams default_beta(double t) {
    return BetaParams{unit_circle(0.63), unit_circle(1.2), t, 1.3};
}

TEST_CASE("parameter validation") {
    CHECK_NOTHROW(default_beta(2.5).validate(ctx));
    CHECK_NOTHROW(default_beta(-2.7).validate(ctx));
    CHECK_THROWS_AS(default_beta(1.5).validate(ctx), DomainViolation);  // |t| < 1/q
    BetaParams bad = default_beta(2.5);
    bad.s = cplx(1.1);
    CHECK_THROWS_AS(bad.validate(ctx), DomainViolation);
}

TEST_CASE("torus weight positivity and pole guard") {
    BetaParams bp = default_beta(2.5);
    double qk = std::pow(ctx.q, bp.k), q2 = ctx.q * ctx.q;
    for (double ang : {0.3, 1.1, 2.0, 2.9}) {
        cplx w = weight_asc_torus(unit_circle(ang), bp.s * qk, qk / bp.s, q2, ctx);
        CHECK(w.real() > 0.0);
        CHECK(std::abs(w.imag()) < 1e-12 * w.real());
    }
    CHECK_THROWS_AS(weight_asc_torus(cplx(1.0), bp.s * qk, qk / bp.s, q2, ctx), PoleOnTorus);
}

TEST_CASE("small torus Gram of the eigenfunction family") {
    BetaParams bp = default_beta(2.5);
    double qk = std::pow(ctx.q, bp.k), q2 = ctx.q * ctx.q;
    for (long n = 0; n <= 3; ++n)
        for (long np = n; np <= 3; ++np) {
            cplx got = torus_inner(
                [&](const std::vector<cplx>& x) {
                    return eigfun_v_base(n, x[0], bp.s, bp.k, ctx.q, ctx);
                },
                [&](const std::vector<cplx>& x) {
                    return eigfun_v_base(np, x[0], bp.s, bp.k, ctx.q, ctx);
                },
                [&](const std::vector<cplx>& x) {
                    return weight_asc_torus(x[0], bp.s * qk, qk / bp.s, q2, ctx);
                },
                1, ctx);
            if (n == np) {
                cplx want = 1.0 / pairing_omega(n, bp.k, ctx);
                CHECK(std::abs(std::abs(got) - std::abs(want)) < 1e-10 * std::abs(want));
            } else {
                CHECK(std::abs(got) < 1e-10);
            }
        }
}

TEST_CASE("kernel column routes agree") {
    for (double t : {2.5, -2.7}) {
        BetaParams bp = default_beta(t);
        cplx x = unit_circle(1.3);
        for (long m = 0; m <= 3; ++m) {
            cplx vs = kernel_p_sum(x, m, bp, ctx);
            cplx vc = kernel_p_closed(x, m, bp, ctx);
            CHECK(std::abs(vs - vc) < 1e-10 * (1.0 + std::abs(vc)));
        }
        CHECK(std::abs(kernel_p_sum(x, 0, bp, ctx) - kernel_p_base(x, bp, ctx)) < 1e-11);
    }
}

TEST_CASE("series route rejects arguments outside its disc") {
    BetaParams bp = default_beta(2.5);
    // |x| > |t|/q breaks the tail ratio
    CHECK_THROWS_AS(kernel_p_sum(cplx(6.0), 0, bp, ctx), DivergentSeries);
}

TEST_CASE("discrete weights are positive and summable") {
    for (double t : {2.5, -2.7}) {
        BetaParams bp = default_beta(t);
        double total = 0.0;
        for (long m = 0; m <= 6; ++m) {
            double w = kernel_weight_grid(m, bp, ctx).real();
            CHECK(w > 0.0);
            total += w;
        }
        CHECK(total < 1e10);
    }
}

TEST_CASE("base-inverted family matches the grid family") {
    const double qi = 1.0 / ctx.q;
    for (double t : {2.7, -2.7}) {
        for (long n = 0; n <= 5; ++n)
            for (long m = 0; m <= 2; ++m) {
                double y = t * std::pow(ctx.q, -1.3 - 2.0 * m);
                cplx a = eigfun_v_base(n, cplx(y), cplx(t), 1.3, qi, ctx);
                cplx b = eigfun_vtilde_grid_slot(n, m, t, 1.3, ctx);
                CHECK(std::abs(a - b) < 1e-12 * (1.0 + std::abs(b)));
            }
        CHECK(std::abs(pairing_omega_base(3, 1.3, ctx.q) - pairing_omega_base(3, 1.3, qi)) <
              1e-14);
    }
}
