#include <catch2/catch_amalgamated.hpp>

#include "qaw/qseries.hpp"

using namespace qaw;
using Catch::Approx;

static const QContext ctx(0.5);

TEST_CASE("finite q-shifted factorial base cases") {
    CHECK(qpoch_finite(cplx(0.7), 0.5, 0) == cplx(1.0));
    // (q;q)_2 = (1-q)(1-q^2) at q = 1/2
    CHECK(qpoch_finite(cplx(0.5), 0.5, 2).real() == Approx(0.375).epsilon(1e-15));
    // base-inverted variant: (a; q^{-1})_2 = (1-a)(1-a/q)
    cplx a(0.3, 0.1);
    cplx want = (1.0 - a) * (1.0 - a / 0.5);
    CHECK(std::abs(qpoch_finite_qinv(a, 0.5, 2) - want) < 1e-14);
}

TEST_CASE("finite q-shifted factorial splitting law") {
    cplx a(0.3, 0.4);
    double q = 0.5;
    for (int n = 0; n <= 5; ++n)
        for (int m = 0; m <= 5; ++m) {
            cplx lhs = qpoch_finite(a, q, n + m);
            cplx rhs = qpoch_finite(a, q, n) * qpoch_finite(a * std::pow(q, n), q, m);
            CHECK(std::abs(lhs - rhs) < 1e-14 * (1.0 + std::abs(lhs)));
        }
}

TEST_CASE("infinite product reference value") {
    // (1/2; 1/2)_inf, cross-checked against a 30-digit direct product
    CHECK(qpoch_inf(cplx(0.5), 0.5, ctx).real() ==
          Approx(0.288788095086602421).epsilon(1e-11));
    CHECK_THROWS_AS(qpoch_inf(cplx(0.5), 1.5, ctx), DomainViolation);
}

TEST_CASE("2phi1 reference value") {
    cplx v = rphi({cplx(0.3), cplx(0.7)}, {cplx(0.2)}, 0.5, cplx(0.6), ctx);
    CHECK(v.real() == Approx(1.67573373138983421).epsilon(1e-11));
    CHECK(std::abs(v.imag()) < 1e-12);
}

TEST_CASE("q-binomial theorem") {
    double q = 0.5;
    for (double ra : {0.2, 0.5, 0.8}) {
        cplx a = std::polar(ra, 0.7), z = std::polar(0.6, 1.9);
        cplx lhs = rphi({a}, {}, q, z, ctx);
        cplx rhs = qpoch_inf(a * z, q, ctx) / qpoch_inf(z, q, ctx);
        CHECK(std::abs(lhs - rhs) < 1e-11 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("terminating series detection") {
    SeriesSpec spec;
    spec.numerator_params = {cplx(std::pow(0.5, -3)), cplx(0.4)};
    spec.denominator_params = {cplx(0.2)};
    spec.base = 0.5;
    spec.argument = cplx(0.9);
    auto len = spec.terminating_length();
    REQUIRE(len.has_value());
    CHECK(*len == 4);

    // terminating series may use base > 1
    cplx v = rphi({cplx(std::pow(4.0, -2)), cplx(0.3)}, {cplx(0.2)}, 4.0, cplx(0.5), ctx);
    CHECK(std::isfinite(v.real()));
}

TEST_CASE("non-terminating series domain errors") {
    CHECK_THROWS_AS(rphi({cplx(0.3)}, {}, 1.5, cplx(0.5), ctx), DivergentSeries);
    CHECK_THROWS_AS(rphi({cplx(0.3), cplx(0.4)}, {cplx(0.2)}, 0.5, cplx(1.2), ctx),
                    DivergentSeries);
    // denominator parameter of the form q^{-j} poisons the term ratio
    CHECK_THROWS_AS(rphi({cplx(0.3), cplx(0.4)}, {cplx(std::pow(0.5, -2))}, 0.5, cplx(0.5), ctx),
                    PoleInDenominator);
}

TEST_CASE("log-space product accumulator") {
    LogProduct p;
    p.mul(cplx(1e-200));
    p.mul(cplx(1e-200));
    p.mul_pow(cplx(10.0), 380);
    CHECK(p.value().real() == Approx(1e-20).epsilon(1e-10));
    p.mul(cplx(0.0));
    CHECK(p.value() == cplx(0.0));
}
