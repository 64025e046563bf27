#include <catch2/catch_amalgamated.hpp>

#include "qaw/checks.hpp"
#include "qaw/verify.hpp"

using namespace qaw;
using Catch::Approx;

static const QContext ctx(0.5);

TEST_CASE("torus quadrature integrates Laurent monomials exactly") {
    // the measure carries a factor 1/2 per circle: x^p integrates to delta_{p,0}/2
    for (int p : {0, 1, 2, -3}) {
        cplx got = torus_integral(
            [&](const std::vector<cplx>& x) { return std::pow(x[0], p); }, 1, ctx);
        if (p == 0)
            CHECK(std::abs(got - 0.5) < 1e-13);
        else
            CHECK(std::abs(got) < 1e-13);
    }
}

TEST_CASE("torus quadrature converges on a smooth periodic integrand") {
    // 1/(5 - 4 cos th) integrates to 1/3 against the angle average, 1/6 here
    long used = 0;
    cplx got = torus_integral(
        [&](const std::vector<cplx>& x) {
            double c = x[0].real();
            return cplx(1.0 / (5.0 - 4.0 * c));
        },
        1, ctx, &used);
    CHECK(got.real() == Approx(1.0 / 6.0).epsilon(1e-12));
    CHECK(used >= 16);
}

TEST_CASE("two-dimensional product integrand factorizes") {
    cplx got = torus_integral(
        [&](const std::vector<cplx>& x) {
            return (x[0] + 1.0 / x[0]) * (x[0] + 1.0 / x[0]) * (x[1] + 1.0 / x[1]) *
                   (x[1] + 1.0 / x[1]);
        },
        2, ctx);
    CHECK(got.real() == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("check result bookkeeping") {
    CheckResult r;
    r.finish(1e-12, 1e-10);
    CHECK(r.pass);
    r.finish(1e-9, 1e-10);
    CHECK_FALSE(r.pass);
    CHECK(r.residual == 1e-9);
}

TEST_CASE("registry names are unique and runnable") {
    std::vector<std::string> seen;
    for (auto& [name, fn] : checks::registry()) {
        CHECK(std::find(seen.begin(), seen.end(), name) == seen.end());
        seen.push_back(name);
    }
    CHECK(seen.size() >= 13);
    // every suite entry resolves to a registered check
    for (auto& [suite, list] : checks::suites())
        for (auto& name : list)
            CHECK(std::find(seen.begin(), seen.end(), name) != seen.end());
}

TEST_CASE("fast checks pass under the default configuration") {
    checks::RunConfig cfg;
    for (const char* name : {"qseries-identities", "asc-qinv-orthogonality",
                             "asc-difference-equations", "reversal-and-omega"}) {
        for (auto& [rname, fn] : checks::registry())
            if (rname == name) {
                CheckResult r = fn(cfg);
                INFO(r.check << " residual " << r.residual << " tol " << r.tol);
                CHECK(r.pass);
            }
    }
}

TEST_CASE("tolerance override propagates") {
    checks::RunConfig cfg;
    cfg.tol_override = 1e-30;  // absurdly tight: the residual must now fail
    for (auto& [rname, fn] : checks::registry())
        if (rname == "asc-difference-equations") {
            CheckResult r = fn(cfg);
            CHECK(r.tol == 1e-30);
            CHECK_FALSE(r.pass);
        }
}
