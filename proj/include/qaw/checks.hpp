#pragma once

// Named verification suites over the whole library: each check runs one
// family of identities at desk scale and reports the worst residual, the
// tolerance it was held to, and timing.  The same registry backs the
// command-line `verify` subcommand and the acceptance runner.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qaw/core.hpp"
#include "qaw/hopf.hpp"
#include "qaw/multivariate.hpp"
#include "qaw/operators.hpp"
#include "qaw/qseries.hpp"
#include "qaw/univariate.hpp"
#include "qaw/verify.hpp"

namespace qaw::checks {

struct RunConfig {
    double q = 0.5;
    double k = 1.3;
    std::vector<double> kvec2{1.3, 0.8};
    std::vector<double> kvec3{1.3, 0.8, 1.1};
    double t_pos = 2.5;
    double t_neg = -2.7;
    double s_angle = 0.63;
    double u_angle = 1.2;
    std::uint64_t seed = 20260826ULL;
    double tol_override = 0.0;  // <= 0 means per-check defaults

    QContext ctx() const { return QContext(q); }
    cplx s() const { return unit_circle(s_angle); }
    cplx u() const { return unit_circle(u_angle); }
    double tol_or(double dflt) const { return tol_override > 0.0 ? tol_override : dflt; }
    BetaParams beta(double t) const { return BetaParams{s(), u(), t, k}; }
};

inline CheckResult start(const char* name, const RunConfig& cfg) {
    CheckResult r;
    r.check = name;
    r.seed = cfg.seed;
    r.params["q"] = cfg.q;
    r.params["k"] = cfg.k;
    r.params["s_angle"] = cfg.s_angle;
    r.params["u_angle"] = cfg.u_angle;
    return r;
}

// 0. Building-block identities for the q-shifted factorials and the basic
//    hypergeometric evaluator: splitting law, q-binomial theorem, q-Gauss
//    sum, and exact termination of terminating series.
inline CheckResult check_qseries_identities(const RunConfig& cfg) {
    Stopwatch sw;
    QContext ctx = cfg.ctx();
    CheckResult r = start("qseries-identities", cfg);
    const double q = ctx.q;
    std::mt19937_64 rng(cfg.seed + 7);
    std::uniform_real_distribution<double> uang(0.0, 2.0 * PI);
    std::uniform_real_distribution<double> urad(0.1, 0.9);
    double worst = 0.0;
    for (int it = 0; it < 50; ++it) {
        cplx a = std::polar(urad(rng), uang(rng));
        cplx b = std::polar(urad(rng), uang(rng));
        cplx z = std::polar(urad(rng), uang(rng));
        // (a;q)_{n+m} = (a;q)_n (a q^n; q)_m
        int n = static_cast<int>(rng() % 6), m = static_cast<int>(rng() % 6);
        worst = std::max(worst,
                         rel_residual(qpoch_finite(a, q, n + m),
                                      qpoch_finite(a, q, n) *
                                          qpoch_finite(a * std::pow(q, n), q, m)));
        // q-binomial theorem: 1phi0(a; -; q, z) = (az;q)_inf / (z;q)_inf
        worst = std::max(worst, rel_residual(rphi({a}, {}, q, z, ctx),
                                             qpoch_inf(a * z, q, ctx) / qpoch_inf(z, q, ctx)));
        // q-Gauss: 2phi1(a, b; c; q, c/(ab)) with c chosen inside the domain
        cplx c = a * b * std::polar(urad(rng), uang(rng));
        worst = std::max(
            worst, rel_residual(rphi({a, b}, {c}, q, c / (a * b), ctx),
                                qpoch_inf(c / a, q, ctx) * qpoch_inf(c / b, q, ctx) /
                                    (qpoch_inf(c, q, ctx) * qpoch_inf(c / (a * b), q, ctx))));
        // terminating series: explicit finite sum
        int nt = static_cast<int>(rng() % 5);
        cplx acc = 0.0, term = 1.0;
        for (int j = 0;; ++j) {
            acc += term;
            if (j == nt) break;
            cplx qj = std::pow(q, j);
            term *= (1.0 - std::pow(q, -nt) * qj) * (1.0 - b * qj) /
                    ((1.0 - c * qj) * (1.0 - q * qj)) * z;
        }
        worst = std::max(worst,
                         rel_residual(rphi({cplx(std::pow(q, -nt)), b}, {c}, q, z, ctx), acc));
    }
    r.seconds = sw.seconds();
    r.finish(worst, cfg.tol_or(1e-11));
    return r;
}

// 1. Orthonormalized torus Gram of the v family against the identity,
//    <v_n, v_n'> = delta_{nn'} / omega_n, for two circle parameters.
inline CheckResult check_asc_gram_torus(const RunConfig& cfg) {
    Stopwatch sw;
    QContext ctx = cfg.ctx();
    CheckResult r = start("asc-gram-torus", cfg);
    r.params["nmax"] = 8;
    const double q2 = ctx.q * ctx.q;
    const double qk = std::pow(ctx.q, cfg.k);
    double worst = 0.0;
    for (double ang : {cfg.s_angle, 1.1}) {
        cplx s = unit_circle(ang);
        std::vector<double> norm(9);
        for (long n = 0; n <= 8; ++n)
            norm[n] = std::sqrt(std::abs(1.0 / pairing_omega_base(n, cfg.k, ctx.q)));
        for (long n = 0; n <= 8; ++n) {
            for (long np = n; np <= 8; ++np) {
                long used = 0;
                cplx got = torus_inner(
                    [&](const std::vector<cplx>& x) {
                        return eigfun_v_base(n, x[0], s, cfg.k, ctx.q, ctx);
                    },
                    [&](const std::vector<cplx>& x) {
                        return eigfun_v_base(np, x[0], s, cfg.k, ctx.q, ctx);
                    },
                    [&](const std::vector<cplx>& x) {
                        return weight_asc_torus(x[0], s * qk, qk / s, q2, ctx);
                    },
                    1, ctx, &used);
                r.nodes = std::max(r.nodes, used);
                double want = (n == np) ? 1.0 : 0.0;
                worst = std::max(worst, std::abs(std::abs(got) / (norm[n] * norm[np]) - want));
            }
        }
    }
    r.seconds = sw.seconds();
    r.finish(worst, cfg.tol_or(1e-10));
    return r;
}

// 2. Base-q^{-1} family on the geometric grid: orthonormalized Gram in both
//    directions (sum over grid points, and the dual sum over degrees).
inline CheckResult check_asc_qinv_orthogonality(const RunConfig& cfg) {
    Stopwatch sw;
    QContext ctx = cfg.ctx();
    CheckResult r = start("asc-qinv-orthogonality", cfg);
    const double qb = ctx.q * ctx.q;
    double worst = 0.0;
    for (double t : {cfg.t_pos, cfg.t_neg}) {
        r.params["t"] = t;
        const double a = t * std::pow(ctx.q, -cfg.k);
        const double b = std::pow(ctx.q, -cfg.k) / t;
        auto Qn = [&](long n, long m) {
            return alsalam_chihara(n, cplx(a * std::pow(qb, -static_cast<double>(m))), cplx(a),
                                   cplx(b), 1.0 / qb, ctx);
        };
        std::vector<double> h(7);
        for (long n = 0; n <= 6; ++n)
            h[n] = std::abs(std::pow(a / (b * qb), static_cast<double>(n)) *
                            qpoch_finite(cplx(qb), qb, n).real() /
                            qpoch_finite(cplx(1.0 / (a * b)), qb, n).real());
        std::vector<double> W(64);
        for (long m = 0; m < 64; ++m)
            W[m] = weight_asc_grid(m, cplx(a), cplx(b), qb, ctx).real();
        // grid-side Gram
        for (long n = 0; n <= 6; ++n) {
            for (long np = n; np <= 6; ++np) {
                double acc = 0.0;
                for (long m = 0; m < 64; ++m) {
                    double term =
                        (Qn(n, m) * Qn(np, m)).real() * W[m] / std::sqrt(h[n] * h[np]);
                    acc += term;
                    if (m > 8 && std::abs(term) < 1e-17) break;
                }
                double want = (n == np) ? 1.0 : 0.0;
                worst = std::max(worst, std::abs(acc - want));
            }
        }
        // dual Gram over degrees
        for (long m = 0; m <= 4; ++m) {
            for (long mr = m; mr <= 4; ++mr) {
                double sqw = std::sqrt(W[m] * W[mr]);
                double acc = 0.0;
                double wn = 1.0;
                for (long n = 0; n < ctx.max_terms; ++n) {
                    if (n > 0)
                        wn *= (b * qb / a) * (1.0 - std::pow(qb, n - 1.0) / (a * b)) /
                              (1.0 - std::pow(qb, static_cast<double>(n)));
                    double term = (Qn(n, m) * Qn(n, mr)).real() * wn * sqw;
                    acc += term;
                    if (n > 10 && std::abs(term) < 1e-17) break;
                }
                double want = (m == mr) ? 1.0 : 0.0;
                worst = std::max(worst, std::abs(acc - want));
            }
        }
    }
    r.seconds = sw.seconds();
    r.finish(worst, cfg.tol_or(1e-10));
    return r;
}

// 3. Three contiguous q-difference equations for the degree-n family at a
//    generic base, sampled at random parameters and torus points.
inline CheckResult check_asc_difference_equations(const RunConfig& cfg) {
    Stopwatch sw;
    QContext ctx = cfg.ctx();
    CheckResult r = start("asc-difference-equations", cfg);
    r.params["samples"] = 200;
    const double q = ctx.q, Q = q * q;
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> uang(0.0, 2.0 * PI);
    std::uniform_real_distribution<double> urad(0.2, 0.8);
    std::uniform_int_distribution<long> udeg(0, 8);
    double worst = 0.0;
    auto safe = [&](cplx x) {
        for (cplx d : {1.0 - x * x, 1.0 - 1.0 / (x * x), 1.0 - Q * x * x, 1.0 - Q / (x * x)})
            if (std::abs(d) < 0.05) return false;
        return true;
    };
    for (int it = 0; it < 200; ++it) {
        cplx x;
        do {
            x = unit_circle(uang(rng));
        } while (!safe(x));
        cplx a = std::polar(urad(rng), uang(rng));
        cplx b = std::polar(urad(rng), uang(rng));
        long n = udeg(rng);
        auto P = [&](cplx z, cplx aa, cplx bb) { return alsalam_chihara(n, z, aa, bb, Q, ctx); };
        cplx lhs1 = P(x, a, b);
        cplx rhs1 = (1.0 - a * x) / (1.0 - x * x) * P(x * q, a * q, b / q) +
                    (1.0 - a / x) / (1.0 - 1.0 / (x * x)) * P(x / q, a * q, b / q);
        cplx lhs2 = std::pow(Q, static_cast<double>(-n)) * P(x, a, b);
        cplx rhs2 = (1.0 - a * x) * (1.0 - b * x) / ((1.0 - x * x) * (1.0 - Q * x * x)) *
                        P(x * Q, a, b) +
                    (1.0 - a / x) * (1.0 - b / x) /
                        ((1.0 - 1.0 / (x * x)) * (1.0 - Q / (x * x))) * P(x / Q, a, b) +
                    ((1.0 + Q) * (Q + a * b) - (x + 1.0 / x) * (a * Q + b * Q)) /
                        ((1.0 - Q * x * x) * (1.0 - Q / (x * x))) * P(x, a, b);
        cplx lhs3 = P(x, a, b);
        cplx rhs3 = (1.0 - a * x) * (1.0 - a * Q * x) / ((1.0 - x * x) * (1.0 - Q * x * x)) *
                        P(x * Q, a * Q, b / Q) +
                    (1.0 - a / x) * (1.0 - a * Q / x) /
                        ((1.0 - 1.0 / (x * x)) * (1.0 - Q / (x * x))) * P(x / Q, a * Q, b / Q) +
                    Q * (Q + 1.0) * (1.0 - a * x) * (1.0 - a / x) /
                        ((1.0 - Q * x * x) * (1.0 - Q / (x * x))) * P(x, a * Q, b / Q);
        worst = std::max({worst, rel_residual(rhs1, lhs1), rel_residual(rhs2, lhs2),
                          rel_residual(rhs3, lhs3)});
    }
    r.seconds = sw.seconds();
    r.finish(worst, cfg.tol_or(1e-11));
    return r;
}

// 4. The kernel evaluated three ways (series, closed form, three-term
//    recurrence from the m = 0 seed) agrees pairwise on the torus.
inline CheckResult check_kernel_three_routes(const RunConfig& cfg) {
    Stopwatch sw;
    QContext ctx = cfg.ctx();
    CheckResult r = start("kernel-three-routes", cfg);
    const double q = ctx.q, qi = 1.0 / q;
    double worst = 0.0, worst_base = 0.0;
    for (double t : {cfg.t_pos, cfg.t_neg}) {
        BetaParams bp = cfg.beta(t);
        bp.validate(ctx);
        for (int ix = 0; ix < 20; ++ix) {
            cplx x = unit_circle(0.11 + ix * 0.3);
            // recurrence route, seeded by the closed m = 0 product
            std::vector<cplx> P(6);
            P[0] = kernel_p_base(x, bp, ctx);
            cplx lam = (x + 1.0 / x - bp.s - 1.0 / bp.s) / (qi - q);
            for (long m = 0; m + 1 < static_cast<long>(P.size()); ++m) {
                double y = t * std::pow(q, -cfg.k - 2.0 * m);
                cplx Ap = coef_A_beta(cplx(y), cplx(t), bp.s, bp.u, cfg.k, qi);
                cplx Am = coef_A_beta(cplx(1.0 / y), cplx(t), bp.s, bp.u, cfg.k, qi);
                cplx Bm = coef_B_beta(cplx(y), cplx(t), bp.s, bp.u, cfg.k, qi);
                cplx prev = (m == 0) ? cplx(0.0) : P[m - 1];
                P[m + 1] = (lam * P[m] - Bm * P[m] - Am * prev) / Ap;
            }
            for (long m = 0; m <= 4; ++m) {
                long used = 0;
                cplx vsum = kernel_p_sum(x, m, bp, ctx, &used);
                r.nodes = std::max(r.nodes, used);
                cplx vclosed = kernel_p_closed(x, m, bp, ctx);
                worst = std::max({worst, rel_residual(vsum, vclosed),
                                  rel_residual(P[m], vclosed), rel_residual(P[m], vsum)});
                if (m == 0) worst_base = std::max(worst_base, rel_residual(vsum, P[0]));
            }
        }
    }
    r.params["base_residual"] = worst_base;
    r.seconds = sw.seconds();
    double tol = cfg.tol_or(1e-9);
    r.finish(worst, tol);
    if (worst_base > cfg.tol_or(1e-10)) r.pass = false;
    return r;
}

// 5. Orthonormalized torus Gram of the kernel columns x -> P(x, y_m) against
//    the identity; the diagonal normalization is the discrete weight.
inline CheckResult check_kernel_gram_grid(const RunConfig& cfg) {
    Stopwatch sw;
    QContext ctx = cfg.ctx();
    CheckResult r = start("kernel-gram-grid", cfg);
    const double q2 = ctx.q * ctx.q;
    const double qk = std::pow(ctx.q, cfg.k);
    BetaParams bp = cfg.beta(cfg.t_neg);
    bp.validate(ctx);
    r.params["t"] = bp.t;
    std::vector<double> wg(5);
    for (long m = 0; m <= 4; ++m)
        wg[m] = std::abs(kernel_weight_grid(m, bp, ctx).real());
    const long M = 256;
    r.nodes = M;
    std::vector<cplx> nodes(M);
    for (long i = 0; i < M; ++i) nodes[i] = unit_circle((i + 0.5) * 2.0 * PI / M);
    std::vector<double> wv(M);
    std::vector<std::vector<cplx>> vals(5, std::vector<cplx>(M));
    for (long i = 0; i < M; ++i) {
        wv[i] = weight_asc_torus(nodes[i], bp.s * qk, qk / bp.s, q2, ctx).real();
        for (long m = 0; m <= 4; ++m) vals[m][i] = kernel_p_closed(nodes[i], m, bp, ctx);
    }
    double worst = 0.0;
    for (long m = 0; m <= 4; ++m) {
        for (long mp = m; mp <= 4; ++mp) {
            cplx acc = 0.0;
            for (long i = 0; i < M; ++i) acc += vals[m][i] * std::conj(vals[mp][i]) * wv[i];
            acc /= static_cast<double>(M) * 2.0;
            double got = std::abs(acc) * std::sqrt(wg[m] * wg[mp]);
            double want = (m == mp) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(got - want));
        }
    }
    r.seconds = sw.seconds();
    r.finish(worst, cfg.tol_or(1e-9));
    return r;
}

// 6. The two one-variable three-term operators have the kernel columns as
//    eigenfunctions; the alternate diagonal closed form matches; conjugating
//    the difference operator by the m = 0 column reduces it to the standard
//    Askey-Wilson divided-difference operator.
inline CheckResult check_univariate_operator_eigen(const RunConfig& cfg) {
    Stopwatch sw;
    QContext ctx = cfg.ctx();
    CheckResult r = start("univariate-operator-eigen", cfg);
    const double q = ctx.q, qi = 1.0 / q, q2 = q * q;
    double worst = 0.0, worst_alt = 0.0;
    for (double t : {cfg.t_pos, cfg.t_neg}) {
        BetaParams bp = cfg.beta(t);
        for (int ix = 0; ix < 5; ++ix) {
            cplx x = unit_circle(0.37 + 0.9 * ix);
            for (long m = 0; m <= 4; ++m) {
                double y = t * std::pow(q, -cfg.k - 2.0 * m);
                // difference side
                cplx got = coef_A_beta(x, bp.s, cplx(t), bp.u, cfg.k, q) *
                               kernel_p_closed(q2 * x, m, bp, ctx) +
                           coef_B_beta(x, bp.s, cplx(t), bp.u, cfg.k, q) *
                               kernel_p_closed(x, m, bp, ctx) +
                           coef_A_beta(1.0 / x, bp.s, cplx(t), bp.u, cfg.k, q) *
                               kernel_p_closed(x / q2, m, bp, ctx);
                cplx lam = (y + 1.0 / y - t - 1.0 / t) / (q - qi);
                worst = std::max(worst, rel_residual(got, lam * kernel_p_closed(x, m, bp, ctx)));
                // recurrence side
                cplx Pm = kernel_p_closed(x, m, bp, ctx);
                cplx Pp = kernel_p_closed(x, m + 1, bp, ctx);
                cplx Pq = (m == 0) ? cplx(0.0) : kernel_p_closed(x, m - 1, bp, ctx);
                cplx got2 = coef_A_beta(cplx(y), cplx(t), bp.s, bp.u, cfg.k, qi) * Pp +
                            coef_B_beta(cplx(y), cplx(t), bp.s, bp.u, cfg.k, qi) * Pm +
                            coef_A_beta(cplx(1.0 / y), cplx(t), bp.s, bp.u, cfg.k, qi) * Pq;
                cplx lam2 = (x + 1.0 / x - bp.s - 1.0 / bp.s) / (qi - q);
                worst = std::max(worst, rel_residual(got2, lam2 * Pm));
                // alternate diagonal closed form
                worst_alt = std::max(
                    worst_alt,
                    std::abs(coef_B_beta(x, bp.s, cplx(t), bp.u, cfg.k, q) -
                             coef_B_beta_alt(x, bp.s, t, bp.u, cfg.k, q)));
            }
        }
    }
    // conjugated operator vs standard Askey-Wilson operator
    {
        BetaParams bp = cfg.beta(cfg.t_pos);
        AWQuad p = beta_aw_params(bp, q);
        double at = std::pow(q, cfg.k) / bp.t;
        for (int ix = 0; ix < 3; ++ix) {
            cplx x = unit_circle(0.52 + 1.1 * ix);
            for (long n = 0; n <= 6; ++n) {
                auto pm = [&](cplx z) { return askey_wilson(n, z, p.a, p.c, p.b, p.d, q2, ctx); };
                cplx Lp = coef_aw_op(x, p, q) * (pm(q2 * x) - pm(x)) +
                          coef_aw_op(1.0 / x, p, q) * (pm(x / q2) - pm(x));
                cplx lhs = (Lp / at + (at + 1.0 / at - bp.t - 1.0 / bp.t) * pm(x)) / (q - qi);
                auto M = [&](cplx z) { return kernel_p_base(z, bp, ctx); };
                cplx rhs = (coef_A_beta(x, bp.s, cplx(bp.t), bp.u, cfg.k, q) * M(q2 * x) *
                                pm(q2 * x) +
                            coef_B_beta(x, bp.s, cplx(bp.t), bp.u, cfg.k, q) * M(x) * pm(x) +
                            coef_A_beta(1.0 / x, bp.s, cplx(bp.t), bp.u, cfg.k, q) * M(x / q2) *
                                pm(x / q2)) /
                           M(x);
                worst = std::max(worst, rel_residual(lhs, rhs));
            }
        }
    }
    r.params["alt_diag_residual"] = worst_alt;
    r.seconds = sw.seconds();
    r.finish(worst, cfg.tol_or(1e-10));
    if (worst_alt > cfg.tol_or(1e-12)) r.pass = false;
    return r;
}

// 7. Degree-argument duality of the kernel: the normalized polynomial part
//    at the extended spectral point equals its base-inverted dual, the
//    generic terminating 4phi3 base-inversion holds, and the series route
//    agrees with the closed form at the extended point that it reaches.
inline CheckResult check_kernel_duality(const RunConfig& cfg) {
    Stopwatch sw;
    QContext ctx = cfg.ctx();
    CheckResult r = start("kernel-duality", cfg);
    const double q = ctx.q, q2 = q * q, qi2 = 1.0 / q2;
    const double t = 2.7;
    r.params["t"] = t;
    BetaParams bp = cfg.beta(t);
    AWQuad p = beta_aw_params(bp, q);
    cplx at = std::pow(q, cfg.k) / t, bt = std::pow(q, cfg.k) * t;
    cplx ct = q * bp.u * bp.s, dt = q * bp.s / bp.u;
    double worst = 0.0;
    for (long m = 0; m <= 3; ++m) {
        for (long mp = 0; mp <= 3; ++mp) {
            cplx x = bp.s * std::pow(q, cfg.k + 2.0 * mp);
            cplx lhs = askey_wilson(m, x, p.a, p.b, p.c, p.d, q2, ctx) /
                       (std::pow(p.a, cplx(static_cast<double>(-m))) *
                        qpoch_finite(p.a * p.b, q2, m) * qpoch_finite(p.a * p.c, q2, m) *
                        qpoch_finite(p.a * p.d, q2, m));
            cplx rhs = askey_wilson(mp, std::pow(cplx(q), cplx(-2.0 * m)) / at, 1.0 / at,
                                    1.0 / bt, 1.0 / ct, 1.0 / dt, qi2, ctx) /
                       (std::pow(at, cplx(static_cast<double>(mp))) *
                        qpoch_finite(1.0 / (p.a * p.b), qi2, mp) *
                        qpoch_finite(1.0 / (p.a * p.c), qi2, mp) *
                        qpoch_finite(1.0 / (p.a * p.d), qi2, mp));
            worst = std::max(worst, rel_residual(lhs, rhs));
        }
        // the series route reaches the extended point at the base column
        cplx x0 = bp.s * std::pow(q, cfg.k);
        worst = std::max(worst, rel_residual(kernel_p_sum(x0, m, bp, ctx),
                                             kernel_p_closed(x0, m, bp, ctx)));
    }
    // generic terminating 4phi3 base inversion
    std::mt19937_64 rng(cfg.seed + 7);
    std::uniform_real_distribution<double> ur(0.2, 0.9);
    for (int trial = 0; trial < 6; ++trial) {
        long m = trial % 3 + 1, mp = (trial / 3) % 3 + 1;
        double b1 = ur(rng), b2 = ur(rng), b3 = ur(rng), a3 = ur(rng);
        double a4 = b1 * b2 * b3 * std::pow(q2, m + mp - 1.0) / a3;
        cplx lhs = rphi({cplx(std::pow(q2, static_cast<double>(-m))),
                         cplx(std::pow(q2, static_cast<double>(-mp))), cplx(a3), cplx(a4)},
                        {cplx(b1), cplx(b2), cplx(b3)}, q2, cplx(q2), ctx);
        cplx rhs = rphi({cplx(std::pow(q2, static_cast<double>(m))),
                         cplx(std::pow(q2, static_cast<double>(mp))), cplx(1.0 / a3),
                         cplx(1.0 / a4)},
                        {cplx(1.0 / b1), cplx(1.0 / b2), cplx(1.0 / b3)}, qi2, cplx(qi2), ctx);
        worst = std::max(worst, rel_residual(lhs, rhs));
    }
    r.seconds = sw.seconds();
    r.finish(worst, cfg.tol_or(1e-8));
    return r;
}

// 8. Exact symbolic suite for the quantized algebra at random rational
//    specializations: PBW arithmetic, coproduct axioms, the coproducts of
//    the twisted primitives, their S/T decompositions, iterated coproduct
//    splitting, and commutativity of the nested families.  The residual is
//    the number of failed items.
inline CheckResult check_hopf_exact_suite(const RunConfig& cfg) {
    Stopwatch sw;
    using R = boost::multiprecision::cpp_rational;
    using El = hopf::Element<R>;
    using Tn = hopf::Tensor<R>;
    CheckResult r = start("hopf-exact-suite", cfg);
    r.params["trials"] = 5;
    long failures = 0;
    std::mt19937_64 rng(cfg.seed + 100);
    auto require = [&](bool ok) {
        if (!ok) ++failures;
    };
    for (int trial = 0; trial < 5; ++trial) {
        R root = hopf::random_rational<R>(rng);
        hopf::Algebra<R> A(root);
        const R q = A.q;
        R s = hopf::random_nonzero_rational<R>(rng);
        R u = hopf::random_nonzero_rational<R>(rng);
        R t = hopf::random_nonzero_rational<R>(rng);
        auto rand_el = [&](int nterms) {
            El x;
            std::uniform_int_distribution<long> de(0, 2), dk(-2, 2);
            for (int i = 0; i < nterms; ++i)
                x.add_term({de(rng), dk(rng), de(rng)}, hopf::random_nonzero_rational<R>(rng));
            return x;
        };
        El scalar_one = El::one();
        El K2 = El::monomial({0, 2, 0}, R(1));
        El Km2 = El::monomial({0, -2, 0}, R(1));
        // defining relations through the rewriting engine
        {
            El E = A.gen(hopf::Gen::E), F = A.gen(hopf::Gen::F), K = A.gen(hopf::Gen::K);
            El lhs = A.mul(E, F) - A.mul(F, E);
            El rhs = (K2 - Km2).scaled(R(1) / (q - R(1) / q));
            require(lhs == rhs);
            require(A.mul(K, E) == A.mul(E, K).scaled(q));
            require(A.mul(K, F) == A.mul(F, K).scaled(R(1) / q));
            require(A.mul(K, A.gen(hopf::Gen::Kinv)) == scalar_one);
        }
        // associativity and idempotence of the canonical form
        {
            El x = rand_el(3), y = rand_el(3), z = rand_el(2);
            require(A.mul(A.mul(x, y), z) == A.mul(x, A.mul(y, z)));
            require(A.normal_form_of(x) == x);
        }
        // star: involutive antihomomorphism
        {
            El x = rand_el(3), y = rand_el(3);
            require(A.star(A.star(x)) == x);
            require(A.star(A.mul(x, y)) == A.mul(A.star(y), A.star(x)));
        }
        // coproduct is an algebra homomorphism, and is coassociative
        {
            El x = rand_el(3), y = rand_el(3);
            require(A.coproduct_n(A.mul(x, y), 1) ==
                    A.tensor_mul(A.coproduct_n(x, 1), A.coproduct_n(y, 1)));
            Tn dx = A.coproduct_n(x, 1);
            require(A.apply_delta_slot(dx, 0) == A.apply_delta_slot(dx, 1));
        }
        // coproducts of the twisted primitives
        auto tens2 = [&](const El& a, const El& b) {
            return A.tensor_mul(A.embed(A.as_tensor(a), 2, 0), A.embed(A.as_tensor(b), 2, 1));
        };
        El Y = A.Y(s, u), Yt = A.Ytilde(t, u);
        require(A.coproduct_n(Y, 1) == tens2(K2, Y) + tens2(Y, scalar_one));
        require(A.coproduct_n(Yt, 1) == tens2(Yt, Km2) + tens2(scalar_one, Yt));
        // S/T building blocks: specialization independence and reconstruction
        {
            R s2 = hopf::random_nonzero_rational<R>(rng);
            using K = hopf::Algebra<R>::STKind;
            El S = A.build_ST(K::S, s), T = A.build_ST(K::T, s);
            require(S == A.build_ST(K::S, s2));
            require(T == A.build_ST(K::T, s2));
            El St = A.build_ST(K::Stilde, t), Tt = A.build_ST(K::Ttilde, t);
            require(St == A.build_ST(K::Stilde, s2));
            require(Tt == A.build_ST(K::Ttilde, s2));
            R qpq = q + R(1) / q;
            El rec_t = (S.scaled(u + R(1) / u) + T.scaled(q * u - R(1) / (q * u)))
                           .scaled(R(1) / qpq) +
                       (scalar_one - Km2).scaled(A.mu(t));
            require(rec_t == A.Ytilde(t, u));
            El rec_s = (St.scaled(u + R(1) / u) + Tt.scaled(u / q - q / u))
                           .scaled(R(1) / qpq) -
                       (scalar_one - K2).scaled(A.mu(s));
            require(rec_s == A.Y(s, u));
        }
        // iterated coproduct splitting, j <= 5
        for (int j = 2; j <= 5; ++j) {
            Tn want;
            want.degree = j;
            Tn want_t;
            want_t.degree = j;
            for (int i = 1; i <= j; ++i) {
                for (auto& [key, c] : Y.terms) {
                    std::vector<hopf::PBWKey> kk(j, hopf::PBWKey{});
                    for (int l = 0; l < i - 1; ++l) kk[l] = {0, 2, 0};
                    kk[i - 1] = key;
                    want.add_term(kk, c);
                }
                for (auto& [key, c] : Yt.terms) {
                    std::vector<hopf::PBWKey> kk(j, hopf::PBWKey{});
                    for (int l = i; l < j; ++l) kk[l] = {0, -2, 0};
                    kk[i - 1] = key;
                    want_t.add_term(kk, c);
                }
            }
            require(A.coproduct_n(Y, j - 1) == want);
            require(A.coproduct_n(Yt, j - 1) == want_t);
        }
        // commutativity of the nested families, N <= 4
        {
            const int N = 4;
            std::vector<Tn> ys, yts;
            for (int j = 1; j <= N; ++j) {
                ys.push_back(A.Yj(s, u, j, N));
                yts.push_back(A.Ytildej(t, u, j, N));
            }
            for (int a = 0; a < N; ++a)
                for (int b = a + 1; b < N; ++b) {
                    require(A.tensor_mul(ys[a], ys[b]) == A.tensor_mul(ys[b], ys[a]));
                    require(A.tensor_mul(yts[a], yts[b]) == A.tensor_mul(yts[b], yts[a]));
                }
        }
    }
    r.seconds = sw.seconds();
    r.finish(static_cast<double>(failures), 0.5);
    return r;
}

// 9. Discrete three-term stencils on sequence space: the nested operators
//    have the expected product eigenfunctions, and each family commutes on
//    random finitely supported functions.
inline CheckResult check_discrete_stencil_eigen(const RunConfig& cfg) {
    Stopwatch sw;
    QContext ctx = cfg.ctx();
    CheckResult r = start("discrete-stencil-eigen", cfg);
    const double q = ctx.q, qi = 1.0 / q;
    const int N = 3;
    const std::vector<double>& kv = cfg.kvec3;
    MultiBetaParams mb{cfg.s(), cfg.u(), 2.7, kv};
    mb.validate(ctx);
    r.params["t"] = mb.t;
    std::vector<cplx> xs{unit_circle(0.9), unit_circle(0.41), unit_circle(1.7)};
    double worst = 0.0;
    auto Mu = [&](const std::vector<long>& n) {
        long tot = 0;
        for (long v : n) tot += v;
        return std::pow(mb.u, cplx(static_cast<double>(tot)));
    };
    DiscreteFn fx = [&](const std::vector<long>& n) {
        return Mu(n) * mv_v(n, xs, mb.s, kv, q, ctx);
    };
    std::vector<long> mref{1, 0, 1};
    std::vector<double> ys = grid_points(mref, mb, q);
    DiscreteFn fy = [&](const std::vector<long>& n) {
        return Mu(n) * mv_vtilde(n, mref, mb, ctx);
    };
    std::vector<std::vector<long>> nsamples{{0, 0, 0}, {1, 0, 2}, {2, 3, 1}, {3, 1, 0}};
    for (int j = 1; j <= N; ++j) {
        cplx xj = xs[N - j];
        cplx lam = (xj + 1.0 / xj - mb.s - 1.0 / mb.s) / (qi - q);
        double yj = ys[j - 1];
        cplx lamt = (yj + 1.0 / yj - mb.t - 1.0 / mb.t) / (q - qi);
        for (auto& n : nsamples) {
            worst = std::max(worst, rel_residual(apply_pi_Yj(fx, n, j, kv, mb.s, mb.u, q),
                                                 lam * fx(n)));
            worst = std::max(worst, rel_residual(apply_pi_Ytildej(fy, n, j, kv, mb.t, mb.u, q),
                                                 lamt * fy(n)));
        }
    }
    r.seconds = sw.seconds();
    r.finish(worst, cfg.tol_or(1e-10));
    // commutators on random finitely supported functions
    std::mt19937_64 rng(cfg.seed + 9);
    std::uniform_real_distribution<double> ur(-1.0, 1.0);
    std::map<std::vector<long>, cplx> table;
    for (long a = 0; a <= 3; ++a)
        for (long b = 0; b <= 3; ++b)
            for (long c = 0; c <= 3; ++c) table[{a, b, c}] = cplx(ur(rng), ur(rng));
    DiscreteFn frand = [&](const std::vector<long>& n) {
        auto it = table.find(n);
        return it == table.end() ? cplx(0.0) : it->second;
    };
    // the q^{-k}-side stencils amplify roundoff on wide supports, so the
    // second family gets a tighter box
    std::map<std::vector<long>, cplx> table1;
    for (long a = 0; a <= 1; ++a)
        for (long b = 0; b <= 1; ++b)
            for (long c = 0; c <= 1; ++c) table1[{a, b, c}] = cplx(ur(rng), ur(rng));
    DiscreteFn frand1 = [&](const std::vector<long>& n) {
        auto it = table1.find(n);
        return it == table1.end() ? cplx(0.0) : it->second;
    };
    double worst_comm = 0.0;
    auto opY = [&](int j, const DiscreteFn& f) {
        return DiscreteFn(
            [&, j, f](const std::vector<long>& n) { return apply_pi_Yj(f, n, j, kv, mb.s, mb.u, q); });
    };
    auto opYt = [&](int j, const DiscreteFn& f) {
        return DiscreteFn([&, j, f](const std::vector<long>& n) {
            return apply_pi_Ytildej(f, n, j, kv, mb.t, mb.u, q);
        });
    };
    std::vector<std::vector<long>> pts{{0, 1, 2}, {2, 2, 1}, {1, 3, 0}, {3, 0, 3}};
    std::vector<std::vector<long>> pts1{{0, 0, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 0}, {2, 0, 1}};
    for (int a = 1; a <= N; ++a)
        for (int b = a + 1; b <= N; ++b) {
            for (auto& n : pts) {
                cplx c1 = opY(a, opY(b, frand))(n) - opY(b, opY(a, frand))(n);
                worst_comm = std::max(worst_comm, std::abs(c1));
            }
            for (auto& n : pts1) {
                cplx c2 = opYt(a, opYt(b, frand1))(n) - opYt(b, opYt(a, frand1))(n);
                worst_comm = std::max(worst_comm, std::abs(c2));
            }
        }
    r.params["commutator_residual"] = worst_comm;
    r.seconds = sw.seconds();
    if (worst_comm > cfg.tol_or(1e-11)) r.pass = false;
    return r;
}

// 10. Continuous multivariate stencils: the product eigenfunctions of the
//     nested Casimir-type operators on both sides of the pairing.
inline CheckResult check_mv_k_operator_eigen(const RunConfig& cfg) {
    Stopwatch sw;
    QContext ctx = cfg.ctx();
    CheckResult r = start("mv-k-operator-eigen", cfg);
    const double q = ctx.q;
    const int N = 3;
    const std::vector<double>& kv = cfg.kvec3;
    MultiBetaParams mb{cfg.s(), cfg.u(), 2.7, kv};
    mb.validate(ctx);
    r.params["t"] = mb.t;
    std::vector<cplx> xs{unit_circle(0.9), unit_circle(0.41), unit_circle(1.7)};
    std::vector<std::vector<long>> nsamples{{0, 0, 0}, {1, 0, 2}, {3, 2, 1}, {2, 3, 3}};
    std::vector<std::vector<long>> msamples{{0, 0, 0}, {1, 0, 1}, {2, 1, 0}, {0, 1, 1}};
    double worst = 0.0;
    for (int j = 1; j <= N; ++j) {
        for (auto& n : nsamples) {
            PointFn f = [&](const std::vector<cplx>& x) { return mv_v(n, x, mb.s, kv, q, ctx); };
            double expsum = 0.0;
            for (int i = 0; i < j; ++i) expsum += kv[i] + 2.0 * n[i];
            cplx want = std::pow(q, -expsum) * f(xs);
            worst = std::max(worst, rel_residual(apply_mv_K(j, xs, mb.s, kv, q, f), want));
        }
        for (auto& m : msamples) {
            for (auto& n : nsamples) {
                GridFn g = [&](const std::vector<long>& mv) { return mv_vtilde(n, mv, mb, ctx); };
                double expsum = 0.0;
                for (int i = N - j; i < N; ++i) expsum += kv[i] + 2.0 * n[i];
                cplx want = std::pow(q, expsum) * g(m);
                worst = std::max(worst, rel_residual(apply_mv_Ktilde(j, m, mb, q, g), want));
            }
        }
    }
    r.seconds = sw.seconds();
    r.finish(worst, cfg.tol_or(1e-10));
    return r;
}

// 11. Multivariate kernel identities: the three evaluation routes agree for
//     N = 2, 3; the orthonormalized N = 2 Gram is the identity; both nested
//     operator families act with the expected eigenvalues; the alpha-form of
//     the stencil coefficients matches the amplitude-product form.
inline CheckResult check_mv_kernel_identities(const RunConfig& cfg) {
    Stopwatch sw;
    QContext ctx = cfg.ctx();
    CheckResult r = start("mv-kernel-identities", cfg);
    const double q = ctx.q, qi = 1.0 / q;
    double worst_routes = 0.0, worst_gram = 0.0, worst_ops = 0.0, worst_alpha = 0.0;
    // routes, N = 2 and N = 3
    for (int N : {2, 3}) {
        const std::vector<double>& kv = (N == 2) ? cfg.kvec2 : cfg.kvec3;
        MultiBetaParams mb{cfg.s(), cfg.u(), 2.7, kv};
        mb.validate(ctx);
        std::vector<cplx> xs{unit_circle(0.9), unit_circle(0.41), unit_circle(1.7)};
        xs.resize(N);
        std::vector<std::vector<long>> ms;
        std::vector<long> cur(N, 0);
        std::function<void(int, long)> enumerate = [&](int pos, long left) {
            if (pos == N) {
                ms.push_back(cur);
                return;
            }
            for (long v = 0; v <= left; ++v) {
                cur[pos] = v;
                enumerate(pos + 1, left - v);
            }
        };
        enumerate(0, 3);
        for (auto& m : ms) {
            cplx closed = mv_pbeta_closed(xs, m, mb, ctx);
            worst_routes = std::max(worst_routes,
                                    rel_residual(mv_pbeta_sum(xs, m, mb, ctx), closed));
            worst_routes = std::max(worst_routes,
                                    rel_residual(mv_pbeta_product(xs, m, mb, ctx), closed));
        }
    }
    // Gram, N = 2, total degree <= 2, fixed tensor midpoint grid
    {
        const std::vector<double>& kv = cfg.kvec2;
        MultiBetaParams mb{cfg.s(), cfg.u(), 2.7, kv};
        std::vector<std::vector<long>> ms{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
        const long M = 128;
        r.nodes = M;
        std::vector<cplx> nodes(M);
        for (long i = 0; i < M; ++i) nodes[i] = unit_circle((i + 0.5) * 2.0 * PI / M);
        std::vector<double> wt(ms.size());
        for (std::size_t a = 0; a < ms.size(); ++a) wt[a] = mv_wtilde(ms[a], mb, ctx);
        std::vector<std::vector<cplx>> vals(ms.size(), std::vector<cplx>(M * M));
        std::vector<cplx> wv(M * M);
        for (long i = 0; i < M; ++i)
            for (long jn = 0; jn < M; ++jn) {
                std::vector<cplx> x{nodes[i], nodes[jn]};
                wv[i * M + jn] = mv_w(x, mb, ctx);
                for (std::size_t a = 0; a < ms.size(); ++a)
                    vals[a][i * M + jn] = mv_pbeta_closed(x, ms[a], mb, ctx);
            }
        for (std::size_t a = 0; a < ms.size(); ++a)
            for (std::size_t b = a; b < ms.size(); ++b) {
                cplx acc = 0.0;
                for (long i = 0; i < M * M; ++i)
                    acc += vals[a][i] * std::conj(vals[b][i]) * wv[i];
                acc /= static_cast<double>(M * M) * 4.0;
                double got = std::abs(acc) * std::sqrt(wt[a] * wt[b]);
                double want = (a == b) ? 1.0 : 0.0;
                worst_gram = std::max(worst_gram, std::abs(got - want));
            }
    }
    // nested operator actions, N = 2
    {
        const std::vector<double>& kv = cfg.kvec2;
        MultiBetaParams mb{cfg.s(), cfg.u(), 2.7, kv};
        const int N = 2;
        std::vector<cplx> xs{unit_circle(0.9), unit_circle(0.41)};
        std::vector<std::vector<long>> ms{{0, 0}, {1, 0}, {0, 1}, {2, 1}};
        for (auto& m : ms) {
            std::vector<double> ys = grid_points(m, mb, q);
            cplx P0 = mv_pbeta_product(xs, m, mb, ctx);
            for (int j = 1; j <= N; ++j) {
                PointFn f = [&](const std::vector<cplx>& x) {
                    return mv_pbeta_product(x, m, mb, ctx);
                };
                cplx lamd = (ys[j - 1] + 1.0 / ys[j - 1] - mb.t - 1.0 / mb.t) / (q - qi);
                worst_ops = std::max(worst_ops,
                                     rel_residual(apply_mv_difference(j, xs, mb, q, f), lamd * P0));
                GridFn g = [&](const std::vector<long>& mv) {
                    return mv_pbeta_product(xs, mv, mb, ctx);
                };
                cplx xr = xs[N - j];
                cplx lamr = (xr + 1.0 / xr - mb.s - 1.0 / mb.s) / (qi - q);
                worst_ops = std::max(worst_ops,
                                     rel_residual(apply_mv_recurrence(j, m, mb, q, g), lamr * P0));
            }
        }
    }
    // alpha-form of the stencil coefficients vs the amplitude-product form
    {
        const std::vector<double>& kv = cfg.kvec2;
        MultiBetaParams mb{cfg.s(), cfg.u(), 2.7, kv};
        std::vector<cplx> xl{unit_circle(0.9), unit_circle(0.41), mb.s};
        std::vector<cplx> al = alpha_vector(mb, q);
        cplx mu_t = cplx(mb.t + 1.0 / mb.t) / (qi - q);
        for (int j = 1; j <= 2; ++j) {
            for (auto& nu : all_shifts(j)) {
                cplx lhs = alpha_form_coef(nu, xl, al, q);
                cplx rhs = mv_stencil_coef(nu, xl, kv, q) *
                           beta_multiplier(nu[0], xl[0], mb.u, mu_t, q);
                worst_alpha = std::max(worst_alpha, std::abs(lhs - rhs));
            }
        }
    }
    r.params["gram_residual"] = worst_gram;
    r.params["operator_residual"] = worst_ops;
    r.params["alpha_residual"] = worst_alpha;
    r.seconds = sw.seconds();
    r.finish(worst_routes, cfg.tol_or(1e-8));
    if (worst_gram > cfg.tol_or(1e-8)) r.pass = false;
    if (worst_ops > cfg.tol_or(1e-9)) r.pass = false;
    if (worst_alpha > cfg.tol_or(1e-12)) r.pass = false;
    return r;
}

// 12. Base-inversion symmetries: the grid family is the base-inverted torus
//     family, in one variable and in the nested product, and the pairing
//     weights are invariant under inverting the base.
inline CheckResult check_reversal_and_omega(const RunConfig& cfg) {
    Stopwatch sw;
    QContext ctx = cfg.ctx();
    CheckResult r = start("reversal-and-omega", cfg);
    const double q = ctx.q, qi = 1.0 / q;
    const double t = 2.7;
    r.params["t"] = t;
    double worst = 0.0;
    for (long n = 0; n <= 6; ++n) {
        for (long m = 0; m <= 2; ++m) {
            double y = t * std::pow(q, -cfg.k - 2.0 * m);
            cplx a = eigfun_v_base(n, cplx(y), cplx(t), cfg.k, qi, ctx);
            cplx b = eigfun_vtilde_grid_slot(n, m, t, cfg.k, ctx);
            worst = std::max(worst, rel_residual(a, b));
        }
        worst = std::max(worst, std::abs(pairing_omega_base(n, cfg.k, q) -
                                         pairing_omega_base(n, cfg.k, qi)));
    }
    // nested version, N = 3
    {
        MultiBetaParams mb{cfg.s(), cfg.u(), t, cfg.kvec3};
        std::vector<std::vector<long>> ms{{0, 0, 0}, {1, 0, 0}, {0, 1, 0},
                                          {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
        std::vector<std::vector<long>> ns{{0, 0, 0}, {2, 1, 0}, {1, 3, 2}};
        for (auto& m : ms) {
            std::vector<double> y = grid_points(m, mb, q);
            std::vector<cplx> yhat{cplx(y[2]), cplx(y[1]), cplx(y[0])};
            std::vector<double> khat{mb.kvec[2], mb.kvec[1], mb.kvec[0]};
            for (auto& n : ns) {
                std::vector<long> nhat{n[2], n[1], n[0]};
                cplx a = mv_v(nhat, yhat, cplx(t), khat, qi, ctx);
                cplx b = mv_vtilde(n, m, mb, ctx);
                worst = std::max(worst, rel_residual(a, b));
                worst = std::max(worst, std::abs(mv_omega(n, mb.kvec, q) -
                                                 mv_omega(n, mb.kvec, qi)));
            }
        }
    }
    r.seconds = sw.seconds();
    r.finish(worst, cfg.tol_or(1e-12));
    return r;
}

using CheckFn = std::function<CheckResult(const RunConfig&)>;

inline const std::vector<std::pair<std::string, CheckFn>>& registry() {
    static const std::vector<std::pair<std::string, CheckFn>> reg = {
        {"qseries-identities", check_qseries_identities},
        {"asc-gram-torus", check_asc_gram_torus},
        {"asc-qinv-orthogonality", check_asc_qinv_orthogonality},
        {"asc-difference-equations", check_asc_difference_equations},
        {"kernel-three-routes", check_kernel_three_routes},
        {"kernel-gram-grid", check_kernel_gram_grid},
        {"univariate-operator-eigen", check_univariate_operator_eigen},
        {"kernel-duality", check_kernel_duality},
        {"hopf-exact-suite", check_hopf_exact_suite},
        {"discrete-stencil-eigen", check_discrete_stencil_eigen},
        {"mv-k-operator-eigen", check_mv_k_operator_eigen},
        {"mv-kernel-identities", check_mv_kernel_identities},
        {"reversal-and-omega", check_reversal_and_omega},
    };
    return reg;
}

// Named groupings for the command-line `verify` subcommand.
inline const std::vector<std::pair<std::string, std::vector<std::string>>>& suites() {
    static const std::vector<std::pair<std::string, std::vector<std::string>>> s = {
        {"qseries", {"qseries-identities"}},
        {"hopf", {"hopf-exact-suite"}},
        {"univariate",
         {"asc-gram-torus", "asc-qinv-orthogonality", "asc-difference-equations",
          "kernel-three-routes", "kernel-gram-grid", "kernel-duality", "reversal-and-omega"}},
        {"operators", {"univariate-operator-eigen", "discrete-stencil-eigen"}},
        {"multivariate", {"mv-k-operator-eigen", "mv-kernel-identities"}},
    };
    return s;
}

}  // namespace qaw::checks
