#pragma once

// Al-Salam–Chihara and Askey–Wilson polynomials, their weights on the torus
// and on the discrete q-grid, and the one-variable kernel functions built
// from them.

#include <cmath>
#include <complex>

#include "qaw/core.hpp"
#include "qaw/qseries.hpp"

namespace qaw {

inline cplx mu_sym(cplx z, double q) { return (z + 1.0 / z) / (1.0 / q - q); }

inline cplx lambda_sym(cplx x, cplx s, double q) { return mu_sym(x, q) - mu_sym(s, q); }

struct BetaParams {
    cplx s;    // unit circle
    cplx u;    // unit circle
    double t;  // real, |t| >= 1/q
    double k;  // > 0

    void validate(const QContext& ctx) const {
        if (std::abs(std::abs(s) - 1.0) > 1e-12) throw DomainViolation("BetaParams: |s| != 1");
        if (std::abs(std::abs(u) - 1.0) > 1e-12) throw DomainViolation("BetaParams: |u| != 1");
        if (std::abs(t) < 1.0 / ctx.q - 1e-12) throw DomainViolation("BetaParams: |t| < 1/q");
        if (!(k > 0.0)) throw DomainViolation("BetaParams: k <= 0");
    }
};

// Q_n(x; a, b | base) = 3phi2(base^{-n}, a x, a / x ; a b, 0 ; base, base).
// Evaluated by the three-term recurrence in the degree,
//   Q_{n+1} = a [(x + 1/x - (a+b) base^n) Q_n - a (1 - base^n) Q_{n-1}]
//             / (1 - a b base^n),
// which is stable where the series form loses all precision beyond small n.
// Any nonzero real base is allowed.
inline cplx alsalam_chihara(long n, cplx x, cplx a, cplx b, double base, const QContext& ctx) {
    (void)ctx;
    if (n < 0) throw IndexOutOfRange("alsalam_chihara: n < 0");
    // extended precision: the step subtractions cancel badly when x sits near
    // a or b, which the coupled grids produce on purpose
    using lcplx = std::complex<long double>;
    lcplx xl(x), al(a), bl(b);
    lcplx prev = 0.0L, cur = 1.0L;
    lcplx xx = xl + 1.0L / xl;
    for (long j = 0; j < n; ++j) {
        long double bj = powl(base, static_cast<long double>(j));
        lcplx den = 1.0L - al * bl * bj;
        if (std::abs(den) < 1e-14L) throw ParameterPole("alsalam_chihara: a b base^n = 1");
        lcplx nxt = al * ((xx - (al + bl) * bj) * cur - al * (1.0L - bj) * prev) / den;
        prev = cur;
        cur = nxt;
    }
    return cplx(static_cast<double>(cur.real()), static_cast<double>(cur.imag()));
}

// p_n(x; a,b,c,d | base)
//   = (ab, ac, ad; base)_n a^{-n}
//     4phi3(base^{-n}, abcd base^{n-1}, a x, a/x ; ab, ac, ad ; base, base).
// The 4phi3 part is evaluated by the standard three-term recurrence
//   (x + 1/x) h_n = A_n h_{n+1} + (a + 1/a - A_n - C_n) h_n + C_n h_{n-1}
// (stable in the degree), then the prefactor is attached.
inline cplx askey_wilson(long n, cplx x, cplx a, cplx b, cplx c, cplx d, double base,
                         const QContext& ctx) {
    (void)ctx;
    if (n < 0) throw IndexOutOfRange("askey_wilson: n < 0");
    using lcplx = std::complex<long double>;
    const long double bs = base;
    lcplx al(a), bl(b), cl(c), dl(d), xl(x);
    lcplx abcd = al * bl * cl * dl;
    lcplx prev = 0.0L, cur = 1.0L;
    lcplx xx = xl + 1.0L / xl;
    for (long j = 0; j < n; ++j) {
        long double bj = powl(bs, static_cast<long double>(j));
        lcplx An = (1.0L - al * bl * bj) * (1.0L - al * cl * bj) * (1.0L - al * dl * bj) *
                   (1.0L - abcd * bj / bs) /
                   (al * (1.0L - abcd * bj * bj / bs) * (1.0L - abcd * bj * bj));
        lcplx Cn = al * (1.0L - bj) * (1.0L - bl * cl * bj / bs) * (1.0L - bl * dl * bj / bs) *
                   (1.0L - cl * dl * bj / bs) /
                   ((1.0L - abcd * bj * bj / (bs * bs)) * (1.0L - abcd * bj * bj / bs));
        if (std::abs(An) < 1e-300L) throw ParameterPole("askey_wilson: vanishing step coefficient");
        lcplx nxt = ((xx - al - 1.0L / al + An + Cn) * cur - Cn * prev) / An;
        prev = cur;
        cur = nxt;
    }
    cplx pref = qpoch_finite(a * b, base, n) * qpoch_finite(a * c, base, n) *
                qpoch_finite(a * d, base, n) * std::pow(a, cplx(static_cast<double>(-n)));
    return pref * cplx(static_cast<double>(cur.real()), static_cast<double>(cur.imag()));
}

// Torus weight
//   w(x; a, b | base) = (base, ab, x^{+-2}; base)_inf / (a x^{+-1}, b x^{+-1}; base)_inf.
inline cplx weight_asc_torus(cplx x, cplx a, cplx b, double base, const QContext& ctx) {
    if (std::abs(x * x - 1.0) < 1e-8 || std::abs(x * x * base * base - 1.0) < 1e-8)
        throw PoleOnTorus("weight_asc_torus: x too close to +-1 or +-1/base");
    cplx num = qpoch_inf(cplx(base), base, ctx) * qpoch_inf(a * b, base, ctx) *
               qpoch_inf(x * x, base, ctx) * qpoch_inf(1.0 / (x * x), base, ctx);
    cplx den = qpoch_pm_inf(a, {x}, base, ctx) * qpoch_pm_inf(b, {x}, base, ctx);
    if (std::abs(den) < 1e-300) throw PoleInDenominator("weight_asc_torus: vanishing denominator");
    return num / den;
}

// Discrete weight at the grid point y = a base^{-m}  (needs a b > 1, base*b < a):
//   W = [(1 - base^{2m}/a^2) / (1 - 1/a^2)]
//       * (1/a^2, 1/(ab); base)_m (b base/a; base)_inf
//         / [ (base, b base/a; base)_m (base/a^2; base)_inf ]
//       * (b/a)^m base^{m^2}.
inline cplx weight_asc_grid(long m, cplx a, cplx b, double base, const QContext& ctx) {
    if (m < 0) throw IndexOutOfRange("weight_asc_grid: m < 0");
    cplx a2 = a * a, ab = a * b;
    if (std::abs(1.0 - 1.0 / a2) < 1e-12) throw ParameterPole("weight_asc_grid: a^2 = 1");
    cplx head = (1.0 - std::pow(base, 2.0 * m) / a2) / (1.0 - 1.0 / a2);
    cplx num = qpoch_finite(1.0 / a2, base, m) * qpoch_finite(1.0 / ab, base, m) *
               qpoch_inf(b * base / a, base, ctx);
    cplx den = qpoch_finite(cplx(base), base, m) * qpoch_finite(b * base / a, base, m) *
               qpoch_inf(base / a2, base, ctx);
    if (std::abs(den) < 1e-300) throw PoleInDenominator("weight_asc_grid: vanishing denominator");
    return head * (num / den) * std::pow(b / a, cplx(static_cast<double>(m))) *
           std::pow(base, static_cast<double>(m) * static_cast<double>(m));
}

// ---- kernel eigenfunctions ----

// v_n(x) = (Q^{-(3k-1)/2}/s)^n (Q^{2k}; Q^2)_n / (Q^2; Q^2)_n
//          * Q_n(x; s Q^k, Q^k/s | Q^2)
// Generic in the base Q: the Q -> 1/Q image is the vtilde family.
inline cplx eigfun_v_base(long n, cplx x, cplx slot, double k, double Q, const QContext& ctx) {
    if (n < 0) throw IndexOutOfRange("eigfun_v_base: n < 0");
    cplx pref = std::pow(std::pow(Q, -(3.0 * k - 1.0) / 2.0) / slot, cplx(static_cast<double>(n)));
    cplx ratio = qpoch_finite(cplx(std::pow(Q, 2.0 * k)), Q * Q, n) /
                 qpoch_finite(cplx(Q * Q), Q * Q, n);
    cplx a = slot * std::pow(Q, k), b = std::pow(Q, k) / slot;
    return pref * ratio * alsalam_chihara(n, x, a, b, Q * Q, ctx);
}

inline cplx eigfun_v(long n, cplx x, const BetaParams& bp, const QContext& ctx) {
    return eigfun_v_base(n, x, bp.s, bp.k, ctx.q, ctx);
}

// vtilde_n at the grid point y = t q^{-k-2m}, in the numerically stable form
//   gamma_n c_m 2phi1(q^{-2m}, q^{2m+2k}/t^2 ; q^2/t^2 ; q^2, q^{2n+2}),
//   gamma_n = t^{-n} q^{n(3-k)/2} (q^{2k}; q^2)_n / (q^2; q^2)_n,
//   c_m = (-1)^m t^{2m} q^{-m(m+1)} (q^2/t^2; q^2)_m / (q^{2k}; q^2)_m.
// Everything here is real, and the terminating hypergeometric part cancels
// catastrophically in doubles (alternating terms ~1e8 times the value for
// m ~ 4), so the whole slot is evaluated in extended precision.
inline cplx eigfun_vtilde_grid_slot(long n, long m, double t, double k, const QContext& ctx) {
    if (n < 0 || m < 0) throw IndexOutOfRange("eigfun_vtilde_grid: negative index");
    const long double q = ctx.q;
    const long double q2 = q * q, t2 = static_cast<long double>(t) * t;
    auto poch = [&](long double a, long cnt) {
        long double r = 1.0L;
        for (long i = 0; i < cnt; ++i) r *= 1.0L - a * powl(q2, static_cast<long double>(i));
        return r;
    };
    long double gamma = powl(1.0L / t, static_cast<long double>(n)) *
                        powl(q, n * (3.0L - k) / 2.0L) * poch(powl(q, 2.0L * k), n) / poch(q2, n);
    long double sgn = (m % 2 == 0) ? 1.0L : -1.0L;
    long double cm = sgn * powl(t2, static_cast<long double>(m)) *
                     powl(q, -static_cast<long double>(m) * (m + 1.0L)) * poch(q2 / t2, m) /
                     poch(powl(q, 2.0L * k), m);
    const long double a1 = powl(q2, static_cast<long double>(-m));
    const long double a2 = powl(q, 2.0L * m + 2.0L * k) / t2;
    const long double b1 = q2 / t2;
    const long double z = powl(q, 2.0L * n + 2.0L);
    long double phi = 0.0L, term = 1.0L;
    for (long l = 0; l <= m; ++l) {
        phi += term;
        long double ql = powl(q2, static_cast<long double>(l));
        long double den = (1.0L - b1 * ql) * (1.0L - q2 * ql);
        if (fabsl(den) < 1e-14L) throw ParameterPole("eigfun_vtilde_grid: t^2 = q^{2l}");
        term *= (1.0L - a1 * ql) * (1.0L - a2 * ql) / den * z;
    }
    return cplx(static_cast<double>(gamma * cm * phi), 0.0);
}

inline cplx eigfun_vtilde_grid(long n, long m, const BetaParams& bp, const QContext& ctx) {
    return eigfun_vtilde_grid_slot(n, m, bp.t, bp.k, ctx);
}

// omega_n = Q^{n(k-1)} (Q^2; Q^2)_n / (Q^{2k}; Q^2)_n  (invariant under Q -> 1/Q)
inline cplx pairing_omega_base(long n, double k, double Q) {
    return std::pow(Q, n * (k - 1.0)) * qpoch_finite(cplx(Q * Q), Q * Q, n) /
           qpoch_finite(cplx(std::pow(Q, 2.0 * k)), Q * Q, n);
}

inline cplx pairing_omega(long n, double k, const QContext& ctx) {
    return pairing_omega_base(n, k, ctx.q);
}

// Askey-Wilson parameter quadruple attached to (s, t, u, k):
//   a = q^k s, b = q^k / s, c = q u / t, d = q / (u t).
struct AWQuad {
    cplx a, b, c, d;
};
inline AWQuad beta_aw_params(const BetaParams& bp, double q) {
    double qk = std::pow(q, bp.k);
    return {bp.s * qk, qk / bp.s, q * bp.u / bp.t, q / (bp.u * bp.t)};
}

// ---- the kernel P itself ----

// Series route: P(x, t q^{-k-2m}) = sum_n v_n(x) vtilde_n(m) u^n omega_n.
// Converges for |x| < |t| / q (tail ratio ~ q |x| / |t|).
inline cplx kernel_p_sum(cplx x, long m, const BetaParams& bp, const QContext& ctx,
                         long* used_terms = nullptr) {
    double q = ctx.q;
    double xr = std::max(std::abs(x), 1.0 / std::abs(x));
    double tail_ratio = q * xr / std::abs(bp.t);
    if (tail_ratio >= 1.0 - 1e-9)
        throw DivergentSeries("kernel_p_sum: |x| too large for |t|, series diverges");
    cplx acc = 0.0;
    double cutoff = ctx.tol_abs * (1.0 - tail_ratio);
    int quiet = 0;
    long n = 0;
    for (; n < ctx.max_terms; ++n) {
        cplx term = eigfun_v(n, x, bp, ctx) * eigfun_vtilde_grid(n, m, bp, ctx) *
                    std::pow(bp.u, cplx(static_cast<double>(n))) * pairing_omega(n, bp.k, ctx);
        acc += term;
        if (std::abs(term) < cutoff * (1.0 + std::abs(acc))) {
            if (++quiet >= 5) break;
        } else {
            quiet = 0;
        }
    }
    if (n >= ctx.max_terms) throw NonConvergent("kernel_p_sum: no tail decay within max_terms");
    if (used_terms) *used_terms = n + 1;
    return acc;
}

// Closed route (valid off the torus as well):
//   P(x, t q^{-k-2m})
//     = (-1)^m d^{-m} q^{-m(m-1)}
//       * (a c q^{2m}, b c q^{2m}; q^2)_inf / [ (a b; q^2)_m (c x^{+-1}; q^2)_inf ]
//       * p_m(x; a, c, b, d | q^2)
// with (a,b,c,d) the attached Askey-Wilson quadruple.
inline cplx kernel_p_closed(cplx x, long m, const BetaParams& bp, const QContext& ctx) {
    if (m < 0) throw IndexOutOfRange("kernel_p_closed: m < 0");
    double q = ctx.q, q2 = q * q;
    AWQuad p = beta_aw_params(bp, q);
    double q2m = std::pow(q, 2.0 * m);
    double sgn = (m % 2 == 0) ? 1.0 : -1.0;
    cplx pref = sgn * std::pow(p.d, cplx(static_cast<double>(-m))) *
                std::pow(q, -static_cast<double>(m) * (m - 1.0));
    cplx num = qpoch_inf(p.a * p.c * q2m, q2, ctx) * qpoch_inf(p.b * p.c * q2m, q2, ctx);
    cplx den = qpoch_finite(p.a * p.b, q2, m) * qpoch_pm_inf(p.c, {x}, q2, ctx);
    if (std::abs(den) < 1e-300) throw PoleInDenominator("kernel_p_closed: vanishing denominator");
    return pref * (num / den) * askey_wilson(m, x, p.a, p.c, p.b, p.d, q2, ctx);
}

// Three-term relation route:
//   lambda_{x,s} P_m = A_m^+ P_{m+1} + B_m P_m + A_m^- P_{m-1},   P_{-1} = 0,
// seeded by the m = 0 product formula
//   P_0(x) = (a c, b c; q^2)_inf / (c x^{+-1}; q^2)_inf.
// The coefficients are the one-variable stencil amplitudes evaluated on the
// t-grid; they are supplied by the operators module, so this route lives in
// the verification layer.  Here we expose only the m = 0 seed.
inline cplx kernel_p_base(cplx x, const BetaParams& bp, const QContext& ctx) {
    double q2 = ctx.q * ctx.q;
    AWQuad p = beta_aw_params(bp, ctx.q);
    cplx den = qpoch_pm_inf(p.c, {x}, q2, ctx);
    if (std::abs(den) < 1e-300) throw PoleInDenominator("kernel_p_base: vanishing denominator");
    return qpoch_inf(p.a * p.c, q2, ctx) * qpoch_inf(p.b * p.c, q2, ctx) / den;
}

// Discrete weight for the t-grid, expressed through the generic grid weight:
//   wtilde(m) = W(t q^{-k-2m}; q^{-k} t, q^{-k}/t | q^2).
inline cplx kernel_weight_grid(long m, const BetaParams& bp, const QContext& ctx) {
    double q = ctx.q, qmk = std::pow(q, -bp.k);
    return weight_asc_grid(m, cplx(qmk * bp.t), cplx(qmk / bp.t), q * q, ctx);
}

}  // namespace qaw
