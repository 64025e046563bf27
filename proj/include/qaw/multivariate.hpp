#pragma once

// Multivariate eigenfunctions, weights, the geometric grid, Gasper-Rahman
// nested Askey-Wilson products, and the multivariate kernel P with its
// closed-form identification and its difference/recurrence operators.

#include <functional>
#include <numeric>
#include <vector>

#include "qaw/core.hpp"
#include "qaw/operators.hpp"
#include "qaw/qseries.hpp"
#include "qaw/univariate.hpp"

namespace qaw {

struct MultiBetaParams {
    cplx s;
    cplx u;
    double t;
    std::vector<double> kvec;

    int N() const { return static_cast<int>(kvec.size()); }

    void validate(const QContext& ctx) const {
        if (kvec.empty()) throw DomainViolation("MultiBetaParams: N < 1");
        if (std::abs(std::abs(s) - 1.0) > 1e-12) throw DomainViolation("MultiBetaParams: |s| != 1");
        if (std::abs(std::abs(u) - 1.0) > 1e-12) throw DomainViolation("MultiBetaParams: |u| != 1");
        if (std::abs(t) < 1.0 / ctx.q - 1e-12) throw DomainViolation("MultiBetaParams: |t| < 1/q");
        for (double k : kvec)
            if (!(k > 0.0)) throw DomainViolation("MultiBetaParams: k <= 0");
    }
};

inline std::vector<long> partial_sums(const std::vector<long>& m) {
    std::vector<long> M(m.size() + 1, 0);
    for (std::size_t i = 0; i < m.size(); ++i) M[i + 1] = M[i] + m[i];
    return M;
}

// Grid points y_j = t q^{-K_j - 2 M_j}, j = 1..N (index 0 of the result).
inline std::vector<double> grid_points(const std::vector<long>& mvec, const MultiBetaParams& mb,
                                       double q) {
    if (mvec.size() != mb.kvec.size()) throw IndexOutOfRange("grid_points: size mismatch");
    std::vector<double> y;
    double cur = mb.t;
    for (std::size_t j = 0; j < mvec.size(); ++j) {
        if (mvec[j] < 0) throw IndexOutOfRange("grid_points: negative index");
        cur *= std::pow(q, -mb.kvec[j] - 2.0 * mvec[j]);
        y.push_back(cur);
    }
    return y;
}

// mv_v(n; x) = prod_j v_{n_j}(x_j) with coupling slot x_{j+1} (x_{N+1} = s).
// Generic in the base Q; Q -> 1/q gives the reversed vtilde family.
inline cplx mv_v(const std::vector<long>& nvec, const std::vector<cplx>& xvec, cplx s,
                 const std::vector<double>& kvec, double Q, const QContext& ctx) {
    const std::size_t N = kvec.size();
    if (nvec.size() != N || xvec.size() != N) throw IndexOutOfRange("mv_v: size mismatch");
    std::vector<cplx> xl = xvec;
    xl.push_back(s);
    cplx p = 1.0;
    for (std::size_t j = 0; j < N; ++j) p *= eigfun_v_base(nvec[j], xl[j], xl[j + 1], kvec[j], Q, ctx);
    return p;
}

// mv_vtilde(n; y(m)) = prod_j vtilde factors with coupling slot y_{j-1} (y_0 = t).
inline cplx mv_vtilde(const std::vector<long>& nvec, const std::vector<long>& mvec,
                      const MultiBetaParams& mb, const QContext& ctx) {
    const std::size_t N = mb.kvec.size();
    if (nvec.size() != N || mvec.size() != N) throw IndexOutOfRange("mv_vtilde: size mismatch");
    std::vector<double> y = grid_points(mvec, mb, ctx.q);
    cplx p = 1.0;
    for (std::size_t j = 0; j < N; ++j) {
        double slot = (j == 0) ? mb.t : y[j - 1];
        p *= eigfun_vtilde_grid_slot(nvec[j], mvec[j], slot, mb.kvec[j], ctx);
    }
    return p;
}

inline cplx mv_omega(const std::vector<long>& nvec, const std::vector<double>& kvec, double Q) {
    if (nvec.size() != kvec.size()) throw IndexOutOfRange("mv_omega: size mismatch");
    cplx p = 1.0;
    for (std::size_t j = 0; j < nvec.size(); ++j) p *= pairing_omega_base(nvec[j], kvec[j], Q);
    return p;
}

// w(x) = C_k prod_j (x_j^{+-2}; q^2)_inf / (q^{k_j} x_{j+1}^{+-1} x_j^{+-1}; q^2)_inf,
// C_k = prod_j (q^2, q^{2 k_j}; q^2)_inf.
inline cplx mv_w(const std::vector<cplx>& xvec, const MultiBetaParams& mb, const QContext& ctx) {
    const std::size_t N = mb.kvec.size();
    if (xvec.size() != N) throw IndexOutOfRange("mv_w: size mismatch");
    double q2 = ctx.q * ctx.q;
    std::vector<cplx> xl = xvec;
    xl.push_back(mb.s);
    cplx p = 1.0;
    for (std::size_t j = 0; j < N; ++j) {
        cplx ck = qpoch_inf(cplx(q2), q2, ctx) *
                  qpoch_inf(cplx(std::pow(ctx.q, 2.0 * mb.kvec[j])), q2, ctx);
        cplx num = qpoch_inf(xl[j] * xl[j], q2, ctx) * qpoch_inf(1.0 / (xl[j] * xl[j]), q2, ctx);
        cplx den = qpoch_pm_inf(cplx(std::pow(ctx.q, mb.kvec[j])), {xl[j + 1], xl[j]}, q2, ctx);
        if (std::abs(den) < 1e-300) throw PoleInDenominator("mv_w: vanishing denominator");
        p *= ck * num / den;
    }
    return p;
}

// wtilde(y) as the product of per-coordinate discrete weights
// W(y_j; q^{-k_j} y_{j-1}, q^{-k_j}/y_{j-1} | q^2), accumulated in log space.
inline double mv_wtilde(const std::vector<long>& mvec, const MultiBetaParams& mb,
                        const QContext& ctx) {
    const std::size_t N = mb.kvec.size();
    if (mvec.size() != N) throw IndexOutOfRange("mv_wtilde: size mismatch");
    std::vector<double> y = grid_points(mvec, mb, ctx.q);
    LogProduct acc;
    for (std::size_t j = 0; j < N; ++j) {
        double slot = (j == 0) ? mb.t : y[j - 1];
        double qmk = std::pow(ctx.q, -mb.kvec[j]);
        acc.mul(weight_asc_grid(mvec[j], cplx(qmk * slot), cplx(qmk / slot), ctx.q * ctx.q, ctx));
    }
    return acc.value().real();
}

// Explicit product formula for the same weight, used as a cross-check:
//   prod_j (q^{2K_{j-1}+4M_{j-1}+2m_j}/t^2)^{m_j}
//     * (1 - q^{2K_j+4M_j}/t^2)/(1 - q^{2K_j+4M_{j-1}}/t^2)
//     * (q^{2K_j+4M_{j-1}}/t^2, q^{2k_j}; q^2)_{m_j}
//       (q^{2K_{j-1}+4M_{j-1}+2m_j+2}/t^2; q^2)_inf
//       / [ (q^2; q^2)_{m_j} (q^{2K_j+4M_{j-1}+2}/t^2; q^2)_inf ]
inline double mv_wtilde_explicit(const std::vector<long>& mvec, const MultiBetaParams& mb,
                                 const QContext& ctx) {
    const std::size_t N = mb.kvec.size();
    double q = ctx.q, q2 = q * q, t2 = mb.t * mb.t;
    std::vector<long> M = partial_sums(mvec);
    std::vector<double> K(N + 1, 0.0);
    for (std::size_t j = 0; j < N; ++j) K[j + 1] = K[j] + mb.kvec[j];
    LogProduct acc;
    for (std::size_t j = 1; j <= N; ++j) {
        long m = mvec[j - 1];
        double base_pow = std::pow(q, 2.0 * K[j - 1] + 4.0 * M[j - 1] + 2.0 * m) / t2;
        acc.mul_pow(cplx(base_pow), m);
        acc.mul(cplx((1.0 - std::pow(q, 2.0 * K[j] + 4.0 * M[j]) / t2) /
                     (1.0 - std::pow(q, 2.0 * K[j] + 4.0 * M[j - 1]) / t2)));
        acc.mul(qpoch_finite(cplx(std::pow(q, 2.0 * K[j] + 4.0 * M[j - 1]) / t2), q2, m));
        acc.mul(qpoch_finite(cplx(std::pow(q, 2.0 * mb.kvec[j - 1])), q2, m));
        acc.mul(qpoch_inf(cplx(std::pow(q, 2.0 * K[j - 1] + 4.0 * M[j - 1] + 2.0 * m + 2.0) / t2),
                          q2, ctx));
        acc.div(qpoch_finite(cplx(q2), q2, m));
        acc.div(qpoch_inf(cplx(std::pow(q, 2.0 * K[j] + 4.0 * M[j - 1] + 2.0) / t2), q2, ctx));
    }
    return acc.value().real();
}

// alpha_0 = u, alpha_{N+2} = s, alpha_j = u q^{K_{j-1}+1}/t for j = 1..N+1.
inline std::vector<cplx> alpha_vector(const MultiBetaParams& mb, double q) {
    const std::size_t N = mb.kvec.size();
    std::vector<double> K(N + 1, 0.0);
    for (std::size_t j = 0; j < N; ++j) K[j + 1] = K[j] + mb.kvec[j];
    std::vector<cplx> al(N + 3);
    al[0] = mb.u;
    al[N + 2] = mb.s;
    for (std::size_t j = 1; j <= N + 1; ++j)
        al[j] = mb.u * std::pow(q, K[j - 1] + 1.0) / mb.t;
    return al;
}

// Nested Gasper-Rahman product
//   P_N(m; x; alpha | base) = prod_j p_{m_j}(x_j;
//     alpha_j base^{M_{j-1}}, (alpha_j/alpha_0^2) base^{M_{j-1}},
//     (alpha_{j+1}/alpha_j) x_{j+1}, (alpha_{j+1}/alpha_j)/x_{j+1} | base),
// with x_{N+1} = alpha_{N+2}.
inline cplx gr_aw(const std::vector<long>& mvec, const std::vector<cplx>& xvec,
                  const std::vector<cplx>& alpha, double base, const QContext& ctx) {
    const std::size_t N = mvec.size();
    if (xvec.size() != N || alpha.size() != N + 3) throw IndexOutOfRange("gr_aw: size mismatch");
    std::vector<cplx> xl = xvec;
    xl.push_back(alpha[N + 2]);
    std::vector<long> M = partial_sums(mvec);
    cplx p = 1.0;
    for (std::size_t j = 1; j <= N; ++j) {
        cplx shift = std::pow(cplx(base), cplx(static_cast<double>(M[j - 1])));
        cplx a = alpha[j] * shift;
        cplx b = alpha[j] / (alpha[0] * alpha[0]) * shift;
        cplx c = alpha[j + 1] / alpha[j] * xl[j];
        cplx d = alpha[j + 1] / alpha[j] / xl[j];
        p *= askey_wilson(mvec[j - 1], xl[j - 1], a, b, c, d, base, ctx);
    }
    return p;
}

// Prefactor in the closed-form identification:
//   C(m; x) = (alpha_{N+1} alpha_{N+2} q^{2 M_N}, alpha_{N+1} q^{2 M_N}/alpha_{N+2}; q^2)_inf
//             / (alpha_1 x_1^{+-1}; q^2)_inf
//             * prod_j (-alpha_0^2 q^{-2 M_{j-1}}/alpha_j)^{m_j} q^{-m_j(m_j-1)}
//               / (alpha_{j+1}^2/alpha_j^2; q^2)_{m_j}
inline cplx c_beta(const std::vector<long>& mvec, const std::vector<cplx>& xvec,
                   const std::vector<cplx>& alpha, double q, const QContext& ctx) {
    const std::size_t N = mvec.size();
    double q2 = q * q;
    std::vector<long> M = partial_sums(mvec);
    double sh = std::pow(q, 2.0 * M[N]);
    cplx den = qpoch_pm_inf(alpha[1], {xvec[0]}, q2, ctx);
    if (std::abs(den) < 1e-300) throw PoleInDenominator("c_beta: vanishing denominator");
    cplx out = qpoch_inf(alpha[N + 1] * alpha[N + 2] * sh, q2, ctx) *
               qpoch_inf(alpha[N + 1] * sh / alpha[N + 2], q2, ctx) / den;
    for (std::size_t j = 1; j <= N; ++j) {
        long m = mvec[j - 1];
        cplx base_fac = -alpha[0] * alpha[0] * std::pow(q, -2.0 * M[j - 1]) / alpha[j];
        out *= std::pow(base_fac, cplx(static_cast<double>(m))) *
               std::pow(q, -static_cast<double>(m) * (m - 1.0)) /
               qpoch_finite(alpha[j + 1] * alpha[j + 1] / (alpha[j] * alpha[j]), q2, m);
    }
    return out;
}

// Per-factor parameters of the product factorization
//   P(x, y) = prod_j P_{beta_j}(x_j, y_j),  beta_j = (x_{j+1}, y_{j-1}, u, k_j).
inline BetaParams factor_params(std::size_t j, const std::vector<cplx>& xl,
                                const std::vector<double>& yl, const MultiBetaParams& mb) {
    return BetaParams{xl[j + 1], mb.u, yl[j], mb.kvec[j]};
}

// Closed-form product route: valid for arbitrary (off-torus) x arguments.
inline cplx mv_pbeta_product(const std::vector<cplx>& xvec, const std::vector<long>& mvec,
                             const MultiBetaParams& mb, const QContext& ctx) {
    const std::size_t N = mb.kvec.size();
    if (xvec.size() != N || mvec.size() != N)
        throw IndexOutOfRange("mv_pbeta_product: size mismatch");
    std::vector<cplx> xl = xvec;
    xl.push_back(mb.s);
    std::vector<double> y = grid_points(mvec, mb, ctx.q);
    std::vector<double> yl(1, mb.t);
    yl.insert(yl.end(), y.begin(), y.end());
    cplx p = 1.0;
    for (std::size_t j = 0; j < N; ++j)
        p *= kernel_p_closed(xl[j], mvec[j], factor_params(j, xl, yl, mb), ctx);
    return p;
}

// Series product route (torus x only).
inline cplx mv_pbeta_sum(const std::vector<cplx>& xvec, const std::vector<long>& mvec,
                         const MultiBetaParams& mb, const QContext& ctx) {
    const std::size_t N = mb.kvec.size();
    if (xvec.size() != N || mvec.size() != N) throw IndexOutOfRange("mv_pbeta_sum: size mismatch");
    std::vector<cplx> xl = xvec;
    xl.push_back(mb.s);
    std::vector<double> y = grid_points(mvec, mb, ctx.q);
    std::vector<double> yl(1, mb.t);
    yl.insert(yl.end(), y.begin(), y.end());
    cplx p = 1.0;
    for (std::size_t j = 0; j < N; ++j)
        p *= kernel_p_sum(xl[j], mvec[j], factor_params(j, xl, yl, mb), ctx);
    return p;
}

// Gasper-Rahman route.
inline cplx mv_pbeta_closed(const std::vector<cplx>& xvec, const std::vector<long>& mvec,
                            const MultiBetaParams& mb, const QContext& ctx) {
    std::vector<cplx> al = alpha_vector(mb, ctx.q);
    return c_beta(mvec, xvec, al, ctx.q, ctx) * gr_aw(mvec, xvec, al, ctx.q * ctx.q, ctx);
}

// ---- multivariate q-difference operators ----

using PointFn = std::function<cplx(const std::vector<cplx>&)>;
using GridFn = std::function<cplx(const std::vector<long>&)>;

// rho(K^{-2,(j)}) f(x) = sum_nu V_nu^{(j)}(x) f(T_nu x); pass Q = 1/q together
// with the reversed coordinate list for the tilde-side image.
inline cplx apply_mv_K(int j, const std::vector<cplx>& xvec, cplx slot,
                       const std::vector<double>& kvec, double Q, const PointFn& f) {
    const int N = static_cast<int>(kvec.size());
    if (j < 1 || j > N) throw IndexOutOfRange("apply_mv_K: j out of range");
    std::vector<cplx> xl = xvec;
    xl.push_back(slot);
    cplx tot = 0.0;
    for (auto& nu : all_shifts(j)) {
        cplx coef = mv_stencil_coef(nu, xl, kvec, Q);
        if (coef == cplx(0.0)) continue;
        std::vector<cplx> xs = xvec;
        for (int i = 0; i < j; ++i) xs[i] *= std::pow(Q, 2.0 * nu[i]);
        tot += coef * f(xs);
    }
    return tot;
}

// rho(Ytilde^{(j)}_{t,u}) f(x): difference side, base q, coordinates x_1..x_j.
inline cplx apply_mv_difference(int j, const std::vector<cplx>& xvec, const MultiBetaParams& mb,
                                double q, const PointFn& f) {
    const int N = mb.N();
    if (j < 1 || j > N) throw IndexOutOfRange("apply_mv_difference: j out of range");
    std::vector<cplx> xl = xvec;
    xl.push_back(mb.s);
    cplx mu_t = cplx(mb.t + 1.0 / mb.t) / (1.0 / q - q);
    cplx tot = 0.0;
    for (auto& nu : all_shifts(j)) {
        cplx coef = mv_stencil_coef(nu, xl, mb.kvec, q) *
                    beta_multiplier(nu[0], xl[0], mb.u, mu_t, q);
        if (coef == cplx(0.0)) continue;
        std::vector<cplx> xs = xvec;
        for (int i = 0; i < j; ++i) xs[i] *= std::pow(q, 2.0 * nu[i]);
        tot += coef * f(xs);
    }
    tot -= beta_id_offset(xl[j], mb.u, mu_t, q) * f(xvec);
    return tot;
}

// rho~(Y^{(j)}_{s,u}) g(m): recurrence side.  The same stencil builder at
// base q^{-1} on the reversed list (y_N, ..., y_1, t) with reversed k's;
// a shift of stencil component i moves the grid index of coordinate
// l = N-1-i by +nu_i and the next coordinate's index by -nu_i.
inline cplx apply_mv_recurrence(int j, const std::vector<long>& mvec, const MultiBetaParams& mb,
                                double q, const GridFn& g) {
    const int N = mb.N();
    if (j < 1 || j > N) throw IndexOutOfRange("apply_mv_recurrence: j out of range");
    std::vector<double> y = grid_points(mvec, mb, q);
    std::vector<cplx> yhat;
    for (int i = N - 1; i >= 0; --i) yhat.push_back(cplx(y[i]));
    yhat.push_back(cplx(mb.t));
    std::vector<double> khat(mb.kvec.rbegin(), mb.kvec.rend());
    double qi = 1.0 / q;
    cplx mu_s = (mb.s + 1.0 / mb.s) / (1.0 / qi - qi);
    cplx tot = 0.0;
    for (auto& nu : all_shifts(j)) {
        std::vector<long> m2 = mvec;
        bool ok = true;
        for (int i = 0; i < j; ++i) {
            int l = N - 1 - i;
            m2[l] += nu[i];
            if (l + 1 < N) m2[l + 1] -= nu[i];
        }
        for (long mm : m2)
            if (mm < 0) ok = false;
        if (!ok) continue;  // boundary: the stencil coefficient vanishes there
        cplx coef = mv_stencil_coef(nu, yhat, khat, qi) *
                    beta_multiplier(nu[0], yhat[0], mb.u, mu_s, qi);
        if (coef == cplx(0.0)) continue;
        tot += coef * g(m2);
    }
    tot -= beta_id_offset(yhat[j], mb.u, mu_s, qi) * g(mvec);
    return tot;
}

// rho~(K^{2,(j)}) on grid functions: V stencil at base q^{-1} on the
// reversed coordinates, with the same index bookkeeping as the recurrence.
inline cplx apply_mv_Ktilde(int j, const std::vector<long>& mvec, const MultiBetaParams& mb,
                            double q, const GridFn& g) {
    const int N = mb.N();
    if (j < 1 || j > N) throw IndexOutOfRange("apply_mv_Ktilde: j out of range");
    std::vector<double> y = grid_points(mvec, mb, q);
    std::vector<cplx> yhat;
    for (int i = N - 1; i >= 0; --i) yhat.push_back(cplx(y[i]));
    yhat.push_back(cplx(mb.t));
    std::vector<double> khat(mb.kvec.rbegin(), mb.kvec.rend());
    cplx tot = 0.0;
    for (auto& nu : all_shifts(j)) {
        std::vector<long> m2 = mvec;
        bool ok = true;
        for (int i = 0; i < j; ++i) {
            int l = N - 1 - i;
            m2[l] += nu[i];
            if (l + 1 < N) m2[l + 1] -= nu[i];
        }
        for (long mm : m2)
            if (mm < 0) ok = false;
        if (!ok) continue;
        cplx coef = mv_stencil_coef(nu, yhat, khat, 1.0 / q);
        if (coef == cplx(0.0)) continue;
        tot += coef * g(m2);
    }
    return tot;
}

}  // namespace qaw
