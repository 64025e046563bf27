#pragma once

// Difference-operator stencils: discrete three-term actions on sequence
// space and continuous q-difference operators on (multivariate) Laurent
// polynomials, with all coefficient amplitudes parameterized by the base Q
// so that the q <-> q^{-1} image of each operator is obtained for free.

#include <functional>
#include <vector>

#include "qaw/core.hpp"
#include "qaw/univariate.hpp"

namespace qaw {

inline void guard_pole(cplx den, const char* what) {
    if (std::abs(den) < 1e-8) throw PoleAtSample(what);
}

// ---- continuous coefficient amplitudes ----

// A_k(x; s) = Q^{-k}(1 - Q^k s x)(1 - Q^k x/s) / ((1 - x^2)(1 - Q^2 x^2))
inline cplx coef_A(cplx x, cplx s, double k, double Q) {
    cplx den = (1.0 - x * x) * (1.0 - Q * Q * x * x);
    guard_pole(den, "coef_A: sample on pole ring");
    double qk = std::pow(Q, k);
    return std::pow(Q, -k) * (1.0 - qk * s * x) * (1.0 - qk * x / s) / den;
}

// B_k(x; s) = [Q^2(Q^{-1}+Q)(Q^{1-k}+Q^{k-1}) - Q^2(x+1/x)(s+1/s)]
//             / ((1 - Q^2 x^2)(1 - Q^2 / x^2))
inline cplx coef_B(cplx x, cplx s, double k, double Q) {
    cplx den = (1.0 - Q * Q * x * x) * (1.0 - Q * Q / (x * x));
    guard_pole(den, "coef_B: sample on pole ring");
    double Q2 = Q * Q;
    return (Q2 * (1.0 / Q + Q) * (std::pow(Q, 1.0 - k) + std::pow(Q, k - 1.0)) -
            Q2 * (x + 1.0 / x) * (s + 1.0 / s)) /
           den;
}

// C_k(x; s) = Q^{-k}(1 - Q^k x s)(1 - Q^{k+2} x s) / ((1 - x^2)(1 - Q^2 x^2))
inline cplx coef_C(cplx x, cplx s, double k, double Q) {
    cplx den = (1.0 - x * x) * (1.0 - Q * Q * x * x);
    guard_pole(den, "coef_C: sample on pole ring");
    double qk = std::pow(Q, k);
    return std::pow(Q, -k) * (1.0 - qk * x * s) * (1.0 - qk * Q * Q * x * s) / den;
}

// D_k(x; s) = Q^{3-k}(Q^{-1}+Q)(1 - Q^k s x)(1 - Q^k s / x)
//             / ((1 - Q^2 x^2)(1 - Q^2 / x^2))
inline cplx coef_D(cplx x, cplx s, double k, double Q) {
    cplx den = (1.0 - Q * Q * x * x) * (1.0 - Q * Q / (x * x));
    guard_pole(den, "coef_D: sample on pole ring");
    double qk = std::pow(Q, k);
    return std::pow(Q, 3.0 - k) * (1.0 / Q + Q) * (1.0 - qk * s * x) * (1.0 - qk * s / x) / den;
}

// ---- univariate three-term operator on meromorphic functions ----

// A_beta(x) = -A_k(x; s) * t (1 - Q x/(u t))(1 - u/(Q t x)) / (Q^{-1} - Q)
inline cplx coef_A_beta(cplx x, cplx s, cplx t, cplx u, double k, double Q) {
    return -coef_A(x, s, k, Q) * t * (1.0 - Q * x / (u * t)) * (1.0 - u / (Q * t * x)) /
           (1.0 / Q - Q);
}

// B_beta(x) = B_k(x; s) [ (u+1/u) mu_x / (Q^{-1}+Q) - mu_t ]
//             - (u+1/u) mu_s / (Q^{-1}+Q) + mu_t
inline cplx coef_B_beta(cplx x, cplx s, cplx t, cplx u, double k, double Q) {
    cplx mx = (x + 1.0 / x) / (1.0 / Q - Q);
    cplx ms = (s + 1.0 / s) / (1.0 / Q - Q);
    cplx mt = (t + 1.0 / t) / (1.0 / Q - Q);
    cplx uu = (u + 1.0 / u) / (1.0 / Q + Q);
    return coef_B(x, s, k, Q) * (uu * mx - mt) - uu * ms + mt;
}

// Alternate closed form:
//   B_beta(x) = (t q^{-k} + q^k/t - t - 1/t)/(q-q^{-1}) + F(x) + F(1/x),
//   F(x) = t q^{-k}(1-q^k s x)(1-q^k x/s)(1-q u x/t)(1-q x/(u t))
//          / ((q^{-1}-q)(1-x^2)(1-q^2 x^2)).
inline cplx coef_B_beta_alt(cplx x, cplx s, double t, cplx u, double k, double q) {
    auto F = [&](cplx z) {
        cplx den = (1.0 / q - q) * (1.0 - z * z) * (1.0 - q * q * z * z);
        guard_pole(den, "coef_B_beta_alt: sample on pole ring");
        double qk = std::pow(q, k);
        return t * std::pow(q, -k) * (1.0 - qk * s * z) * (1.0 - qk * z / s) *
               (1.0 - q * u * z / t) * (1.0 - q * z / (u * t)) / den;
    };
    return (t * std::pow(q, -k) + std::pow(q, k) / t - t - 1.0 / t) / (q - 1.0 / q) + F(x) +
           F(1.0 / x);
}

// Standard Askey-Wilson divided-difference amplitude at base q^2:
//   A_L(x) = (1-ax)(1-bx)(1-cx)(1-dx) / ((1-x^2)(1-q^2 x^2)),
//   L = A_L(x)(T - Id) + A_L(1/x)(T^{-1} - Id).
inline cplx coef_aw_op(cplx x, const AWQuad& p, double q) {
    cplx den = (1.0 - x * x) * (1.0 - q * q * x * x);
    guard_pole(den, "coef_aw_op: sample on pole ring");
    return (1.0 - p.a * x) * (1.0 - p.b * x) * (1.0 - p.c * x) * (1.0 - p.d * x) / den;
}

// ---- multivariate continuous stencil ----

// Coefficient of the shift T_nu in the j-variable stencil; xl holds the j
// active coordinates followed by the coupling slot (x_{j+1} or s), kvec the
// matching k parameters.  nu entries are in {-1,0,1}.
inline cplx mv_stencil_coef(const std::vector<int>& nu, const std::vector<cplx>& xl,
                            const std::vector<double>& kvec, double Q) {
    const std::size_t j = nu.size();
    if (j == 0 || xl.size() < j + 1 || kvec.size() < j)
        throw IndexOutOfRange("mv_stencil_coef: inconsistent sizes");
    auto pw = [](cplx z, int e) { return e >= 0 ? z : 1.0 / z; };
    cplx r = 1.0;
    // last factor
    {
        std::size_t i = j;
        if (nu[i - 1] != 0)
            r *= coef_A(pw(xl[i - 1], nu[i - 1]), xl[i], kvec[i - 1], Q);
        else
            r *= coef_B(xl[i - 1], xl[i], kvec[i - 1], Q);
    }
    for (std::size_t i = 1; i < j; ++i) {
        int ni = nu[i - 1], ni1 = nu[i];
        if (ni != 0 && ni1 == 0)
            r *= coef_A(pw(xl[i - 1], ni), xl[i], kvec[i - 1], Q);
        else if (ni == 0 && ni1 == 0)
            r *= coef_B(xl[i - 1], xl[i], kvec[i - 1], Q);
        else if (ni != 0 && ni1 != 0)
            r *= coef_C(pw(xl[i - 1], ni), pw(xl[i], ni1), kvec[i - 1], Q);
        else
            r *= coef_D(xl[i - 1], pw(xl[i], ni1), kvec[i - 1], Q);
    }
    return r;
}

// The extra multiplier that upgrades the K-stencil coefficient to the
// three-parameter operator coefficient:
//   (u+1/u) mu_{Q^{2 nu_1} x_1} / (Q^{-1}+Q)
//   + (Qu - 1/(Qu)) (mu_{Q^{2 nu_1} x_1} - mu_{x_1}) / ((Q^{-1}-Q)(Q^{-1}+Q))
//   - mu_c   with c = t (difference side) or s (recurrence side).
inline cplx beta_multiplier(int nu1, cplx x1, cplx u, cplx mu_const, double Q) {
    cplx x1s = std::pow(Q, 2.0 * nu1) * x1;
    cplx m1 = (x1s + 1.0 / x1s) / (1.0 / Q - Q);
    cplx m0 = (x1 + 1.0 / x1) / (1.0 / Q - Q);
    return (u + 1.0 / u) * m1 / (1.0 / Q + Q) +
           (Q * u - 1.0 / (Q * u)) * (m1 - m0) / ((1.0 / Q - Q) * (1.0 / Q + Q)) - mu_const;
}

// Identity-term offset ((u+1/u) mu_{x_{j+1}} / (Q^{-1}+Q) - mu_c).
inline cplx beta_id_offset(cplx xnext, cplx u, cplx mu_const, double Q) {
    cplx mn = (xnext + 1.0 / xnext) / (1.0 / Q - Q);
    return (u + 1.0 / u) * mn / (1.0 / Q + Q) - mu_const;
}

// Alpha-parameterized form of the same coefficient (factorized display):
//   V_nu = [prod_{i=0}^{j} factor_i] / (q^{-1} - q),
// with alpha the vector alpha_0..alpha_{N+2} and xl as in mv_stencil_coef.
inline cplx alpha_form_coef(const std::vector<int>& nu, const std::vector<cplx>& xl,
                            const std::vector<cplx>& alpha, double q) {
    const std::size_t j = nu.size();
    if (xl.size() < j + 1 || alpha.size() < j + 2)
        throw IndexOutOfRange("alpha_form_coef: inconsistent sizes");
    auto pw = [](cplx z, int e) { return e >= 0 ? z : 1.0 / z; };
    double q2 = q * q;
    cplx r = 1.0;
    // i = 0 factor, driven by nu_1
    if (nu[0] != 0) {
        cplx x1n = pw(xl[0], nu[0]);
        r *= -(q * alpha[0] / alpha[1]) * (1.0 - alpha[1] / (alpha[0] * alpha[0]) * x1n) *
             (1.0 - alpha[1] / q2 / x1n);
    } else {
        r *= (alpha[0] + 1.0 / alpha[0]) * (xl[0] + 1.0 / xl[0]) / (1.0 / q + q) -
             (q * alpha[0] / alpha[1] + alpha[1] / (q * alpha[0]));
    }
    // i = 1..j factors, driven by (nu_i, nu_{i+1}) with nu_{j+1} = 0
    for (std::size_t i = 1; i <= j; ++i) {
        cplx rat = alpha[i + 1] / alpha[i];
        cplx xi = xl[i - 1], xi1 = xl[i];
        int ni = nu[i - 1], ni1 = (i < j) ? nu[i] : 0;
        if (ni != 0 && ni1 == 0) {
            cplx xn = pw(xi, ni);
            cplx den = (1.0 - xn * xn) * (1.0 - q2 * xn * xn);
            guard_pole(den, "alpha_form_coef: sample on pole ring");
            r *= (1.0 / rat) * (1.0 - rat * xi1 * xn) * (1.0 - rat * xn / xi1) / den;
        } else if (ni == 0 && ni1 == 0) {
            cplx den = (1.0 - q2 * xi * xi) * (1.0 - q2 / (xi * xi));
            guard_pole(den, "alpha_form_coef: sample on pole ring");
            r *= (q2 * (1.0 / q + q) * (q / rat + rat / q) -
                  q2 * (xi + 1.0 / xi) * (xi1 + 1.0 / xi1)) /
                 den;
        } else if (ni != 0 && ni1 != 0) {
            cplx xn = pw(xi, ni), xn1 = pw(xi1, ni1);
            cplx den = (1.0 - xn * xn) * (1.0 - q2 * xn * xn);
            guard_pole(den, "alpha_form_coef: sample on pole ring");
            r *= (1.0 / rat) * (1.0 - rat * xn1 * xn) * (1.0 - rat * q2 * xn1 * xn) / den;
        } else {
            cplx xn1 = pw(xi1, ni1);
            cplx den = (1.0 - q2 * xi * xi) * (1.0 - q2 / (xi * xi));
            guard_pole(den, "alpha_form_coef: sample on pole ring");
            r *= (q * q2 / rat) * (1.0 / q + q) * (1.0 - rat * xn1 * xi) *
                 (1.0 - rat * xn1 / xi) / den;
        }
    }
    return r / (1.0 / q - q);
}

// ---- discrete-side actions on sequence space ----

// pi(K) f(n) = q^{k/2+n} f(n); E and F act by one-step shifts.
inline double pi_K_factor(long n, double k, double q) { return std::pow(q, k / 2.0 + n); }
// coefficient of f(n-1) in [pi(E) f](n)
inline double pi_E_coeff(long n, double k, double q) {
    return -(std::pow(q, k + n - 1.0) - std::pow(q, -k - n + 1.0)) / (1.0 / q - q);
}
// coefficient of f(n+1) in [pi(F) f](n)
inline double pi_F_coeff(long n, double q) {
    return (std::pow(q, n + 1.0) - std::pow(q, -n - 1.0)) / (1.0 / q - q);
}

struct TriTerm {
    cplx lower;  // multiplies f(n-1)
    cplx diag;   // multiplies f(n)
    cplx upper;  // multiplies f(n+1)
};

// (Q^{-1}-Q) [pi(Y_{s,u}) f](n) = u Q^{-(k-1)/2}(1-Q^{2k+2n-2}) f(n-1)
//   + (s+1/s)(Q^{k+2n}-1) f(n) + u^{-1} Q^{(k-1)/2}(1-Q^{2n+2}) f(n+1).
// The tilde operator is the same display at base Q^{-1} with s -> t.
inline TriTerm pi_Y_coeffs(long n, double k, cplx s, cplx u, double Q) {
    double den_q = 1.0 / Q - Q;
    return {u * std::pow(Q, -(k - 1.0) / 2.0) * (1.0 - std::pow(Q, 2.0 * k + 2.0 * n - 2.0)) /
                den_q,
            (s + 1.0 / s) * (std::pow(Q, k + 2.0 * n) - 1.0) / den_q,
            (1.0 / u) * std::pow(Q, (k - 1.0) / 2.0) * (1.0 - std::pow(Q, 2.0 * n + 2.0)) /
                den_q};
}

using DiscreteFn = std::function<cplx(const std::vector<long>&)>;

inline cplx apply_tri(const TriTerm& c, const DiscreteFn& f, std::vector<long> n, std::size_t i) {
    cplx val = c.diag * f(n);
    n[i] += 1;
    val += c.upper * f(n);
    n[i] -= 2;
    if (n[i] >= 0) val += c.lower * f(n);
    return val;
}

// pi(Y^{(j)}_{s,u}) f(n) =
//   sum_{i=N-j+1}^{N} [prod_{l=N-j+1}^{i-1} q^{k_l+2 n_l}] [pi(Y_{s,u})_i f](n)
inline cplx apply_pi_Yj(const DiscreteFn& f, const std::vector<long>& n, int j,
                        const std::vector<double>& kvec, cplx s, cplx u, double q) {
    const int N = static_cast<int>(kvec.size());
    if (j < 1 || j > N) throw IndexOutOfRange("apply_pi_Yj: j out of range");
    cplx tot = 0.0;
    for (int i = N - j + 1; i <= N; ++i) {
        cplx pre = 1.0;
        for (int l = N - j + 1; l < i; ++l) pre *= std::pow(q, kvec[l - 1] + 2.0 * n[l - 1]);
        tot += pre * apply_tri(pi_Y_coeffs(n[i - 1], kvec[i - 1], s, u, q), f, n, i - 1);
    }
    return tot;
}

// pi(Ytilde^{(j)}_{t,u}) f(n) =
//   sum_{i=1}^{j} [pi(Ytilde_{t,u})_i f](n) prod_{l=i+1}^{j} q^{-k_l-2 n_l}
inline cplx apply_pi_Ytildej(const DiscreteFn& f, const std::vector<long>& n, int j,
                             const std::vector<double>& kvec, double t, cplx u, double q) {
    const int N = static_cast<int>(kvec.size());
    if (j < 1 || j > N) throw IndexOutOfRange("apply_pi_Ytildej: j out of range");
    cplx tot = 0.0;
    for (int i = 1; i <= j; ++i) {
        cplx post = 1.0;
        for (int l = i + 1; l <= j; ++l) post *= std::pow(q, -kvec[l - 1] - 2.0 * n[l - 1]);
        tot += post * apply_tri(pi_Y_coeffs(n[i - 1], kvec[i - 1], cplx(t), u, 1.0 / q), f, n,
                                i - 1);
    }
    return tot;
}

// Enumerate {-1,0,1}^j shift vectors.
inline std::vector<std::vector<int>> all_shifts(int j) {
    std::vector<std::vector<int>> out(1);
    for (int d = 0; d < j; ++d) {
        std::vector<std::vector<int>> nxt;
        for (auto& v : out)
            for (int e : {-1, 0, 1}) {
                auto w = v;
                w.push_back(e);
                nxt.push_back(std::move(w));
            }
        out = std::move(nxt);
    }
    return out;
}

}  // namespace qaw
