#pragma once

#include <optional>
#include <vector>

#include "qaw/core.hpp"

namespace qaw {

// (a;q)_n = prod_{i<n} (1 - a q^i).  Works for any base, including base > 1,
// since the product is finite.
inline cplx qpoch_finite(cplx a, double base, int n) {
    cplx r(1.0);
    cplx aq = a;
    for (int i = 0; i < n; ++i) {
        r *= (cplx(1.0) - aq);
        aq *= base;
    }
    return r;
}

// (a;q^{-1})_n rewritten to base q:
//   (a;q^{-1})_n = (-a)^n q^{-n(n-1)/2} (1/a;q)_n.
// Canonical base-inversion helper; all summations stay in base < 1.
inline cplx qpoch_finite_qinv(cplx a, double q, int n) {
    if (a == cplx(0.0)) return cplx(1.0);
    cplx p = qpoch_finite(cplx(1.0) / a, q, n);
    cplx sign = (n % 2 == 0) ? cplx(1.0) : cplx(-1.0);
    return sign * std::pow(a, n) * std::pow(q, -0.5 * n * (n - 1)) * p;
}

// (a;q)_inf for 0 < q < 1, truncated once |a q^i| < tol_abs (1-q).
inline cplx qpoch_inf(cplx a, double base, const QContext& ctx) {
    if (!(base > 0.0 && base < 1.0)) throw DomainViolation("qpoch_inf: base must be in (0,1)");
    cplx r(1.0);
    cplx aq = a;
    double cut = ctx.tol_abs * (1.0 - base);
    for (int i = 0; i < ctx.max_terms; ++i) {
        if (std::abs(aq) < cut) return r;
        r *= (cplx(1.0) - aq);
        aq *= base;
    }
    throw NonConvergent("qpoch_inf: factor magnitude did not fall below cutoff");
}

// (a v1^{±1} v2^{±1} ...; q)_inf: product over all sign choices.
inline cplx qpoch_pm_inf(cplx a, const std::vector<cplx>& vars, double base, const QContext& ctx) {
    std::size_t combos = std::size_t(1) << vars.size();
    cplx r(1.0);
    for (std::size_t mask = 0; mask < combos; ++mask) {
        cplx arg = a;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (mask & (std::size_t(1) << i)) arg /= vars[i];
            else arg *= vars[i];
        }
        r *= qpoch_inf(arg, base, ctx);
    }
    return r;
}

struct SeriesSpec {
    std::vector<cplx> numerator_params;
    std::vector<cplx> denominator_params;  // trailing zero sentinels allowed
    cplx argument;
    double base;

    // Terminating iff some numerator parameter equals base^{-n} (n in N).
    std::optional<int> terminating_length() const {
        for (cplx a : numerator_params) {
            // solve a = base^{-n}: n = -log|a|/log(base), must be a nonnegative
            // integer and a must be real positive.
            if (std::abs(a.imag()) > 1e-12 * (1.0 + std::abs(a))) continue;
            double ar = a.real();
            if (ar <= 0.0) continue;
            double nf = -std::log(ar) / std::log(base);
            double nr = std::round(nf);
            if (nr < -0.5) continue;
            int n = static_cast<int>(nr);
            if (std::abs(ar * std::pow(base, n) - 1.0) < 1e-10) return n + 1;
        }
        return std::nullopt;
    }
};

// _r phi_s per the standard definition
//   sum_j  [prod (a;q)_j / prod (b;q)_j] [(-1)^j q^{j(j-1)/2}]^{1+s-r} z^j / (q;q)_j.
// Terminating series are summed over exactly n+1 terms and may use any base;
// non-terminating series require base in (0,1) and |z| < 1.
inline cplx rphi(const SeriesSpec& spec, const QContext& ctx) {
    const double Q = spec.base;
    auto nterm = spec.terminating_length();
    int r = static_cast<int>(spec.numerator_params.size());
    int s = static_cast<int>(spec.denominator_params.size());
    int extra = 1 + s - r;  // exponent on the (-1)^j q^binom(j,2) factor

    if (!nterm) {
        if (!(Q > 0.0 && Q < 1.0)) throw DivergentSeries("rphi: non-terminating series needs base in (0,1)");
        if (extra == 0 && std::abs(spec.argument) >= 1.0)
            throw DivergentSeries("rphi: |z| >= 1 in a non-terminating balanced-length series");
        if (extra < 0) throw DivergentSeries("rphi: r > s+1 non-terminating series diverges");
    }

    int limit = nterm ? *nterm : ctx.max_terms;
    cplx sum(0.0), term(1.0);
    int quiet = 0;
    for (int j = 0; j < limit; ++j) {
        sum += term;
        // ratio term_{j+1}/term_j
        cplx num(1.0), den(1.0);
        cplx Qj = std::pow(cplx(Q), j);
        for (cplx a : spec.numerator_params) num *= (cplx(1.0) - a * Qj);
        for (cplx b : spec.denominator_params) {
            cplx f = cplx(1.0) - b * Qj;
            if (std::abs(f) < 1e-12) throw PoleInDenominator("rphi: denominator parameter hits q^{-j}");
            den *= f;
        }
        cplx fq = cplx(1.0) - std::pow(cplx(Q), j + 1);
        if (std::abs(fq) < 1e-14) throw PoleInDenominator("rphi: (q;q)_j factor vanishes");
        den *= fq;
        cplx ratio = num / den * spec.argument;
        for (int e = 0; e < extra; ++e) ratio *= -Qj;
        for (int e = 0; e > extra; --e) ratio /= -Qj;
        term *= ratio;
        if (!nterm) {
            if (std::abs(term) < ctx.tol_abs) {
                if (++quiet >= 5) return sum;
            } else {
                quiet = 0;
            }
        }
    }
    if (!nterm) throw NonConvergent("rphi: max_terms reached without tail certificate");
    return sum;
}

inline cplx rphi(std::vector<cplx> num, std::vector<cplx> den, double base, cplx z, const QContext& ctx) {
    return rphi(SeriesSpec{std::move(num), std::move(den), z, base}, ctx);
}

}  // namespace qaw
