#pragma once

// Quadrature on the torus, truncated discrete inner products with certified
// geometric tails, Gram matrices, and residual reports.

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qaw/core.hpp"

namespace qaw {

// (1/4 pi i) \oint F(x) dx/x over the unit torus, tensorized over N axes:
// midpoint rule in the angle (spectrally accurate for analytic integrands),
// normalized so the constant 1 integrates to (1/2)^N.  Nodes are doubled
// until two successive refinements agree to tol_rel.
inline cplx torus_integral(const std::function<cplx(const std::vector<cplx>&)>& F, int N,
                           const QContext& ctx, long* nodes_used = nullptr) {
    if (N < 1) throw DomainViolation("torus_integral: N < 1");
    cplx prev = 0.0;
    bool have_prev = false;
    for (long n = ctx.quad_min_nodes; n <= ctx.quad_max_nodes; n *= 2) {
        cplx acc = 0.0;
        std::vector<long> idx(N, 0);
        std::vector<cplx> x(N);
        const double h = 2.0 * PI / static_cast<double>(n);
        long total = 1;
        for (int i = 0; i < N; ++i) total *= n;
        for (long flat = 0; flat < total; ++flat) {
            long rem = flat;
            for (int i = 0; i < N; ++i) {
                idx[i] = rem % n;
                rem /= n;
                x[i] = unit_circle((idx[i] + 0.5) * h);
            }
            acc += F(x);
        }
        acc /= static_cast<double>(total);
        for (int i = 0; i < N; ++i) acc *= 0.5;
        if (have_prev && std::abs(acc - prev) <= ctx.tol_rel * (1.0 + std::abs(acc))) {
            if (nodes_used) *nodes_used = n;
            return acc;
        }
        prev = acc;
        have_prev = true;
    }
    throw NoConvergence("torus_integral: node budget exhausted");
}

// <f, g> with weight w: integrand f(x) conj(g(x)) w(x).
inline cplx torus_inner(const std::function<cplx(const std::vector<cplx>&)>& f,
                        const std::function<cplx(const std::vector<cplx>&)>& g,
                        const std::function<cplx(const std::vector<cplx>&)>& w, int N,
                        const QContext& ctx, long* nodes_used = nullptr) {
    return torus_integral(
        [&](const std::vector<cplx>& x) { return f(x) * std::conj(g(x)) * w(x); }, N, ctx,
        nodes_used);
}

// Truncated sum over n >= 0 of weight(n) f(n) conj(g(n)) with a geometric
// tail: stops after five consecutive terms below tol_abs relative to the
// running value.
inline cplx h_inner(const std::function<cplx(long)>& f, const std::function<cplx(long)>& g,
                    const std::function<cplx(long)>& weight, const QContext& ctx,
                    long* terms_used = nullptr) {
    cplx acc = 0.0;
    int quiet = 0;
    long n = 0;
    for (; n < ctx.max_terms; ++n) {
        cplx term = weight(n) * f(n) * std::conj(g(n));
        acc += term;
        if (std::abs(term) < ctx.tol_abs * (1.0 + std::abs(acc))) {
            if (++quiet >= 5) break;
        } else {
            quiet = 0;
        }
    }
    if (n >= ctx.max_terms) throw NonConvergent("h_inner: no tail decay within max_terms");
    if (terms_used) *terms_used = n + 1;
    return acc;
}

struct CheckResult {
    std::string check;
    std::map<std::string, double> params;
    double residual = 0.0;
    double tol = 0.0;
    bool pass = false;
    long nodes = 0;
    double seconds = 0.0;
    std::uint64_t seed = 0;

    void finish(double max_residual, double tolerance) {
        residual = max_residual;
        tol = tolerance;
        pass = residual <= tol;
    }
};

class Stopwatch {
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();

  public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }
};

inline double max_abs(double a, double b) { return a > b ? a : b; }

}  // namespace qaw
