#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace qaw {

using cplx = std::complex<double>;

// ---- error taxonomy ----

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonConvergent : Error { using Error::Error; };
struct DivergentSeries : Error { using Error::Error; };
struct PoleInDenominator : Error { using Error::Error; };
struct PoleAtSample : Error { using Error::Error; };
struct ParameterPole : Error { using Error::Error; };
struct PoleOnTorus : Error { using Error::Error; };
struct DomainViolation : Error { using Error::Error; };
struct CoefficientVanishes : Error { using Error::Error; };
struct DegreeMismatch : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };

// ---- global numeric policy ----

struct QContext {
    double q;
    double tol_abs = 1e-12;
    double tol_rel = 1e-12;
    int max_terms = 400;
    int quad_min_nodes = 16;
    int quad_max_nodes = 512;

    explicit QContext(double q_) : q(q_) { validate(); }
    QContext(double q_, double ta, double tr, int mt) : q(q_), tol_abs(ta), tol_rel(tr), max_terms(mt) {
        validate();
    }

    void validate() const {
        if (!(q > 0.0 && q < 1.0)) throw DomainViolation("QContext: q must lie strictly in (0,1)");
        if (!(tol_abs > 0.0 && tol_abs <= 1e-3)) throw DomainViolation("QContext: tol_abs out of (0,1e-3]");
        if (!(tol_rel > 0.0 && tol_rel <= 1e-3)) throw DomainViolation("QContext: tol_rel out of (0,1e-3]");
        if (max_terms < 64) throw DomainViolation("QContext: max_terms must be >= 64");
        if (quad_min_nodes < 1 || quad_max_nodes < quad_min_nodes)
            throw DomainViolation("QContext: bad quadrature node bounds");
    }
};

inline constexpr double PI = 3.141592653589793238462643383279502884;

inline cplx unit_circle(double theta) { return std::polar(1.0, theta); }

// Log-space accumulator for products whose partial magnitudes can leave the
// representable range (e.g. discrete weights carrying q^{2m^2} t^{-2m} factors).
struct LogProduct {
    double logmag = 0.0;  // natural log of |value|
    double phase = 0.0;
    bool zero = false;

    void mul(cplx f) {
        if (zero) return;
        double m = std::abs(f);
        if (m == 0.0) { zero = true; return; }
        logmag += std::log(m);
        phase += std::arg(f);
    }
    void mul_pow(cplx f, long p) {
        if (zero || p == 0) return;
        double m = std::abs(f);
        if (m == 0.0) { zero = true; return; }
        logmag += static_cast<double>(p) * std::log(m);
        phase += static_cast<double>(p) * std::arg(f);
    }
    void div(cplx f) {
        if (zero) return;
        double m = std::abs(f);
        if (m == 0.0) throw PoleAtSample("LogProduct: division by zero factor");
        logmag -= std::log(m);
        phase -= std::arg(f);
    }
    cplx value() const {
        if (zero) return cplx(0.0);
        return std::polar(std::exp(logmag), phase);
    }
};

inline double rel_residual(cplx got, cplx want) {
    return std::abs(got - want) / (1.0 + std::abs(want));
}

}  // namespace qaw
