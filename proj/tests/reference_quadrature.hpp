#pragma once

// Test-only oracle: Gauss-Kronrod quadrature of the pressure-drop integrand with the tube
// profiles written out from their defining formulas. Shares no code with the library's
// closed forms or its adaptive Simpson integrator.

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>

#include "capflow/geometry.hpp"

namespace capflow::testing {

inline double reference_radius(TubeKind kind, double r0, double r1, double length, double x) {
    const double t = 2.0 * std::abs(x) / length;  // 0 at the throat, 1 at the ends
    switch (kind) {
        case TubeKind::Conical: return r0 + (r1 - r0) * t;
        case TubeKind::Parabolic: return r0 + (r1 - r0) * t * t;
        case TubeKind::Hyperbolic: return std::sqrt(r0 * r0 + (r1 * r1 - r0 * r0) * t * t);
        case TubeKind::HyperbolicCosine: return r0 * std::cosh(std::acosh(r1 / r0) * t);
        case TubeKind::Sinusoidal:
            return 0.5 * (r1 + r0) - 0.5 * (r1 - r0) * std::cos(std::numbers::pi * t);
        case TubeKind::Straight: return r0;
    }
    return r0;
}

/// kappa_rho * q * integral over [-L/2, L/2] of dx / (pi^2 r^4).
inline double reference_pressure_drop(TubeKind kind, double r0, double r1, double length,
                                      double kappa_rho, double q) {
    using boost::math::quadrature::gauss_kronrod;
    auto f = [&](double x) {
        const double r = reference_radius(kind, r0, r1, length, x);
        return 1.0 / (std::numbers::pi * std::numbers::pi * r * r * r * r);
    };
    // Integrate one half.
    const double half = gauss_kronrod<double, 61>::integrate(f, 0.0, 0.5 * length, 15, 1e-13);
    return kappa_rho * q * 2.0 * half;
}

}  // namespace capflow::testing
