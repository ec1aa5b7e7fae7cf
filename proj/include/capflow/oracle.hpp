#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "capflow/flow_models.hpp"
#include "capflow/geometry.hpp"
#include "capflow/kernels.hpp"

namespace capflow {

/// Settings for the adaptive Simpson oracle.
/// Invariants: 0 < relative_tolerance < 1e-3, max_depth >= 10.
struct QuadratureConfig {
    double relative_tolerance = 1e-10;
    int max_depth = 60;

    void validate() const;
};

/// Integral of 1/A(x)^2 over [lo, hi] within the tube. Throws QuadratureFailure
/// (carrying the best estimate) when the tolerance is not reached.
double inverse_area_squared_integral(const CapillaryGeometry& geom, double lo, double hi,
                                     const QuadratureConfig& cfg = {});

/// 2 kappa rho q times the quadrature of 1/A^2 over [0, L/2].
double pressure_drop_quadrature(const CapillaryGeometry& geom, const FluidProperties& fluid,
                                const MomentumModel& model, double q,
                                const QuadratureConfig& cfg = {});

/// Tube split into n equal straight elements, each with an averaged radius and the
/// straight-tube drop kappa rho q dx / (pi^2 rbar^4). Throws InvalidArgument for n == 0.
double pressure_drop_discretized(const CapillaryGeometry& geom, const FluidProperties& fluid,
                                 const MomentumModel& model, double q, std::size_t n_elements,
                                 RadiusAveraging averaging = RadiusAveraging::EndpointMean);

struct ConvergenceRecord {
    std::size_t n_elements = 0;
    double p_numeric = 0.0;
    double p_analytic = 0.0;
    double ratio = 0.0;  ///< p_numeric / p_analytic
};

/// One record per entry of n_list, in the same order. Entries are evaluated in parallel.
std::vector<ConvergenceRecord> convergence_series(
    const CapillaryGeometry& geom, const FluidProperties& fluid, const MomentumModel& model,
    double q, std::span<const std::size_t> n_list,
    RadiusAveraging averaging = RadiusAveraging::EndpointMean);

/// Same as convergence_series with a plain loop; kept as the reference for tests.
std::vector<ConvergenceRecord> convergence_series_serial(
    const CapillaryGeometry& geom, const FluidProperties& fluid, const MomentumModel& model,
    double q, std::span<const std::size_t> n_list,
    RadiusAveraging averaging = RadiusAveraging::EndpointMean);

/// Desk-scale configuration used for the convergence figures and the validate command.
struct CanonicalFixture {
    double r_min = 0.5;
    double r_max = 1.0;
    double length = 2.0;
    double mu = 1e-3;
    double rho = 1e3;
    double alpha = kPoiseuilleAlpha;
    double q = 1e-6;

    CapillaryGeometry geometry(TubeKind kind) const;
    FluidProperties fluid() const { return FluidProperties(mu, rho); }
    MomentumModel model() const { return MomentumModel(alpha); }
};

inline constexpr CanonicalFixture kCanonicalFixture{};

}  // namespace capflow
