#pragma once

#include <string_view>
#include <optional>

#include "capflow/geometry.hpp"

namespace capflow {

/// Relative gap (r_max - r_min) / r_min below which converging-diverging closed forms
/// are refused. Below it the result is indistinguishable from the straight tube.
inline constexpr double kDegenerateGapThreshold = 1e-9;

/// Momentum-flux correction of a fully developed parabolic (Poiseuille) profile.
inline constexpr double kPoiseuilleAlpha = 4.0 / 3.0;

/// Upper end of the accepted alpha range.
inline constexpr double kMaxAlpha = 2.0;

/// Newtonian fluid, SI units.
class FluidProperties {
public:
    /// Throws InvalidArgument unless mu > 0 and rho > 0 (finite).
    FluidProperties(double mu, double rho);

    double mu() const noexcept { return mu_; }
    double rho() const noexcept { return rho_; }

private:
    double mu_;
    double rho_;
};

/// Axial momentum-flux correction factor alpha, restricted to (1, 2].
/// alpha -> 1 (plug flow) sends the friction coefficient to infinity.
class MomentumModel {
public:
    explicit MomentumModel(double alpha = kPoiseuilleAlpha);

    double alpha() const noexcept { return alpha_; }

private:
    double alpha_;
};

enum class FlowModel { NavierStokes1D, Lubrication };

std::string_view to_string(FlowModel model) noexcept;
std::optional<FlowModel> parse_flow_model(std::string_view name) noexcept;

struct FlowSolution {
    double pressure_drop = 0.0;
    double flow_rate = 0.0;
    FlowModel model = FlowModel::NavierStokes1D;
};

/// Viscosity friction coefficient 2 pi alpha mu / (rho (alpha - 1)), in m^2/s.
double kappa(const MomentumModel& model, const FluidProperties& fluid);

/// Steady 1D Navier-Stokes pressure drop for flow rate q >= 0. Linear in q.
double pressure_drop_ns(const CapillaryGeometry& geom, const FluidProperties& fluid,
                        const MomentumModel& model, double q);

/// Lubrication-approximation pressure drop (locally Poiseuille, no alpha).
double pressure_drop_lub(const CapillaryGeometry& geom, const FluidProperties& fluid, double q);

/// p / q for the 1D Navier-Stokes relation.
double resistance_coefficient(const CapillaryGeometry& geom, const FluidProperties& fluid,
                              const MomentumModel& model);
double resistance_coefficient_lub(const CapillaryGeometry& geom, const FluidProperties& fluid);

/// Inverse of pressure_drop_ns; p >= 0.
double flow_rate_from_pressure(const CapillaryGeometry& geom, const FluidProperties& fluid,
                               const MomentumModel& model, double p);
double flow_rate_from_pressure_lub(const CapillaryGeometry& geom, const FluidProperties& fluid,
                                   double p);

/// Forward (q given) and inverse (p given) solves dispatched on the model tag.
FlowSolution solve_for_pressure(const CapillaryGeometry& geom, const FluidProperties& fluid,
                                const MomentumModel& model, FlowModel tag, double q);
FlowSolution solve_for_flow_rate(const CapillaryGeometry& geom, const FluidProperties& fluid,
                                 const MomentumModel& model, FlowModel tag, double p);

/// Sinusoidal closed form evaluated with no degeneracy guard, so r_max == r_min is
/// allowed; that case reduces to the straight-tube value kappa*rho*q*L / (pi^2 R^4).
double sinusoidal_pressure_drop_unguarded(double r_min, double r_max, double length,
                                          double kappa_rho, double q);

}  // namespace capflow
