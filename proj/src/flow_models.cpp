#include "capflow/flow_models.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "capflow/errors.hpp"

namespace capflow {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

void require_forward(double q) {
    if (std::isnan(q) || std::isinf(q)) throw InvalidArgument("flow rate must be finite");
    if (q < 0.0) throw UnsupportedDirection("negative flow rate is not supported");
}

void require_pressure(double p) {
    if (std::isnan(p) || std::isinf(p)) throw InvalidArgument("pressure drop must be finite");
    if (p < 0.0) throw UnsupportedDirection("negative pressure drop is not supported");
}

void require_non_degenerate(const CapillaryGeometry& geom) {
    if (!is_converging_diverging(geom.kind())) return;
    const double gap = (geom.r_max() - geom.r_min()) / geom.r_min();
    if (gap < kDegenerateGapThreshold) {
        throw DegenerateShape(std::string(to_string(geom.kind())) +
                              " tube with r_max ~= r_min is degenerate; use kind=straight");
    }
}

// The brackets below are shared by the 1D Navier-Stokes and lubrication relations; the
// two families differ only in the prefactor. Each has units of m^-4.

// [1/Rmin^3 - 1/Rmax^3] / (Rmax - Rmin), factored to avoid cancellation.
double conical_bracket(double r0, double r1) {
    return (r1 * r1 + r1 * r0 + r0 * r0) / (r0 * r0 * r0 * r1 * r1 * r1);
}

double parabolic_bracket(double r0, double r1) {
    const double s = std::sqrt((r1 - r0) / r0);
    // 5 atan(s) / (8 Rmin^{7/2} sqrt(Rmax - Rmin)) == 5 atan(s) / (8 Rmin^4 s)
    return 1.0 / (3.0 * r0 * r1 * r1 * r1) + 5.0 / (12.0 * r0 * r0 * r1 * r1) +
           5.0 / (8.0 * r0 * r0 * r0 * r1) + 5.0 * std::atan(s) / (8.0 * r0 * r0 * r0 * r0 * s);
}

double hyperbolic_bracket(double r0, double r1) {
    const double root = std::sqrt((r1 - r0) * (r1 + r0));
    return 1.0 / (r0 * r0 * r1 * r1) + std::atan(root / r0) / (r0 * r0 * r0 * root);
}

double cosh_bracket(double r0, double r1) {
    const double y = arccosh(r1 / r0);
    const double sech = 1.0 / std::cosh(y);
    return std::tanh(y) * (sech * sech + 2.0) / (r0 * r0 * r0 * r0 * y);
}

double sinusoidal_bracket(double r0, double r1) {
    const double sum = r1 + r0;
    const double diff = r1 - r0;
    const double prod = r1 * r0;
    return (2.0 * sum * sum * sum + 3.0 * sum * diff * diff) /
           (prod * prod * prod * std::sqrt(prod));
}

double straight_bracket(double r) { return 1.0 / (r * r * r * r); }

// p / (kappa rho Q L)
double ns_shape_factor(const CapillaryGeometry& geom) {
    const double r0 = geom.r_min();
    const double r1 = geom.r_max();
    switch (geom.kind()) {
        case TubeKind::Conical: return conical_bracket(r0, r1) / (3.0 * kPi2);
        case TubeKind::Parabolic: return parabolic_bracket(r0, r1) / (2.0 * kPi2);
        case TubeKind::Hyperbolic: return hyperbolic_bracket(r0, r1) / (2.0 * kPi2);
        case TubeKind::HyperbolicCosine: return cosh_bracket(r0, r1) / (3.0 * kPi2);
        case TubeKind::Sinusoidal: return sinusoidal_bracket(r0, r1) / (16.0 * kPi2);
        case TubeKind::Straight: return straight_bracket(r0) / kPi2;
    }
    throw UnsupportedKind("unknown tube kind");
}

// p / (mu Q L), lubrication table prefactors.
double lub_shape_factor(const CapillaryGeometry& geom) {
    const double r0 = geom.r_min();
    const double r1 = geom.r_max();
    switch (geom.kind()) {
        case TubeKind::Conical: return 8.0 * conical_bracket(r0, r1) / (3.0 * kPi);
        case TubeKind::Parabolic: return 4.0 * parabolic_bracket(r0, r1) / kPi;
        case TubeKind::Hyperbolic: return 4.0 * hyperbolic_bracket(r0, r1) / kPi;
        case TubeKind::HyperbolicCosine: return 8.0 * cosh_bracket(r0, r1) / (3.0 * kPi);
        case TubeKind::Sinusoidal: return sinusoidal_bracket(r0, r1) / (2.0 * kPi);
        case TubeKind::Straight: return 8.0 * straight_bracket(r0) / kPi;
    }
    throw UnsupportedKind("unknown tube kind");
}

}  // namespace

FluidProperties::FluidProperties(double mu, double rho) : mu_(mu), rho_(rho) {
    if (!(std::isfinite(mu) && mu > 0.0)) throw InvalidArgument("mu must be positive and finite");
    if (!(std::isfinite(rho) && rho > 0.0)) {
        throw InvalidArgument("rho must be positive and finite");
    }
}

MomentumModel::MomentumModel(double alpha) : alpha_(alpha) {
    if (!(alpha > 1.0 && alpha <= kMaxAlpha)) {
        throw InvalidMomentumModel("alpha must lie in (1, 2]");
    }
}

std::string_view to_string(FlowModel model) noexcept {
    return model == FlowModel::NavierStokes1D ? "navier-stokes" : "lubrication";
}

std::optional<FlowModel> parse_flow_model(std::string_view name) noexcept {
    if (name == "navier-stokes" || name == "ns") return FlowModel::NavierStokes1D;
    if (name == "lubrication" || name == "lub") return FlowModel::Lubrication;
    return std::nullopt;
}

double kappa(const MomentumModel& model, const FluidProperties& fluid) {
    const double alpha = model.alpha();
    return 2.0 * kPi * alpha * fluid.mu() / (fluid.rho() * (alpha - 1.0));
}

double resistance_coefficient(const CapillaryGeometry& geom, const FluidProperties& fluid,
                              const MomentumModel& model) {
    require_non_degenerate(geom);
    return kappa(model, fluid) * fluid.rho() * geom.length() * ns_shape_factor(geom);
}

double resistance_coefficient_lub(const CapillaryGeometry& geom, const FluidProperties& fluid) {
    require_non_degenerate(geom);
    return fluid.mu() * geom.length() * lub_shape_factor(geom);
}

double pressure_drop_ns(const CapillaryGeometry& geom, const FluidProperties& fluid,
                        const MomentumModel& model, double q) {
    require_forward(q);
    return q * resistance_coefficient(geom, fluid, model);
}

double pressure_drop_lub(const CapillaryGeometry& geom, const FluidProperties& fluid, double q) {
    require_forward(q);
    return q * resistance_coefficient_lub(geom, fluid);
}

double flow_rate_from_pressure(const CapillaryGeometry& geom, const FluidProperties& fluid,
                               const MomentumModel& model, double p) {
    require_pressure(p);
    return p / resistance_coefficient(geom, fluid, model);
}

double flow_rate_from_pressure_lub(const CapillaryGeometry& geom, const FluidProperties& fluid,
                                   double p) {
    require_pressure(p);
    return p / resistance_coefficient_lub(geom, fluid);
}

FlowSolution solve_for_pressure(const CapillaryGeometry& geom, const FluidProperties& fluid,
                                const MomentumModel& model, FlowModel tag, double q) {
    const double p = tag == FlowModel::NavierStokes1D ? pressure_drop_ns(geom, fluid, model, q)
                                                      : pressure_drop_lub(geom, fluid, q);
    return {p, q, tag};
}

FlowSolution solve_for_flow_rate(const CapillaryGeometry& geom, const FluidProperties& fluid,
                                 const MomentumModel& model, FlowModel tag, double p) {
    const double q = tag == FlowModel::NavierStokes1D
                         ? flow_rate_from_pressure(geom, fluid, model, p)
                         : flow_rate_from_pressure_lub(geom, fluid, p);
    return {p, q, tag};
}

double sinusoidal_pressure_drop_unguarded(double r_min, double r_max, double length,
                                          double kappa_rho, double q) {
    return kappa_rho * q * length * (sinusoidal_bracket(r_min, r_max) / (16.0 * kPi2));
}

}  // namespace capflow
