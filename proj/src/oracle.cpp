#include "capflow/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "capflow/adaptive_simpson.hpp"
#include "capflow/errors.hpp"
#include "parallel.hpp"

namespace capflow {

namespace {

void require_flow(double q) {
    if (!std::isfinite(q)) throw InvalidArgument("flow rate must be finite");
    if (q < 0.0) throw UnsupportedDirection("negative flow rate is not supported");
}

void require_closed_form_domain(const CapillaryGeometry& geom) {
    if (is_converging_diverging(geom.kind()) && !(geom.r_min() < geom.r_max())) {
        throw DegenerateShape("converging-diverging tube requires r_min < r_max");
    }
}

ConvergenceRecord make_record(const CapillaryGeometry& geom, const FluidProperties& fluid,
                              const MomentumModel& model, double q, std::size_t n,
                              RadiusAveraging averaging, double p_analytic) {
    ConvergenceRecord rec;
    rec.n_elements = n;
    rec.p_numeric = pressure_drop_discretized(geom, fluid, model, q, n, averaging);
    rec.p_analytic = p_analytic;
    rec.ratio = rec.p_numeric / p_analytic;
    return rec;
}

void require_series_input(double q, std::span<const std::size_t> n_list) {
    if (!(q > 0.0)) throw InvalidArgument("convergence series requires q > 0");
    for (std::size_t n : n_list) {
        if (n == 0) throw InvalidArgument("element counts must be >= 1");
    }
}

}  // namespace

void QuadratureConfig::validate() const {
    if (!(relative_tolerance > 0.0 && relative_tolerance < 1e-3)) {
        throw InvalidArgument("quadrature relative tolerance must lie in (0, 1e-3)");
    }
    if (max_depth < 10) throw InvalidArgument("quadrature max_depth must be >= 10");
}

CapillaryGeometry CanonicalFixture::geometry(TubeKind kind) const {
    if (kind == TubeKind::Straight) return CapillaryGeometry::straight(r_min, length);
    return CapillaryGeometry::make(kind, r_min, r_max, length);
}

double inverse_area_squared_integral(const CapillaryGeometry& geom, double lo, double hi,
                                     const QuadratureConfig& cfg) {
    cfg.validate();
    const double half = geom.half_length();
    if (!(lo >= -half && hi <= half && lo <= hi)) {
        throw OutOfDomain("integration bounds must satisfy -L/2 <= lo <= hi <= L/2");
    }
    if (lo == hi) return 0.0;

    const RadiusProfile profile(geom);
    constexpr double pi2 = std::numbers::pi * std::numbers::pi;
    auto integrand = [&profile](double x) {
        const double r = profile(x);
        const double r2 = r * r;
        return 1.0 / (pi2 * r2 * r2);
    };

    // Scale for the absolute tolerance: a coarse trapezoid estimate, floored by the
    // smallest possible value (integrand >= 1/(pi^2 r_max^4)).
    constexpr int kCoarse = 128;
    const double h = (hi - lo) / kCoarse;
    double coarse = 0.5 * (integrand(lo) + integrand(hi));
    for (int i = 1; i < kCoarse; ++i) coarse += integrand(lo + i * h);
    coarse *= h;
    const double floor = integrand(half) * (hi - lo);
    const double abs_tol = cfg.relative_tolerance * std::max(coarse, floor);

    // Split at 0 so the conical kink sits on an interval boundary.
    QuadratureEstimate est;
    if (lo < 0.0 && hi > 0.0) {
        const auto left = adaptive_simpson(integrand, lo, 0.0, abs_tol * (-lo) / (hi - lo),
                                           cfg.max_depth);
        const auto right =
            adaptive_simpson(integrand, 0.0, hi, abs_tol * hi / (hi - lo), cfg.max_depth);
        est.value = left.value + right.value;
        est.error_bound = left.error_bound + right.error_bound;
        est.converged = left.converged && right.converged;
    } else {
        est = adaptive_simpson(integrand, lo, hi, abs_tol, cfg.max_depth);
    }

    if (!est.converged) {
        std::ostringstream msg;
        msg.precision(3);
        msg << "adaptive quadrature did not converge within max_depth=" << cfg.max_depth
            << " (estimate " << est.value << ", error bound " << est.error_bound
            << ", requested relative tolerance " << cfg.relative_tolerance << ")";
        throw QuadratureFailure(msg.str(), est.value, est.error_bound);
    }
    return est.value;
}

double pressure_drop_quadrature(const CapillaryGeometry& geom, const FluidProperties& fluid,
                                const MomentumModel& model, double q,
                                const QuadratureConfig& cfg) {
    require_flow(q);
    require_closed_form_domain(geom);
    const double integral = inverse_area_squared_integral(geom, 0.0, geom.half_length(), cfg);
    return 2.0 * kappa(model, fluid) * fluid.rho() * q * integral;
}

double pressure_drop_discretized(const CapillaryGeometry& geom, const FluidProperties& fluid,
                                 const MomentumModel& model, double q, std::size_t n_elements,
                                 RadiusAveraging averaging) {
    require_flow(q);
    if (n_elements == 0) throw InvalidArgument("n_elements must be >= 1");
    const double sum = kernels::element_sum_chunked(RadiusProfile(geom), n_elements, averaging);
    return kappa(model, fluid) * fluid.rho() * q * sum;
}

std::vector<ConvergenceRecord> convergence_series(const CapillaryGeometry& geom,
                                                  const FluidProperties& fluid,
                                                  const MomentumModel& model, double q,
                                                  std::span<const std::size_t> n_list,
                                                  RadiusAveraging averaging) {
    require_series_input(q, n_list);
    const double p_analytic = pressure_drop_ns(geom, fluid, model, q);
    std::vector<ConvergenceRecord> out(n_list.size());
    detail::parallel_for_index(n_list.size(), [&](std::size_t i) {
        out[i] = make_record(geom, fluid, model, q, n_list[i], averaging, p_analytic);
    });
    return out;
}

std::vector<ConvergenceRecord> convergence_series_serial(const CapillaryGeometry& geom,
                                                         const FluidProperties& fluid,
                                                         const MomentumModel& model, double q,
                                                         std::span<const std::size_t> n_list,
                                                         RadiusAveraging averaging) {
    require_series_input(q, n_list);
    const double p_analytic = pressure_drop_ns(geom, fluid, model, q);
    std::vector<ConvergenceRecord> out;
    out.reserve(n_list.size());
    for (std::size_t n : n_list) {
        out.push_back(make_record(geom, fluid, model, q, n, averaging, p_analytic));
    }
    return out;
}

}  // namespace capflow
