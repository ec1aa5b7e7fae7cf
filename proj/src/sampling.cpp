#include "capflow/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace capflow {

double CaseSampler::unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double CaseSampler::log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
}

FlowCase CaseSampler::draw(TubeKind kind) {
    const double r_min = uniform(0.1, 5.0);
    // gap = r_max/r_min - 1 in (1e-6, 19]; 1 - unit() lies in (0, 1] so the low end is open.
    const double gap = 1e-6 * std::pow(19.0 / 1e-6, 1.0 - unit());
    const double length = log_uniform(0.1, 100.0);
    const double alpha = 2.0 - unit();  // (1, 2]
    const double mu = log_uniform(1e-5, 10.0);
    const double rho = log_uniform(1.0, 1e4);
    const double q = log_uniform(1e-9, 1.0);

    const CapillaryGeometry geom =
        kind == TubeKind::Straight
            ? CapillaryGeometry::straight(r_min, length)
            : CapillaryGeometry::make(kind, r_min, std::min(r_min * (1.0 + gap), 20.0 * r_min),
                                      length);
    return FlowCase{geom, FluidProperties(mu, rho), MomentumModel(alpha), q};
}

}  // namespace capflow
