#include "capflow/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "capflow/errors.hpp"

namespace capflow {

namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

std::string_view to_string(TubeKind kind) noexcept {
    switch (kind) {
        case TubeKind::Conical: return "conical";
        case TubeKind::Parabolic: return "parabolic";
        case TubeKind::Hyperbolic: return "hyperbolic";
        case TubeKind::HyperbolicCosine: return "hyperbolic-cosine";
        case TubeKind::Sinusoidal: return "sinusoidal";
        case TubeKind::Straight: return "straight";
    }
    return "unknown";
}

std::optional<TubeKind> parse_tube_kind(std::string_view name) noexcept {
    for (TubeKind kind : kAllKinds) {
        if (name == to_string(kind)) return kind;
    }
    if (name == "cosh" || name == "hyperbolic_cosine") return TubeKind::HyperbolicCosine;
    if (name == "sine" || name == "sinusoid") return TubeKind::Sinusoidal;
    if (name == "cone" || name == "conic") return TubeKind::Conical;
    return std::nullopt;
}

CapillaryGeometry CapillaryGeometry::make(TubeKind kind, double r_min, double r_max,
                                          double length) {
    if (!positive_finite(r_min)) throw InvalidArgument("r_min must be positive and finite");
    if (!positive_finite(r_max)) throw InvalidArgument("r_max must be positive and finite");
    if (!positive_finite(length)) throw InvalidArgument("length must be positive and finite");
    if (r_min > r_max) throw InvalidArgument("r_min must not exceed r_max");
    if (kind == TubeKind::Straight && r_min != r_max) {
        throw InvalidArgument("straight tube requires r_min == r_max");
    }
    return CapillaryGeometry(kind, r_min, r_max, length);
}

CapillaryGeometry CapillaryGeometry::straight(double radius, double length) {
    return make(TubeKind::Straight, radius, radius, length);
}

double arccosh(double z) {
    if (!(z >= 1.0)) throw InvalidArgument("arccosh argument must be >= 1");
    // (z - 1)(z + 1) instead of z*z - 1 keeps digits when z is close to 1.
    return std::log(z + std::sqrt((z - 1.0) * (z + 1.0)));
}

namespace {

// Profile coefficients without the strict r_min < r_max requirement; b = 0 for equal radii.
ShapeParameters raw_coefficients(const CapillaryGeometry& geom) {
    const double r_min = geom.r_min();
    const double r_max = geom.r_max();
    const double length = geom.length();
    ShapeParameters out;
    switch (geom.kind()) {
        case TubeKind::Conical:
            out.a = r_min;
            out.b = 2.0 * (r_max - r_min) / length;
            break;
        case TubeKind::Parabolic:
            out.a = r_min;
            out.b = (2.0 / length) * (2.0 / length) * (r_max - r_min);
            break;
        case TubeKind::Hyperbolic:
            out.a = r_min * r_min;
            out.b = (2.0 / length) * (2.0 / length) * ((r_max - r_min) * (r_max + r_min));
            break;
        case TubeKind::HyperbolicCosine:
            out.a = r_min;
            out.b = (2.0 / length) * arccosh(r_max / r_min);
            break;
        case TubeKind::Sinusoidal:
            out.a = 0.5 * (r_max + r_min);
            out.b = 0.5 * (r_max - r_min);
            out.k = 2.0 * std::numbers::pi / length;
            break;
        case TubeKind::Straight:
            out.a = r_min;
            break;
    }
    return out;
}

}  // namespace

ShapeParameters shape_parameters(const CapillaryGeometry& geom) {
    if (geom.kind() == TubeKind::Straight) {
        throw UnsupportedKind("shape parameters are not defined for a straight tube");
    }
    if (!(geom.r_min() < geom.r_max())) {
        throw DegenerateShape(std::string(to_string(geom.kind())) +
                              " profile requires r_min < r_max; use a straight tube");
    }
    ShapeParameters out = raw_coefficients(geom);
    if (geom.kind() == TubeKind::Sinusoidal) {
        out.cap_b = (geom.r_max() + geom.r_min()) / (geom.r_min() - geom.r_max());
    }
    return out;
}

RadiusProfile::RadiusProfile(const CapillaryGeometry& geom) : geom_(geom) {
    const ShapeParameters c = raw_coefficients(geom);
    a_ = c.a;
    b_ = c.b;
    k_ = c.k.value_or(0.0);
}

double RadiusProfile::operator()(double x) const noexcept {
    const double ax = std::abs(x);
    double r = a_;
    switch (geom_.kind()) {
        case TubeKind::Conical: r = a_ + b_ * ax; break;
        case TubeKind::Parabolic: r = a_ + b_ * ax * ax; break;
        case TubeKind::Hyperbolic: r = std::sqrt(a_ + b_ * ax * ax); break;
        case TubeKind::HyperbolicCosine: r = a_ * std::cosh(b_ * ax); break;
        case TubeKind::Sinusoidal: r = a_ - b_ * std::cos(k_ * ax); break;
        case TubeKind::Straight: return a_;
    }
    return std::clamp(r, geom_.r_min(), geom_.r_max());
}

double radius_at(const CapillaryGeometry& geom, double x) {
    if (!(std::abs(x) <= geom.half_length())) {
        throw OutOfDomain("axial coordinate " + std::to_string(x) + " outside [-L/2, L/2]");
    }
    return RadiusProfile(geom)(x);
}

double area_at(const CapillaryGeometry& geom, double x) {
    const double r = radius_at(geom, x);
    return std::numbers::pi * r * r;
}

}  // namespace capflow
