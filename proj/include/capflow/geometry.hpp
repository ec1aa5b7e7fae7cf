#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace capflow {

enum class TubeKind { Conical, Parabolic, Hyperbolic, HyperbolicCosine, Sinusoidal, Straight };

inline constexpr std::array<TubeKind, 5> kConvergingDivergingKinds = {
    TubeKind::Conical, TubeKind::Parabolic, TubeKind::Hyperbolic, TubeKind::HyperbolicCosine,
    TubeKind::Sinusoidal};

inline constexpr std::array<TubeKind, 6> kAllKinds = {
    TubeKind::Conical,          TubeKind::Parabolic,  TubeKind::Hyperbolic,
    TubeKind::HyperbolicCosine, TubeKind::Sinusoidal, TubeKind::Straight};

std::string_view to_string(TubeKind kind) noexcept;

/// Accepts the names produced by to_string plus a few aliases ("cosh", "sine").
std::optional<TubeKind> parse_tube_kind(std::string_view name) noexcept;

constexpr bool is_converging_diverging(TubeKind kind) noexcept {
    return kind != TubeKind::Straight;
}

/// Axisymmetric tube centred at x = 0, spanning [-L/2, L/2]. Radius is r_min at the
/// midpoint and r_max at both ends. Straight tubes have r_min == r_max.
///
/// Construction enforces 0 < r_min <= r_max and length > 0. Equal radii are accepted
/// for converging-diverging kinds so callers can probe the degenerate case; the
/// closed forms refuse them with DegenerateShape.
class CapillaryGeometry {
public:
    static CapillaryGeometry make(TubeKind kind, double r_min, double r_max, double length);
    static CapillaryGeometry straight(double radius, double length);

    TubeKind kind() const noexcept { return kind_; }
    double r_min() const noexcept { return r_min_; }
    double r_max() const noexcept { return r_max_; }
    double length() const noexcept { return length_; }
    double half_length() const noexcept { return 0.5 * length_; }

    friend bool operator==(const CapillaryGeometry&, const CapillaryGeometry&) = default;

private:
    CapillaryGeometry(TubeKind kind, double r_min, double r_max, double length)
        : kind_(kind), r_min_(r_min), r_max_(r_max), length_(length) {}

    TubeKind kind_;
    double r_min_;
    double r_max_;
    double length_;
};

/// Kind-specific profile coefficients.
///   Conical           r = a + b|x|
///   Parabolic         r = a + b x^2
///   Hyperbolic        r = sqrt(a + b x^2)
///   HyperbolicCosine  r = a cosh(b x)
///   Sinusoidal        r = a - b cos(k x),  cap_b = (r_max + r_min) / (r_min - r_max) < -1
struct ShapeParameters {
    double a = 0.0;
    double b = 0.0;
    std::optional<double> k;
    std::optional<double> cap_b;
};

/// Throws UnsupportedKind for Straight and DegenerateShape when r_min == r_max.
ShapeParameters shape_parameters(const CapillaryGeometry& geom);

/// Throws OutOfDomain when |x| > L/2.
double radius_at(const CapillaryGeometry& geom, double x);
double area_at(const CapillaryGeometry& geom, double x);

/// ln(z + sqrt(z^2 - 1)); throws InvalidArgument for z < 1.
double arccosh(double z);

/// Precomputed radius evaluator without domain checks, for inner loops.
/// The result is clamped to [r_min, r_max] and is an even function of x.
class RadiusProfile {
public:
    explicit RadiusProfile(const CapillaryGeometry& geom);

    double operator()(double x) const noexcept;

    const CapillaryGeometry& geometry() const noexcept { return geom_; }

private:
    CapillaryGeometry geom_;
    double a_ = 0.0;
    double b_ = 0.0;
    double k_ = 0.0;
};

}  // namespace capflow
