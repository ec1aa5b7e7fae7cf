#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "capflow/errors.hpp"
#include "capflow/oracle.hpp"
#include "capflow/sampling.hpp"

using namespace capflow;

namespace {

constexpr double kPi = std::numbers::pi;
const FluidProperties kUnitFluid(1.0, 1.0);
const MomentumModel kPoiseuille{};

double rel(double a, double b) { return std::abs(a / b - 1.0); }

CapillaryGeometry unit_case(TubeKind kind) {
    if (kind == TubeKind::Straight) return CapillaryGeometry::straight(1.0, 1.0);
    return CapillaryGeometry::make(kind, 1.0, 2.0, 1.0);
}

}  // namespace

TEST(QuadratureConfig, Validation) {
    EXPECT_NO_THROW(QuadratureConfig{}.validate());
    EXPECT_THROW((QuadratureConfig{0.0, 20}.validate()), InvalidArgument);
    EXPECT_THROW((QuadratureConfig{1e-3, 20}.validate()), InvalidArgument);
    EXPECT_THROW((QuadratureConfig{1e-8, 9}.validate()), InvalidArgument);
}

TEST(Quadrature, StraightIsExact) {
    const double p = pressure_drop_quadrature(unit_case(TubeKind::Straight), kUnitFluid,
                                              kPoiseuille, 1.0);
    EXPECT_LE(rel(p, 8.0 / kPi), 1e-14);
}

TEST(Quadrature, ConicalMatchesClosedForm) {
    const double p = pressure_drop_quadrature(unit_case(TubeKind::Conical), kUnitFluid,
                                              kPoiseuille, 1.0);
    EXPECT_LE(rel(p, 7.0 / (3.0 * kPi)), 1e-10);
}

TEST(Quadrature, CanonicalFixtureAllKinds) {
    const auto& fx = kCanonicalFixture;
    for (TubeKind kind : kAllKinds) {
        const auto g = fx.geometry(kind);
        const double quad = pressure_drop_quadrature(g, fx.fluid(), fx.model(), fx.q);
        const double closed = pressure_drop_ns(g, fx.fluid(), fx.model(), fx.q);
        EXPECT_LE(rel(quad, closed), 1e-8) << to_string(kind);
    }
}

TEST(Quadrature, RandomizedAgreementAndPositivity) {
    CaseSampler sampler(2024);
    for (TubeKind kind : kAllKinds) {
        for (int i = 0; i < 200; ++i) {
            const auto c = sampler.draw(kind);
            const double quad = pressure_drop_quadrature(c.geometry, c.fluid, c.model, c.q);
            EXPECT_GT(quad, 0.0);
            EXPECT_LE(rel(quad, pressure_drop_ns(c.geometry, c.fluid, c.model, c.q)), 1e-8)
                << to_string(kind) << " r_min=" << c.geometry.r_min()
                << " r_max=" << c.geometry.r_max() << " L=" << c.geometry.length();
        }
    }
}

TEST(Quadrature, SymmetryReduction) {
    for (TubeKind kind : kAllKinds) {
        const auto g = CapillaryGeometry::make(kind, 0.3, kind == TubeKind::Straight ? 0.3 : 1.1, 4.0);
        const double full = inverse_area_squared_integral(g, -2.0, 2.0);
        const double half = inverse_area_squared_integral(g, 0.0, 2.0);
        EXPECT_LE(rel(full, 2.0 * half), 1e-10) << to_string(kind);
    }
}

TEST(Quadrature, ErrorsAndFailure) {
    const auto cone = unit_case(TubeKind::Conical);
    EXPECT_THROW(pressure_drop_quadrature(cone, kUnitFluid, kPoiseuille, -1.0),
                 UnsupportedDirection);
    EXPECT_THROW(pressure_drop_quadrature(CapillaryGeometry::make(TubeKind::Conical, 1, 1, 1),
                                          kUnitFluid, kPoiseuille, 1.0),
                 DegenerateShape);
    EXPECT_THROW(inverse_area_squared_integral(cone, -0.6, 0.0), OutOfDomain);

    const QuadratureConfig impossible{1e-15, 10};
    try {
        pressure_drop_quadrature(unit_case(TubeKind::Sinusoidal), kUnitFluid, kPoiseuille, 1.0,
                                 impossible);
        FAIL() << "expected QuadratureFailure";
    } catch (const QuadratureFailure& e) {
        EXPECT_GT(e.estimate(), 0.0);
        EXPECT_GT(e.error_bound(), 0.0);
    }
}

TEST(Quadrature, CoarseToleranceStillClose) {
    const QuadratureConfig coarse{5e-4, 20};
    for (TubeKind kind : kConvergingDivergingKinds) {
        const auto g = unit_case(kind);
        EXPECT_LE(rel(pressure_drop_quadrature(g, kUnitFluid, kPoiseuille, 1.0, coarse),
                      pressure_drop_ns(g, kUnitFluid, kPoiseuille, 1.0)),
                  5e-4);
    }
}

TEST(Discretized, HandSummedExamples) {
    const auto cone = unit_case(TubeKind::Conical);
    // one element, both endpoints at r = 2
    EXPECT_LE(rel(pressure_drop_discretized(cone, kUnitFluid, kPoiseuille, 1.0, 1),
                  1.0 / (2.0 * kPi)),
              1e-14);
    // two elements spanning radii {2, 1}: mean 1.5 each, dx = 0.5
    const double two = 2.0 * 8.0 * kPi * 0.5 / (kPi * kPi * std::pow(1.5, 4));
    EXPECT_LE(rel(pressure_drop_discretized(cone, kUnitFluid, kPoiseuille, 1.0, 2), two), 1e-14);
    EXPECT_NEAR(two, 0.503008215204014888, 1e-15);
    EXPECT_LE(rel(pressure_drop_discretized(cone, kUnitFluid, kPoiseuille, 1.0, 100000),
                  7.0 / (3.0 * kPi)),
              1e-8);
}

TEST(Discretized, MidpointAveraging) {
    const auto cone = unit_case(TubeKind::Conical);
    // one element: midpoint radius is r(0) = 1
    EXPECT_LE(rel(pressure_drop_discretized(cone, kUnitFluid, kPoiseuille, 1.0, 1,
                                            RadiusAveraging::Midpoint),
                  8.0 / kPi),
              1e-14);
    for (TubeKind kind : kConvergingDivergingKinds) {
        const auto g = unit_case(kind);
        const double closed = pressure_drop_ns(g, kUnitFluid, kPoiseuille, 1.0);
        EXPECT_LE(rel(pressure_drop_discretized(g, kUnitFluid, kPoiseuille, 1.0, 400,
                                                RadiusAveraging::Midpoint),
                      closed),
                  1e-3);
    }
}

TEST(Discretized, Errors) {
    EXPECT_THROW(pressure_drop_discretized(unit_case(TubeKind::Conical), kUnitFluid, kPoiseuille,
                                           1.0, 0),
                 InvalidArgument);
}

TEST(ConvergenceSeries, ConicalTrendsToOne) {
    const std::size_t n_list[] = {1, 2, 5, 10, 50};
    const auto series = convergence_series(unit_case(TubeKind::Conical), kUnitFluid, kPoiseuille,
                                           1.0, n_list);
    ASSERT_EQ(series.size(), 5u);
    for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(series[i].n_elements, n_list[i]);
    EXPECT_LT(std::abs(series[4].ratio - 1.0), 1e-2);
    EXPECT_LT(std::abs(series[4].ratio - 1.0), std::abs(series[0].ratio - 1.0));
}

TEST(ConvergenceSeries, StraightIsExactEverywhere) {
    const std::size_t n_list[] = {1, 3, 7, 64, 4097, 10000};
    for (const auto& rec : convergence_series(CapillaryGeometry::straight(0.4, 3.0), kUnitFluid,
                                              kPoiseuille, 1e-3, n_list)) {
        EXPECT_NEAR(rec.ratio, 1.0, 1e-12) << rec.n_elements;
    }
}

TEST(ConvergenceSeries, SinusoidalRefinementImproves) {
    const std::size_t n_list[] = {10, 50};
    const auto s = convergence_series(unit_case(TubeKind::Sinusoidal), kUnitFluid, kPoiseuille,
                                      1.0, n_list);
    EXPECT_LT(std::abs(s[1].ratio - 1.0), std::abs(s[0].ratio - 1.0));
}

// 200 elements resolve throats up to r_max/r_min ~ 5 to within 2e-3 (hyperbolic drifts
// past it near 8:1); the tighter
// constrictions of the sampler box (up to 20:1) need more elements.
TEST(ConvergenceSeries, RandomConfigurationsWithin2e3At200) {
    CaseSampler sampler(77);
    const std::size_t n_list[] = {200};
    int tested = 0;
    for (TubeKind kind : kConvergingDivergingKinds) {
        for (int i = 0; i < 80; ++i) {
            const auto c = sampler.draw(kind);
            if (c.geometry.r_max() > 5.0 * c.geometry.r_min()) continue;
            ++tested;
            const auto rec = convergence_series(c.geometry, c.fluid, c.model, c.q, n_list)[0];
            EXPECT_GT(rec.p_numeric, 0.0);
            EXPECT_LE(std::abs(rec.ratio - 1.0), 2e-3)
                << to_string(kind) << " r_max/r_min=" << c.geometry.r_max() / c.geometry.r_min();
        }
    }
    EXPECT_GT(tested, 100);
}

TEST(ConvergenceSeries, SevereConstrictionConvergesWithRefinement) {
    const FluidProperties fluid(1e-3, 1e3);
    const std::size_t n_list[] = {200, 2000, 20000};
    for (TubeKind kind : kConvergingDivergingKinds) {
        const auto g = CapillaryGeometry::make(kind, 0.1, 2.0, 1.0);
        const auto s = convergence_series(g, fluid, kPoiseuille, 1e-6, n_list);
        EXPECT_LT(std::abs(s[1].ratio - 1.0), std::abs(s[0].ratio - 1.0)) << to_string(kind);
        EXPECT_LT(std::abs(s[2].ratio - 1.0), 2e-3) << to_string(kind);
    }
}

TEST(ConvergenceSeries, ParallelMatchesSerialBitForBit) {
    std::vector<std::size_t> n_list(300);
    std::iota(n_list.begin(), n_list.end(), std::size_t{1});
    n_list.push_back(50000);
    const auto& fx = kCanonicalFixture;
    for (TubeKind kind : kConvergingDivergingKinds) {
        const auto g = fx.geometry(kind);
        const auto par = convergence_series(g, fx.fluid(), fx.model(), fx.q, n_list);
        const auto ser = convergence_series_serial(g, fx.fluid(), fx.model(), fx.q, n_list);
        ASSERT_EQ(par.size(), ser.size());
        for (std::size_t i = 0; i < par.size(); ++i) {
            EXPECT_EQ(par[i].p_numeric, ser[i].p_numeric);
            EXPECT_EQ(par[i].ratio, ser[i].ratio);
        }
    }
}

TEST(ConvergenceSeries, Errors) {
    const std::size_t bad[] = {3, 0};
    EXPECT_THROW(convergence_series(unit_case(TubeKind::Conical), kUnitFluid, kPoiseuille, 1.0,
                                    bad),
                 InvalidArgument);
    const std::size_t ok[] = {3};
    EXPECT_THROW(convergence_series(unit_case(TubeKind::Conical), kUnitFluid, kPoiseuille, 0.0, ok),
                 InvalidArgument);
}
