#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "capflow/flow_models.hpp"
#include "capflow/geometry.hpp"
#include "capflow/oracle.hpp"
#include "capflow/sampling.hpp"

namespace capflow {

inline constexpr double kLubricationIdentityTolerance = 1e-12;
inline constexpr double kOracleAgreementTolerance = 1e-8;
inline constexpr double kStraightLimitTolerance = 1e-3;

struct ValidationCase {
    std::vector<std::pair<std::string, double>> inputs;
    std::string label;  ///< tube kind or other short tag
    double value_a = 0.0;
    double value_b = 0.0;
    double relative_error = 0.0;  ///< |value_a / value_b - 1|
    bool skipped = false;
    std::string note;
};

/// Outcome of one validation check.
///
/// `passed` is always recomputable from the other fields; see recompute_passed().
/// Informational reports are comparisons expected to differ (for example the
/// alpha != 4/3 lubrication comparison); they never fail a suite.
struct ValidationReport {
    std::string check_name;
    bool passed = false;
    double worst_case_relative_error = 0.0;
    double tolerance = 0.0;
    bool informational = false;
    /// Straight-limit only: cases are ordered by decreasing delta, |ratio - 1| must strictly
    /// decrease along them, and worst_case_relative_error is the value at the smallest delta.
    bool requires_monotone = false;
    bool monotone = true;
    /// Set when the check could not be evaluated (e.g. quadrature failure); forces a fail.
    bool errored = false;
    std::string note;
    std::vector<ValidationCase> cases;
};

/// Recomputes `passed` from the cases, tolerance and flags alone.
bool recompute_passed(const ValidationReport& report);

/// pressure_drop_ns at the given alpha (default 4/3) against pressure_drop_lub per geometry.
/// With alpha != 4/3 the report is informational.
ValidationReport check_lubrication_identity(std::span<const CapillaryGeometry> geoms,
                                            const FluidProperties& fluid, double q,
                                            double alpha = kPoiseuilleAlpha);

/// Randomized variant; each case's fluid and q are used, its alpha is replaced by 4/3.
ValidationReport check_lubrication_identity(std::span<const FlowCase> cases);

/// r_min = r, r_max = r (1 + delta) for each delta; ratio to the straight tube of radius r.
/// Deltas below the degenerate-gap guard are recorded as skipped.
ValidationReport check_straight_limit(TubeKind kind, double r, double length,
                                      const FluidProperties& fluid, const MomentumModel& model,
                                      double q, std::span<const double> deltas);

/// Quadrature oracle against the closed form per geometry. A QuadratureFailure propagates.
ValidationReport check_oracle_agreement(std::span<const CapillaryGeometry> geoms,
                                        const FluidProperties& fluid, const MomentumModel& model,
                                        double q, const QuadratureConfig& cfg = {});

ValidationReport check_oracle_agreement(std::span<const FlowCase> cases,
                                        const QuadratureConfig& cfg = {});

/// Options for the built-in validation suite.
struct SuiteOptions {
    std::uint64_t seed = kDefaultSeed;
    std::size_t random_draws = 200;
    QuadratureConfig quadrature{};
    /// When set, adds an informational NS-vs-lubrication comparison at this alpha.
    std::optional<double> compare_alpha;
};

struct SuiteResult {
    std::vector<ValidationReport> reports;
    bool passed = true;  ///< all non-informational reports passed
};

/// Runs every check over the built-in fixtures (unit case, canonical fixture, seeded
/// random draws). A quadrature failure becomes a failed report instead of an exception.
SuiteResult run_validation_suite(const SuiteOptions& options = {});

}  // namespace capflow
