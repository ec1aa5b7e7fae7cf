#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "capflow/flow_models.hpp"
#include "capflow/geometry.hpp"
#include "capflow/kernels.hpp"
#include "capflow/oracle.hpp"
#include "capflow/sampling.hpp"

namespace capflow::cli {

/// Stable process exit codes.
namespace exit_code {
inline constexpr int kSuccess = 0;
inline constexpr int kValidationFailure = 1;
inline constexpr int kInvalidInput = 2;
inline constexpr int kDegenerateGeometry = 3;
inline constexpr int kEmptySweep = 4;
}  // namespace exit_code

enum class Command { Compute, Sweep, Convergence, Validate };
enum class OutputFormat { Csv, Json };
enum class SweepAxis { Q, RMin, RMax, Length, Alpha };

/// Parsed command line. Geometry and fluid fields left empty fall back to the canonical
/// fixture (r_min 0.5, r_max 1, L 2, mu 1e-3, rho 1e3, q 1e-6).
struct RunConfig {
    Command command = Command::Compute;

    std::string kind = "conical";  ///< tube kind name, or "all" for convergence
    std::optional<double> r_min;
    std::optional<double> r_max;
    std::optional<double> radius;  ///< straight tubes
    std::optional<double> length;
    std::optional<double> mu;
    std::optional<double> rho;
    double alpha = kPoiseuilleAlpha;
    FlowModel model = FlowModel::NavierStokes1D;
    std::optional<double> q;
    std::optional<double> p;

    // sweep
    SweepAxis axis = SweepAxis::Q;
    std::vector<double> sweep_values;

    // convergence
    std::vector<std::size_t> element_counts;
    RadiusAveraging averaging = RadiusAveraging::EndpointMean;

    // validate
    std::uint64_t seed = kDefaultSeed;
    std::size_t draws = 200;
    QuadratureConfig quadrature{};
    std::optional<double> compare_alpha;

    OutputFormat format = OutputFormat::Csv;
    std::optional<std::string> out_path;
};

/// Executes a parsed configuration. Results go to `out` (or cfg.out_path), diagnostics to
/// `err` as a single line. Returns one of the exit_code values.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv and runs. Parse failures return kInvalidInput.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Inclusive arithmetic range from..to with the given step.
std::vector<double> arithmetic_range(double from, double to, double step);

}  // namespace capflow::cli
