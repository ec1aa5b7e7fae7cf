#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "capflow/flow_models.hpp"
#include "capflow/geometry.hpp"
#include "capflow/oracle.hpp"
#include "capflow/validation.hpp"

namespace capflow::io {

/// %.17g: round-trip safe, locale independent. Non-finite values become "nan"/"inf".
std::string format_number(double value);

/// One compute/sweep result. `error` marks a row whose point could not be evaluated.
struct ResultRow {
    TubeKind kind = TubeKind::Straight;
    double r_min = 0.0;
    double r_max = 0.0;
    double length = 0.0;
    double mu = 0.0;
    double rho = 0.0;
    double alpha = 0.0;
    FlowModel model = FlowModel::NavierStokes1D;
    double q = 0.0;
    double p = 0.0;
    double resistance = 0.0;
    std::optional<std::string> error;
};

inline constexpr std::string_view kResultCsvHeader =
    "kind,r_min,r_max,length,mu,rho,alpha,model,q,p,resistance";
inline constexpr std::string_view kConvergenceCsvHeader = "kind,n,p_numeric,p_analytic,ratio";

struct ConvergenceRow {
    TubeKind kind = TubeKind::Straight;
    ConvergenceRecord record;
};

void write_rows_csv(std::ostream& out, std::span<const ResultRow> rows);
void write_rows_json(std::ostream& out, std::span<const ResultRow> rows);

void write_convergence_csv(std::ostream& out, std::span<const ConvergenceRow> rows);
void write_convergence_json(std::ostream& out, std::span<const ConvergenceRow> rows);

/// {check_name, passed, worst_case_relative_error, cases:[{inputs, value_a, value_b,
/// relative_error}]} plus tolerance/informational/note bookkeeping.
void write_report_json(std::ostream& out, const ValidationReport& report, int indent = 0);
void write_suite_json(std::ostream& out, const SuiteResult& suite);

}  // namespace capflow::io
