#include "capflow/report_io.hpp"

#include <cmath>
#include <cstdio>

namespace capflow::io {

namespace {

std::string json_number(double v) { return std::isfinite(v) ? format_number(v) : "null"; }

std::string json_string(std::string_view s) {
    std::string out = "\"";
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out + "\"";
}

const char* json_bool(bool b) { return b ? "true" : "false"; }

std::string pad(int n) { return std::string(static_cast<std::size_t>(n), ' '); }

void write_row_json(std::ostream& out, const ResultRow& r) {
    out << "{\"kind\":" << json_string(to_string(r.kind))
        << ",\"r_min\":" << json_number(r.r_min) << ",\"r_max\":" << json_number(r.r_max)
        << ",\"length\":" << json_number(r.length) << ",\"mu\":" << json_number(r.mu)
        << ",\"rho\":" << json_number(r.rho) << ",\"alpha\":" << json_number(r.alpha)
        << ",\"model\":" << json_string(to_string(r.model));
    if (r.error) {
        out << ",\"q\":" << json_number(r.q) << ",\"p\":null,\"resistance\":null,\"error\":"
            << json_string(*r.error) << "}";
        return;
    }
    out << ",\"q\":" << json_number(r.q) << ",\"p\":" << json_number(r.p)
        << ",\"resistance\":" << json_number(r.resistance) << "}";
}

}  // namespace

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

void write_rows_csv(std::ostream& out, std::span<const ResultRow> rows) {
    out << kResultCsvHeader << '\n';
    for (const auto& r : rows) {
        out << to_string(r.kind) << ',' << format_number(r.r_min) << ','
            << format_number(r.r_max) << ',' << format_number(r.length) << ','
            << format_number(r.mu) << ',' << format_number(r.rho) << ','
            << format_number(r.alpha) << ',' << to_string(r.model) << ',';
        if (r.error) {
            // q may be the unknown (inverse solve); an error row keeps it as given.
            out << format_number(r.q) << ",error,error\n";
        } else {
            out << format_number(r.q) << ',' << format_number(r.p) << ','
                << format_number(r.resistance) << '\n';
        }
    }
}

void write_rows_json(std::ostream& out, std::span<const ResultRow> rows) {
    out << "{\"rows\":[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out << (i ? ",\n  " : "\n  ");
        write_row_json(out, rows[i]);
    }
    out << (rows.empty() ? "]}\n" : "\n]}\n");
}

void write_convergence_csv(std::ostream& out, std::span<const ConvergenceRow> rows) {
    out << kConvergenceCsvHeader << '\n';
    for (const auto& r : rows) {
        out << to_string(r.kind) << ',' << r.record.n_elements << ','
            << format_number(r.record.p_numeric) << ',' << format_number(r.record.p_analytic)
            << ',' << format_number(r.record.ratio) << '\n';
    }
}

void write_convergence_json(std::ostream& out, std::span<const ConvergenceRow> rows) {
    out << "{\"rows\":[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        out << (i ? ",\n  " : "\n  ") << "{\"kind\":" << json_string(to_string(r.kind))
            << ",\"n\":" << r.record.n_elements
            << ",\"p_numeric\":" << json_number(r.record.p_numeric)
            << ",\"p_analytic\":" << json_number(r.record.p_analytic)
            << ",\"ratio\":" << json_number(r.record.ratio) << "}";
    }
    out << (rows.empty() ? "]}\n" : "\n]}\n");
}

void write_report_json(std::ostream& out, const ValidationReport& report, int indent) {
    const std::string in0 = pad(indent);
    const std::string in1 = pad(indent + 2);
    const std::string in2 = pad(indent + 4);
    out << "{\n"
        << in1 << "\"check_name\": " << json_string(report.check_name) << ",\n"
        << in1 << "\"passed\": " << json_bool(report.passed) << ",\n"
        << in1 << "\"worst_case_relative_error\": "
        << json_number(report.worst_case_relative_error) << ",\n"
        << in1 << "\"tolerance\": " << json_number(report.tolerance) << ",\n"
        << in1 << "\"informational\": " << json_bool(report.informational) << ",\n";
    if (report.requires_monotone) {
        out << in1 << "\"monotone\": " << json_bool(report.monotone) << ",\n";
    }
    if (report.errored) out << in1 << "\"errored\": true,\n";
    if (!report.note.empty()) out << in1 << "\"note\": " << json_string(report.note) << ",\n";
    out << in1 << "\"cases\": [";
    for (std::size_t i = 0; i < report.cases.size(); ++i) {
        const auto& c = report.cases[i];
        out << (i ? ",\n" : "\n") << in2 << "{\"label\": " << json_string(c.label)
            << ", \"inputs\": {";
        for (std::size_t k = 0; k < c.inputs.size(); ++k) {
            out << (k ? ", " : "") << json_string(c.inputs[k].first) << ": "
                << json_number(c.inputs[k].second);
        }
        out << "}";
        if (c.skipped) {
            out << ", \"skipped\": true, \"note\": " << json_string(c.note) << "}";
            continue;
        }
        out << ", \"value_a\": " << json_number(c.value_a)
            << ", \"value_b\": " << json_number(c.value_b)
            << ", \"relative_error\": " << json_number(c.relative_error) << "}";
    }
    out << (report.cases.empty() ? "]\n" : "\n" + in1 + "]\n") << in0 << "}";
}

void write_suite_json(std::ostream& out, const SuiteResult& suite) {
    out << "{\n  \"passed\": " << json_bool(suite.passed) << ",\n  \"checks\": [";
    for (std::size_t i = 0; i < suite.reports.size(); ++i) {
        out << (i ? ",\n    " : "\n    ");
        write_report_json(out, suite.reports[i], 4);
    }
    out << (suite.reports.empty() ? "]\n}\n" : "\n  ]\n}\n");
}

}  // namespace capflow::io
