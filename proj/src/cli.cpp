#include "capflow/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "capflow/errors.hpp"
#include "capflow/report_io.hpp"
#include "capflow/validation.hpp"
#include "parallel.hpp"

namespace capflow::cli {

namespace {

/// Dimensions and fluid after defaults are applied; still unvalidated.
struct Point {
    TubeKind kind = TubeKind::Conical;
    double r_min = 0.0;
    double r_max = 0.0;
    double length = 0.0;
    double mu = 0.0;
    double rho = 0.0;
    double alpha = kPoiseuilleAlpha;
    std::optional<double> q;
    std::optional<double> p;
};

TubeKind require_kind(const std::string& name) {
    const auto kind = parse_tube_kind(name);
    if (!kind) throw InvalidArgument("unknown tube kind '" + name + "'");
    return *kind;
}

Point resolve_point(const RunConfig& cfg, TubeKind kind) {
    const CanonicalFixture& fx = kCanonicalFixture;
    Point pt;
    pt.kind = kind;
    if (kind == TubeKind::Straight) {
        if (cfg.r_min && cfg.r_max && *cfg.r_min != *cfg.r_max) {
            throw InvalidArgument("straight tube requires r_min == r_max (or use --r)");
        }
        const double r = cfg.radius ? *cfg.radius
                         : cfg.r_min ? *cfg.r_min
                         : cfg.r_max ? *cfg.r_max
                                     : fx.r_min;
        pt.r_min = pt.r_max = r;
    } else {
        if (cfg.radius) throw InvalidArgument("--r applies only to kind straight");
        pt.r_min = cfg.r_min.value_or(fx.r_min);
        pt.r_max = cfg.r_max.value_or(fx.r_max);
    }
    pt.length = cfg.length.value_or(fx.length);
    pt.mu = cfg.mu.value_or(fx.mu);
    pt.rho = cfg.rho.value_or(fx.rho);
    pt.alpha = cfg.alpha;
    pt.q = cfg.q;
    pt.p = cfg.p;
    return pt;
}

io::ResultRow evaluate(const Point& pt, FlowModel model) {
    io::ResultRow row;
    row.kind = pt.kind;
    row.r_min = pt.r_min;
    row.r_max = pt.r_max;
    row.length = pt.length;
    row.mu = pt.mu;
    row.rho = pt.rho;
    row.alpha = pt.alpha;
    row.model = model;

    const auto geom = CapillaryGeometry::make(pt.kind, pt.r_min, pt.r_max, pt.length);
    const FluidProperties fluid(pt.mu, pt.rho);
    const MomentumModel momentum(pt.alpha);
    const FlowSolution sol = pt.q ? solve_for_pressure(geom, fluid, momentum, model, *pt.q)
                                  : solve_for_flow_rate(geom, fluid, momentum, model, *pt.p);
    row.q = sol.flow_rate;
    row.p = sol.pressure_drop;
    row.resistance = model == FlowModel::NavierStokes1D
                         ? resistance_coefficient(geom, fluid, momentum)
                         : resistance_coefficient_lub(geom, fluid);
    return row;
}

// Writes to the configured destination. Returns false if the file cannot be opened.
bool emit(const RunConfig& cfg, const std::string& text, std::ostream& out, std::ostream& err) {
    if (!cfg.out_path) {
        out << text;
        out.flush();
        return true;
    }
    std::ofstream file(*cfg.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        err << "error: cannot open output file '" << *cfg.out_path << "'\n";
        return false;
    }
    file << text;
    return static_cast<bool>(file);
}

void require_one_of_q_p(const RunConfig& cfg) {
    if (cfg.q.has_value() == cfg.p.has_value()) {
        throw InvalidArgument("exactly one of --q and --p must be given");
    }
}

int cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    require_one_of_q_p(cfg);
    const Point pt = resolve_point(cfg, require_kind(cfg.kind));
    const io::ResultRow row = evaluate(pt, cfg.model);
    std::ostringstream text;
    if (cfg.format == OutputFormat::Csv) {
        io::write_rows_csv(text, std::span(&row, 1));
    } else {
        io::write_rows_json(text, std::span(&row, 1));
    }
    return emit(cfg, text.str(), out, err) ? exit_code::kSuccess : exit_code::kInvalidInput;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.sweep_values.empty()) throw InvalidArgument("sweep needs --values or --from/--to/--step");
    if (cfg.axis == SweepAxis::Q) {
        if (cfg.q || cfg.p) throw InvalidArgument("sweep over q takes neither --q nor --p");
    } else {
        require_one_of_q_p(cfg);
    }
    const TubeKind kind = require_kind(cfg.kind);

    std::vector<io::ResultRow> rows(cfg.sweep_values.size());
    detail::parallel_for_index(rows.size(), [&](std::size_t i) {
        RunConfig point_cfg = cfg;
        const double v = cfg.sweep_values[i];
        switch (cfg.axis) {
            case SweepAxis::Q: point_cfg.q = v; break;
            case SweepAxis::RMin:
                if (kind == TubeKind::Straight) point_cfg.radius = v; else point_cfg.r_min = v;
                break;
            case SweepAxis::RMax:
                if (kind == TubeKind::Straight) point_cfg.radius = v; else point_cfg.r_max = v;
                break;
            case SweepAxis::Length: point_cfg.length = v; break;
            case SweepAxis::Alpha: point_cfg.alpha = v; break;
        }
        const Point pt = resolve_point(point_cfg, kind);
        try {
            rows[i] = evaluate(pt, cfg.model);
        } catch (const Error& e) {
            io::ResultRow bad;
            bad.kind = kind;
            bad.r_min = pt.r_min;
            bad.r_max = pt.r_max;
            bad.length = pt.length;
            bad.mu = pt.mu;
            bad.rho = pt.rho;
            bad.alpha = pt.alpha;
            bad.model = cfg.model;
            bad.q = pt.q.value_or(std::nan(""));
            bad.error = e.what();
            rows[i] = std::move(bad);
        }
    });

    const bool any_ok =
        std::any_of(rows.begin(), rows.end(), [](const auto& r) { return !r.error; });
    std::ostringstream text;
    if (cfg.format == OutputFormat::Csv) {
        io::write_rows_csv(text, rows);
    } else {
        io::write_rows_json(text, rows);
    }
    if (!emit(cfg, text.str(), out, err)) return exit_code::kInvalidInput;
    if (!any_ok) {
        err << "error: no sweep point could be evaluated\n";
        return exit_code::kEmptySweep;
    }
    return exit_code::kSuccess;
}

int cmd_convergence(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::vector<std::size_t> counts = cfg.element_counts;
    if (counts.empty()) {
        counts.resize(200);
        std::iota(counts.begin(), counts.end(), std::size_t{1});
    }
    std::vector<TubeKind> kinds;
    if (cfg.kind == "all") {
        kinds.assign(kConvergingDivergingKinds.begin(), kConvergingDivergingKinds.end());
    } else {
        kinds.push_back(require_kind(cfg.kind));
    }
    if (cfg.p) throw InvalidArgument("convergence takes --q, not --p");

    std::vector<io::ConvergenceRow> rows;
    for (TubeKind kind : kinds) {
        const Point pt = resolve_point(cfg, kind);
        const auto geom = CapillaryGeometry::make(kind, pt.r_min, pt.r_max, pt.length);
        const auto series =
            convergence_series(geom, FluidProperties(pt.mu, pt.rho), MomentumModel(pt.alpha),
                               pt.q.value_or(kCanonicalFixture.q), counts, cfg.averaging);
        for (const auto& rec : series) rows.push_back({kind, rec});
    }
    std::ostringstream text;
    if (cfg.format == OutputFormat::Csv) {
        io::write_convergence_csv(text, rows);
    } else {
        io::write_convergence_json(text, rows);
    }
    return emit(cfg, text.str(), out, err) ? exit_code::kSuccess : exit_code::kInvalidInput;
}

int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    cfg.quadrature.validate();
    if (cfg.compare_alpha) MomentumModel check(*cfg.compare_alpha);
    SuiteOptions options;
    options.seed = cfg.seed;
    options.random_draws = cfg.draws;
    options.quadrature = cfg.quadrature;
    options.compare_alpha = cfg.compare_alpha;
    const SuiteResult suite = run_validation_suite(options);
    std::ostringstream text;
    io::write_suite_json(text, suite);
    if (!emit(cfg, text.str(), out, err)) return exit_code::kInvalidInput;
    if (!suite.passed) {
        for (const auto& r : suite.reports) {
            if (!r.passed && !r.informational) {
                err << "error: validation check '" << r.check_name << "' failed\n";
                break;
            }
        }
        return exit_code::kValidationFailure;
    }
    return exit_code::kSuccess;
}

}  // namespace

std::vector<double> arithmetic_range(double from, double to, double step) {
    if (!std::isfinite(from) || !std::isfinite(to) || !std::isfinite(step) || step == 0.0) {
        throw InvalidArgument("sweep range needs finite --from/--to and a nonzero --step");
    }
    const double span = (to - from) / step;
    if (span < -1e-9) throw InvalidArgument("sweep step points away from --to");
    const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
    if (count > 1'000'000) throw InvalidArgument("sweep has more than 1e6 points");
    std::vector<double> values(count);
    for (std::size_t i = 0; i < count; ++i) values[i] = from + static_cast<double>(i) * step;
    return values;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        switch (cfg.command) {
            case Command::Compute: return cmd_compute(cfg, out, err);
            case Command::Sweep: return cmd_sweep(cfg, out, err);
            case Command::Convergence: return cmd_convergence(cfg, out, err);
            case Command::Validate: return cmd_validate(cfg, out, err);
        }
    } catch (const DegenerateShape& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::kDegenerateGeometry;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::kInvalidInput;
    }
    return exit_code::kInvalidInput;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pressure drop / flow rate relations for converging-diverging capillaries"};
    app.name("capflow");
    app.require_subcommand(1);

    RunConfig cfg;
    std::string model_name = "navier-stokes";
    std::string format_name = "csv";
    std::string axis_name;
    std::string averaging_name = "endpoint";
    std::string out_path;
    double from = 0.0, to = 0.0, step = 0.0;
    std::size_t n_max = 0;

    double r_min = 0, r_max = 0, radius = 0, length = 0, mu = 0, rho = 0, q = 0, p = 0;

    auto add_point_options = [&](CLI::App* sub) {
        sub->add_option("--kind", cfg.kind,
                        "conical | parabolic | hyperbolic | hyperbolic-cosine | sinusoidal | straight");
        sub->add_option("--rmin", r_min, "minimum radius at the midpoint (m)");
        sub->add_option("--rmax", r_max, "maximum radius at the ends (m)");
        sub->add_option("--r", radius, "radius of a straight tube (m)");
        sub->add_option("--length", length, "tube length (m)");
        sub->add_option("--mu", mu, "dynamic viscosity (Pa s)");
        sub->add_option("--rho", rho, "mass density (kg/m^3)");
        sub->add_option("--alpha", cfg.alpha, "momentum-flux correction factor, (1, 2]");
        sub->add_option("--q", q, "volumetric flow rate (m^3/s)");
    };
    auto add_output_options = [&](CLI::App* sub) {
        sub->add_option("--format", format_name, "csv | json");
        sub->add_option("--out", out_path, "output file (default: standard output)");
    };

    auto* compute = app.add_subcommand("compute", "pressure drop (or flow rate) at one point");
    auto* sweep = app.add_subcommand("sweep", "one row per value of a swept parameter");
    auto* convergence = app.add_subcommand("convergence", "discretized vs closed-form series");
    auto* validate = app.add_subcommand("validate", "run the built-in validation suite");

    for (auto* sub : {compute, sweep, convergence}) {
        add_point_options(sub);
        add_output_options(sub);
    }
    for (auto* sub : {compute, sweep}) {
        sub->add_option("--model", model_name, "navier-stokes | lubrication");
        sub->add_option("--p", p, "pressure drop (Pa); solves for q");
    }
    sweep->add_option("--axis", axis_name, "q | r_min | r_max | length | alpha")->required();
    sweep->add_option("--values", cfg.sweep_values, "comma-separated values")->delimiter(',');
    sweep->add_option("--from", from);
    sweep->add_option("--to", to);
    sweep->add_option("--step", step);

    convergence->add_option("--n", cfg.element_counts, "comma-separated element counts")
        ->delimiter(',');
    convergence->add_option("--n-max", n_max, "use element counts 1..N");
    convergence->add_option("--averaging", averaging_name, "endpoint | midpoint");

    validate->add_option("--seed", cfg.seed, "seed for the randomized suites");
    validate->add_option("--draws", cfg.draws, "random draws per tube kind");
    validate->add_option("--quad-tol", cfg.quadrature.relative_tolerance,
                         "quadrature relative tolerance, (0, 1e-3)");
    validate->add_option("--max-depth", cfg.quadrature.max_depth, "quadrature bisection depth");
    double compare_alpha = 0.0;
    validate->add_option("--compare-alpha", compare_alpha,
                         "add an informational NS vs lubrication comparison at this alpha");
    validate->add_option("--out", out_path, "output file (default: standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_code::kSuccess;
    } catch (const CLI::ParseError& e) {
        std::string msg = e.what();
        for (auto& ch : msg) {
            if (ch == '\n') ch = ' ';
        }
        err << "error: " << msg << '\n';
        return exit_code::kInvalidInput;
    }

    CLI::App* active = app.get_subcommands().front();
    auto given = [&](const char* name) { return active->count(name) > 0; };
    auto opt = [&](const char* name, double v) -> std::optional<double> {
        if (active->get_option_no_throw(name) != nullptr && given(name)) return v;
        return std::nullopt;
    };
    cfg.r_min = opt("--rmin", r_min);
    cfg.r_max = opt("--rmax", r_max);
    cfg.radius = opt("--r", radius);
    cfg.length = opt("--length", length);
    cfg.mu = opt("--mu", mu);
    cfg.rho = opt("--rho", rho);
    cfg.q = opt("--q", q);
    cfg.p = opt("--p", p);
    if (!out_path.empty()) cfg.out_path = out_path;
    if (active == validate && given("--compare-alpha")) cfg.compare_alpha = compare_alpha;

    auto fail = [&](const std::string& msg) {
        err << "error: " << msg << '\n';
        return exit_code::kInvalidInput;
    };

    if (active == compute) cfg.command = Command::Compute;
    if (active == sweep) cfg.command = Command::Sweep;
    if (active == convergence) cfg.command = Command::Convergence;
    if (active == validate) cfg.command = Command::Validate;

    if (const auto m = parse_flow_model(model_name)) {
        cfg.model = *m;
    } else {
        return fail("unknown model '" + model_name + "'");
    }
    if (format_name == "csv") {
        cfg.format = OutputFormat::Csv;
    } else if (format_name == "json") {
        cfg.format = OutputFormat::Json;
    } else {
        return fail("unknown format '" + format_name + "'");
    }

    if (active == sweep) {
        static const std::map<std::string, SweepAxis> axes = {
            {"q", SweepAxis::Q},           {"r_min", SweepAxis::RMin},
            {"rmin", SweepAxis::RMin},     {"r_max", SweepAxis::RMax},
            {"rmax", SweepAxis::RMax},     {"length", SweepAxis::Length},
            {"alpha", SweepAxis::Alpha}};
        const auto it = axes.find(axis_name);
        if (it == axes.end()) return fail("unknown sweep axis '" + axis_name + "'");
        cfg.axis = it->second;
        const bool ranged = given("--from") || given("--to") || given("--step");
        if (ranged && !cfg.sweep_values.empty()) {
            return fail("give either --values or --from/--to/--step, not both");
        }
        if (ranged) {
            if (!(given("--from") && given("--to") && given("--step"))) {
                return fail("--from, --to and --step must be given together");
            }
            try {
                cfg.sweep_values = arithmetic_range(from, to, step);
            } catch (const Error& e) {
                return fail(e.what());
            }
        }
    }

    if (active == convergence) {
        if (averaging_name == "endpoint") {
            cfg.averaging = RadiusAveraging::EndpointMean;
        } else if (averaging_name == "midpoint") {
            cfg.averaging = RadiusAveraging::Midpoint;
        } else {
            return fail("unknown averaging '" + averaging_name + "'");
        }
        if (given("--n-max")) {
            if (!cfg.element_counts.empty()) return fail("give either --n or --n-max, not both");
            if (n_max == 0) return fail("--n-max must be >= 1");
            cfg.element_counts.resize(n_max);
            std::iota(cfg.element_counts.begin(), cfg.element_counts.end(), std::size_t{1});
        }
    }

    return run(cfg, out, err);
}

}  // namespace capflow::cli
