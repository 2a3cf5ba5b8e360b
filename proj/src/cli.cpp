#include "acps/cli.hpp"

#include <cmath>
#include <filesystem>
#include <future>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"

#include "acps/acps_solver.hpp"
#include "acps/conformable_audit.hpp"
#include "acps/csv.hpp"
#include "acps/errors.hpp"
#include "acps/metrics.hpp"
#include "acps/models.hpp"
#include "acps/reference_rk4.hpp"
#include "acps/special_fn.hpp"

namespace acps::cli {
namespace {

namespace fs = std::filesystem;
using csv::format_number;

/// Thrown for flag combinations CLI11 cannot reject on its own.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ModelOptions {
    std::string model = "sir";
    std::optional<double> p1;
    std::optional<double> p2;
    std::vector<double> initial;
};

void add_model_options(CLI::App& cmd, ModelOptions& opts) {
    cmd.add_option("--model", opts.model, "Builtin model name (sir) or path to a model JSON file")
        ->capture_default_str();
    cmd.add_option("--p1", opts.p1, "SIR infection rate (builtin sir only)");
    cmd.add_option("--p2", opts.p2, "SIR recovery rate (builtin sir only)");
    cmd.add_option("--initial", opts.initial, "Override the initial state")->delimiter(',');
}

ModelSpec resolve_model(const ModelOptions& opts) {
    ModelSpec spec;
    if (opts.model == "sir") {
        spec = sir_model(opts.p1.value_or(kSirInfectionRate), opts.p2.value_or(kSirRecoveryRate));
    } else {
        if (opts.p1 || opts.p2) {
            throw UsageError("--p1/--p2 only apply to the builtin sir model");
        }
        spec = load_model_file(opts.model);
    }
    if (!opts.initial.empty()) {
        spec.initial = opts.initial;
    }
    validate_model(spec);
    return spec;
}

void apply_alpha(ModelSpec& spec, std::optional<double> alpha) {
    if (alpha) {
        spec.alpha = *alpha;
    }
    validate_model(spec);
}

std::vector<double> uniform_times(double t0, double t_end, std::size_t samples) {
    std::vector<double> times(samples + 1);
    const double span = t_end - t0;
    for (std::size_t k = 0; k <= samples; ++k) {
        times[k] = k == samples ? t_end
                                : t0 + span * static_cast<double>(k) / static_cast<double>(samples);
    }
    return times;
}

void check_interval(double t0, double t_end, std::size_t samples) {
    if (!(t_end > t0)) {
        throw UsageError("--t-end must be greater than the model t0");
    }
    if (samples == 0) {
        throw UsageError("--samples must be at least 1");
    }
}

fs::path prepare_out_dir(const std::string& dir) {
    fs::path p(dir);
    fs::create_directories(p);
    return p;
}

// ---- solve -----------------------------------------------------------------

struct SolveOptions {
    ModelOptions model;
    std::optional<double> alpha;
    std::size_t degree = 9;
    double t_end = 1.0;
    std::size_t samples = 10;
    std::string out_dir = ".";
    bool paper_form = false;
};

int cmd_solve(const SolveOptions& o, std::ostream& out) {
    ModelSpec spec = resolve_model(o.model);
    apply_alpha(spec, o.alpha);
    check_interval(spec.t0, o.t_end, o.samples);
    const AcpsSolution sol = solve(to_problem(spec, o.degree));

    const fs::path dir = prepare_out_dir(o.out_dir);
    csv::Row header = {"variable", "index", "coefficient"};
    if (o.paper_form) {
        header.push_back("gamma_scaled");
    }
    std::vector<csv::Row> coeff_rows;
    for (std::size_t j = 0; j < sol.series.size(); ++j) {
        const auto c = sol.series[j].coeffs();
        for (std::size_t i = 0; i < c.size(); ++i) {
            csv::Row row = {spec.variable_names[j], std::to_string(i), format_number(c[i])};
            if (o.paper_form) {
                // c_i * Gamma(i alpha + 1): the numerator when written over Gamma(1 + i alpha).
                row.push_back(format_number(c[i] * gamma(static_cast<double>(i) * spec.alpha + 1.0)));
            }
            coeff_rows.push_back(std::move(row));
        }
    }
    csv::write_file(dir / "coefficients.csv", header, coeff_rows);

    csv::Row sample_header = {"t"};
    sample_header.insert(sample_header.end(), spec.variable_names.begin(), spec.variable_names.end());
    std::vector<csv::Row> sample_rows;
    for (double t : uniform_times(spec.t0, o.t_end, o.samples)) {
        csv::Row row = {format_number(t)};
        for (const auto& s : sol.series) {
            row.push_back(format_number(evaluate(s, t)));
        }
        sample_rows.push_back(std::move(row));
    }
    csv::write_file(dir / "samples.csv", sample_header, sample_rows);

    out << "wrote " << (dir / "coefficients.csv").string() << "\n"
        << "wrote " << (dir / "samples.csv").string() << "\n";
    return kExitOk;
}

// ---- sweep -----------------------------------------------------------------

struct SweepOptions {
    ModelOptions model;
    std::vector<double> alphas;
    std::size_t degree = 9;
    double t_end = 1.0;
    std::size_t samples = 10;
    std::string out_dir = ".";
};

int cmd_sweep(const SweepOptions& o, std::ostream& out) {
    const ModelSpec base = resolve_model(o.model);
    check_interval(base.t0, o.t_end, o.samples);

    std::vector<AcpsProblem> problems;
    for (double a : o.alphas) {
        ModelSpec spec = base;
        apply_alpha(spec, a);
        problems.push_back(to_problem(spec, o.degree));
    }
    // Independent solves; results are collected in flag order.
    std::vector<std::future<AcpsSolution>> pending;
    for (const auto& p : problems) {
        pending.push_back(std::async(std::launch::async, [&p] { return solve(p); }));
    }
    std::vector<AcpsSolution> solutions;
    for (auto& f : pending) {
        solutions.push_back(f.get());
    }

    const fs::path dir = prepare_out_dir(o.out_dir);
    const auto times = uniform_times(base.t0, o.t_end, o.samples);
    csv::Row header = {"t"};
    for (double a : o.alphas) {
        header.push_back("alpha_" + format_number(a));
    }
    for (std::size_t j = 0; j < base.variable_names.size(); ++j) {
        std::vector<csv::Row> rows;
        for (double t : times) {
            csv::Row row = {format_number(t)};
            for (const auto& sol : solutions) {
                row.push_back(format_number(evaluate(sol.series[j], t)));
            }
            rows.push_back(std::move(row));
        }
        const fs::path file = dir / ("sweep_" + base.variable_names[j] + ".csv");
        csv::write_file(file, header, rows);
        out << "wrote " << file.string() << "\n";
    }
    return kExitOk;
}

// ---- compare ---------------------------------------------------------------

struct CompareOptions {
    ModelOptions model;
    std::optional<double> alpha;
    std::size_t degree = 9;
    double rk_step = 1e-4;
    std::string reference = "rk4";
    std::string out_dir = ".";
};

int cmd_compare(const CompareOptions& o, std::ostream& out, std::ostream& err) {
    ModelSpec spec = resolve_model(o.model);
    const double alpha = o.alpha.value_or(spec.alpha);
    if (alpha != 1.0) {
        err << "error: compare requires --alpha 1\n";
        return kExitRuntime;
    }
    apply_alpha(spec, alpha);
    const AcpsProblem problem = to_problem(spec, o.degree);
    const AcpsSolution sol = solve(problem);
    const auto times = default_sample_times(spec.t0);

    Trajectory reference;
    if (o.reference == "rk4") {
        const double spacing = times[1] - times[0];
        const double per_sample = std::round(spacing / o.rk_step);
        if (!(o.rk_step > 0.0) || per_sample < 1.0 ||
            std::abs(per_sample * o.rk_step - spacing) > 1e-12) {
            throw DomainError("--rk-step must divide the sample spacing 0.1");
        }
        reference = rk4_integrate(problem.field, spec.initial, spec.t0, times.back(), o.rk_step,
                                  static_cast<std::size_t>(per_sample));
    } else {
        for (double t : times) {
            std::vector<double> state;
            for (const auto& s : sol.series) {
                state.push_back(evaluate(s, t));
            }
            reference.times.push_back(t);
            reference.states.push_back(std::move(state));
        }
    }

    const fs::path dir = prepare_out_dir(o.out_dir);
    for (std::size_t j = 0; j < spec.variable_names.size(); ++j) {
        const ErrorTable table =
            comparison_table(reference, sol.series, j, times, spec.variable_names[j]);
        std::vector<csv::Row> rows;
        for (const ErrorRow& r : table.rows) {
            rows.push_back({format_number(r.t), format_number(r.reference),
                            format_number(r.approximation), format_number(r.absolute_error),
                            format_number(r.relative_error)});
        }
        const fs::path file = dir / ("compare_" + spec.variable_names[j] + ".csv");
        csv::write_file(file, {"t", "reference", "acps", "abs_err", "rel_err"}, rows);
        out << "wrote " << file.string() << "\n";
    }
    return kExitOk;
}

// ---- conformable -----------------------------------------------------------

struct ConformableOptions {
    double beta = 0.0;
    double alpha = 0.0;
    std::string out_dir = ".";
};

int cmd_conformable(const ConformableOptions& o, std::ostream& out) {
    const DiscrepancyReport r = discrepancy_report(o.beta, o.alpha);
    const fs::path dir = prepare_out_dir(o.out_dir);
    const fs::path file = dir / "conformable.csv";
    csv::write_file(file, {"field", "value"},
                    {
                        {"alpha", format_number(r.alpha)},
                        {"beta", format_number(r.beta_exp)},
                        {"m", std::to_string(r.m)},
                        {"caputo_coefficient", format_number(r.caputo_coefficient)},
                        {"conformable_coefficient", format_number(r.conformable_coefficient)},
                        {"ratio", format_number(r.ratio)},
                    });
    out << "wrote " << file.string() << "\n";
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Correctional power-series solver for Caputo fractional ODE systems", "acps"};
    app.require_subcommand(1);

    SolveOptions solve_opts;
    auto* solve_cmd = app.add_subcommand("solve", "Series coefficients and sampled solution");
    add_model_options(*solve_cmd, solve_opts.model);
    solve_cmd->add_option("--alpha", solve_opts.alpha, "Fractional order in (0,1]");
    solve_cmd->add_option("--degree", solve_opts.degree, "Series degree n")->capture_default_str();
    solve_cmd->add_option("--t-end", solve_opts.t_end, "End of the sampling interval")
        ->capture_default_str();
    solve_cmd->add_option("--samples", solve_opts.samples, "Number of sampling intervals")
        ->capture_default_str();
    solve_cmd->add_option("--out-dir", solve_opts.out_dir)->capture_default_str();
    solve_cmd->add_flag("--paper-form", solve_opts.paper_form,
                        "Add a column with c_i * Gamma(i alpha + 1)");

    SweepOptions sweep_opts;
    auto* sweep_cmd = app.add_subcommand("sweep", "Sampled solutions for several fractional orders");
    add_model_options(*sweep_cmd, sweep_opts.model);
    sweep_cmd->add_option("--alpha", sweep_opts.alphas, "Fractional order (repeatable)")
        ->required()
        ->take_all()
        ->allow_extra_args(false);
    sweep_cmd->add_option("--degree", sweep_opts.degree)->capture_default_str();
    sweep_cmd->add_option("--t-end", sweep_opts.t_end)->capture_default_str();
    sweep_cmd->add_option("--samples", sweep_opts.samples)->capture_default_str();
    sweep_cmd->add_option("--out-dir", sweep_opts.out_dir)->capture_default_str();

    CompareOptions compare_opts;
    auto* compare_cmd = app.add_subcommand("compare", "Error tables against an RK4 reference (alpha = 1)");
    add_model_options(*compare_cmd, compare_opts.model);
    compare_cmd->add_option("--alpha", compare_opts.alpha, "Must be 1");
    compare_cmd->add_option("--degree", compare_opts.degree)->capture_default_str();
    compare_cmd->add_option("--rk-step", compare_opts.rk_step)->capture_default_str();
    compare_cmd->add_option("--reference", compare_opts.reference)
        ->check(CLI::IsMember({"rk4", "acps"}))
        ->capture_default_str();
    compare_cmd->add_option("--out-dir", compare_opts.out_dir)->capture_default_str();

    ConformableOptions conf_opts;
    auto* conf_cmd = app.add_subcommand("conformable", "Caputo vs conformable power-rule constants");
    conf_cmd->add_option("--beta", conf_opts.beta, "Exponent of (t - t0)^beta")->required();
    conf_cmd->add_option("--alpha", conf_opts.alpha, "Derivative order")->required();
    conf_cmd->add_option("--out-dir", conf_opts.out_dir)->capture_default_str();

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("acps");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*solve_cmd) {
            return cmd_solve(solve_opts, out);
        }
        if (*sweep_cmd) {
            return cmd_sweep(sweep_opts, out);
        }
        if (*compare_cmd) {
            return cmd_compare(compare_opts, out, err);
        }
        if (*conf_cmd) {
            return cmd_conformable(conf_opts, out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}

}  // namespace acps::cli
