// retailsim: command-line front end for single runs and the experiment suite.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "retailsim/error.hpp"
#include "retailsim/harness/experiments.hpp"
#include "retailsim/harness/presets.hpp"
#include "retailsim/harness/results_io.hpp"

namespace {

using namespace retailsim;

enum ExitCode { kOk = 0, kFailure = 1, kConfig = 2, kInvariant = 3 };

struct Common {
    std::string scenario;
    std::string preset = "default";
    std::optional<std::uint64_t> seed;
    std::size_t reps = 20;
    std::string out;
    unsigned threads = 0;
};

void add_common(CLI::App* cmd, Common& c, bool with_reps = true)
{
    cmd->add_option("--scenario", c.scenario, "Scenario file (.json or .toml)")->check(CLI::ExistingFile);
    cmd->add_option("--preset", c.preset, "Built-in scenario when --scenario is not given")
        ->check(CLI::IsMember(std::vector<std::string>(preset_names().begin(), preset_names().end())));
    cmd->add_option("--seed", c.seed, "Master seed (overrides the scenario)");
    if (with_reps) {
        cmd->add_option("--reps", c.reps, "Replications per level")->check(CLI::PositiveNumber);
    }
    cmd->add_option("--out", c.out, "Output directory (default: $RETAILSIM_OUT_DIR or ./results)");
    cmd->add_option("--threads", c.threads, "Worker threads, 0 = all cores");
}

ScenarioConfig scenario_of(const Common& c)
{
    ScenarioConfig cfg = c.scenario.empty() ? preset(c.preset) : load_scenario(c.scenario);
    if (c.seed) {
        cfg.seed = *c.seed;
    }
    return cfg;
}

std::string out_dir(const Common& c, const std::string& leaf)
{
    if (!c.out.empty()) {
        return c.out;
    }
    const char* env = std::getenv("RETAILSIM_OUT_DIR");
    const std::string root = env != nullptr && *env != '\0' ? env : "results";
    return root + "/" + leaf;
}

// Console display only; the CSVs keep full precision.
std::string brief(const Summary& s)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g+/-%.3g", s.mean, s.half_width);
    return buf;
}

void report(const ExperimentResult& r, const ResultFiles& files, const std::vector<std::string>& kpis)
{
    for (std::size_t l = 0; l < r.levels.size(); ++l) {
        std::cout << r.levels[l].label;
        for (const auto& k : kpis) {
            const Summary s = r.summary(l, k);
            std::cout << "  " << k << "=" << brief(s);
        }
        if (const auto ratio = r.ratio(l)) {
            std::cout << "  ratio=" << brief(*ratio);
        }
        std::cout << '\n';
    }
    std::cout << "wrote " << files.replications.string() << ", " << files.aggregate.string() << ", "
              << files.manifest.string() << '\n';
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Agent-based retail department simulator"};
    app.require_subcommand(1);

    Common run_opts;
    std::string event_log;
    auto* run = app.add_subcommand("run", "Replicate one scenario");
    add_common(run, run_opts);
    run->add_option("--event-log", event_log, "Write the event log of replication 0 to this file");

    Common exp1_opts;
    int total_staff = 10;
    std::vector<int> cashiers{1, 2, 3, 4, 5, 6, 7};
    auto* exp1 = app.add_subcommand("exp1", "Staff mix: vary cashiers with total front-line staff fixed");
    add_common(exp1, exp1_opts);
    exp1->add_option("--total", total_staff, "Cashiers plus sellers")->check(CLI::NonNegativeNumber);
    exp1->add_option("--cashiers", cashiers, "Cashier counts to try, comma separated")->delimiter(',');

    Common exp2_opts;
    std::vector<double> empowerment{0.0, 0.25, 0.5, 0.75, 1.0};
    auto* exp2 = app.add_subcommand("exp2", "Empowerment: vary the cashier's refund authority");
    add_common(exp2, exp2_opts);
    exp2->add_option("--levels", empowerment, "Empowerment levels, comma separated")->delimiter(',')->check(CLI::Range(0.0, 1.0));

    Common exp3_opts;
    auto* exp3 = app.add_subcommand("exp3", "Customer mix: even mix against each single-type population");
    add_common(exp3, exp3_opts);

    Common sens_opts;
    std::vector<std::string> params;
    double delta = 0.1;
    std::string sens_kpi = "transactions";
    auto* sens = app.add_subcommand("sens", "One-at-a-time sensitivity of a KPI");
    add_common(sens, sens_opts);
    sens->add_option("--params", params, "Parameters to perturb, comma separated (default: all)")->delimiter(',');
    sens->add_option("--delta", delta, "Relative perturbation")->check(CLI::Range(0.0, 0.99));
    sens->add_option("--kpi", sens_kpi, "KPI column to explain");

    std::string manifest_path;
    std::string rerun_out;
    unsigned rerun_threads = 0;
    auto* rerun = app.add_subcommand("rerun", "Repeat an experiment from its manifest");
    rerun->add_option("manifest", manifest_path, "manifest.json")->required()->check(CLI::ExistingFile);
    rerun->add_option("--out", rerun_out, "Output directory")->required();
    rerun->add_option("--threads", rerun_threads, "Worker threads, 0 = all cores");

    std::string aggregate_path;
    std::string plot_kpi = "transactions";
    auto* plot = app.add_subcommand("plot", "Print gnuplot data for one KPI from an aggregate CSV");
    plot->add_option("aggregate", aggregate_path, "aggregate.csv")->required()->check(CLI::ExistingFile);
    plot->add_option("--kpi", plot_kpi, "KPI column");

    Common scen_opts;
    std::string format = "json";
    bool check_only = false;
    auto* scen = app.add_subcommand("scenario", "Print a scenario (after validation) as JSON or TOML");
    add_common(scen, scen_opts, false);
    scen->add_option("--format", format, "json or toml")->check(CLI::IsMember({"json", "toml"}));
    scen->add_flag("--check", check_only, "Only validate; print nothing on success");

    auto* kpis = app.add_subcommand("kpis", "List KPI columns and sensitivity parameters");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            const ScenarioConfig cfg = scenario_of(run_opts);
            if (!event_log.empty()) {
                std::ofstream log(event_log, std::ios::binary);
                if (!log) {
                    throw std::runtime_error("cannot write " + event_log);
                }
                RunOptions opts;
                opts.event_log = &log;
                run_replication(cfg, 0, opts);
            }
            const auto result = run_experiment("run", "none", {{cfg.name, 0.0, cfg}}, run_opts.reps, run_opts.threads);
            report(result, write_results(result, out_dir(run_opts, "run")),
                   {"transactions", "satisfied", "overall_satisfaction"});
        } else if (*exp1) {
            const auto result =
                experiment_staff_mix(scenario_of(exp1_opts), exp1_opts.reps, cashiers, total_staff, exp1_opts.threads);
            report(result, write_results(result, out_dir(exp1_opts, "exp1")),
                   {"transactions", "satisfied", "overall_satisfaction"});
        } else if (*exp2) {
            const auto result = experiment_empowerment(scenario_of(exp2_opts), exp2_opts.reps, empowerment,
                                                       exp2_opts.threads);
            report(result, write_results(result, out_dir(exp2_opts, "exp2")),
                   {"manager_refund_fraction", "refund_satisfaction", "utilization_cashier", "utilization_manager"});
        } else if (*exp3) {
            const auto result =
                experiment_customer_mix(scenario_of(exp3_opts), exp3_opts.reps, standard_mixes(), exp3_opts.threads);
            report(result, write_results(result, out_dir(exp3_opts, "exp3")), {"transactions"});
        } else if (*sens) {
            const auto names = params.empty() ? default_sensitivity_parameters() : params;
            const auto rows =
                sensitivity_sweep(scenario_of(sens_opts), names, delta, sens_opts.reps, sens_kpi, sens_opts.threads);
            const std::filesystem::path dir = out_dir(sens_opts, "sens");
            std::filesystem::create_directories(dir);
            std::ofstream csv(dir / "sensitivity.csv", std::ios::binary);
            if (!csv) {
                throw std::runtime_error("cannot write " + (dir / "sensitivity.csv").string());
            }
            write_sensitivity_csv(rows, csv);
            write_sensitivity_csv(rows, std::cout);
        } else if (*rerun) {
            const auto result = rerun_manifest(std::filesystem::path(manifest_path), rerun_threads);
            report(result, write_results(result, rerun_out), {"transactions"});
        } else if (*plot) {
            write_plot_data(aggregate_path, plot_kpi, std::cout);
        } else if (*scen) {
            const ScenarioConfig cfg = scenario_of(scen_opts);
            if (!check_only) {
                std::cout << (format == "toml" ? to_toml(cfg) : to_json(cfg).dump(2)) << '\n';
            }
        } else if (*kpis) {
            for (const auto& c : kpi_columns()) {
                std::cout << c.name << '\n';
            }
            std::cout << '\n';
            for (const auto& p : sensitivity_parameters()) {
                std::cout << p.name << "  " << p.description << '\n';
            }
        }
    } catch (const ConfigError& e) {
        for (const auto& p : e.problems()) {
            std::cerr << "config error: " << p << '\n';
        }
        return kConfig;
    } catch (const InvariantViolation& e) {
        for (const auto& d : e.diagnostics()) {
            std::cerr << "invariant violated: " << d << '\n';
        }
        return kInvariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kOk;
}
