#include "retailsim/harness/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "retailsim/engine/rng.hpp"
#include "retailsim/error.hpp"

namespace retailsim {

std::uint64_t replication_seed(std::uint64_t master_seed, std::size_t rep) noexcept
{
    return derive_seed(master_seed, static_cast<std::uint64_t>(rep));
}

MetricsRecord run_replication(const ScenarioConfig& config, std::size_t rep, RunOptions options)
{
    Department dept(config, replication_seed(config.seed, rep), std::move(options));
    return dept.run();
}

std::vector<double> ExperimentResult::values(std::size_t level, std::string_view kpi_name) const
{
    const KpiColumn& col = kpi(kpi_name);
    std::vector<double> out;
    out.reserve(records.at(level).size());
    for (const MetricsRecord& r : records.at(level)) {
        out.push_back(col.value(r));
    }
    return out;
}

Summary ExperimentResult::summary(std::size_t level, std::string_view kpi_name, double confidence) const
{
    return summarize(values(level, kpi_name), confidence);
}

std::optional<Summary> ExperimentResult::ratio(std::size_t level, double confidence) const
{
    if (!baseline) {
        return std::nullopt;
    }
    const auto num = values(level, ratio_kpi);
    const auto den = values(*baseline, ratio_kpi);
    std::vector<double> r;
    for (std::size_t i = 0; i < num.size() && i < den.size(); ++i) {
        r.push_back(den[i] == 0.0 ? 0.0 : num[i] / den[i]);
    }
    return summarize(r, confidence);
}

ExperimentResult run_experiment(std::string name, std::string factor, std::vector<FactorLevel> levels,
                                std::size_t replications, unsigned threads)
{
    ExperimentResult result;
    result.name = std::move(name);
    result.factor = std::move(factor);
    result.replications = replications;
    result.levels = std::move(levels);
    result.records.assign(result.levels.size(), std::vector<MetricsRecord>(replications));

    std::vector<std::string> problems;
    for (const FactorLevel& level : result.levels) {
        for (const std::string& p : validate(level.config)) {
            problems.push_back("level " + level.label + ": " + p);
        }
    }
    if (!problems.empty()) {
        throw ConfigError(std::move(problems));
    }

    const std::size_t jobs = result.levels.size() * replications;
    if (threads == 0) {
        threads = std::max(1U, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(jobs, 1)));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t job = next++; job < jobs; job = next++) {
            const std::size_t level = job / replications;
            const std::size_t rep = job % replications;
            try {
                result.records[level][rep] = run_replication(result.levels[level].config, rep);
            } catch (...) {
                const std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next = jobs;
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return result;
}

StaffCounts staff_mix(const StaffCounts& base, int cashiers, int total, double level2_share)
{
    if (cashiers < 0 || cashiers > total) {
        throw ConfigError("staff mix: cashiers must lie in [0, " + std::to_string(total) + "]");
    }
    const int sellers = total - cashiers;
    const int level2 = static_cast<int>(std::floor(sellers * level2_share + 1e-9));
    return {cashiers, sellers - level2, level2, base.managers};
}

ExperimentResult experiment_staff_mix(const ScenarioConfig& base, std::size_t replications, std::vector<int> cashiers,
                                      int total, unsigned threads)
{
    std::vector<FactorLevel> levels;
    for (int c : cashiers) {
        ScenarioConfig cfg = base;
        cfg.staffing = staff_mix(base.staffing, c, total, base.seller_level2_share);
        levels.push_back({"cashiers=" + std::to_string(c), static_cast<double>(c), std::move(cfg)});
    }
    return run_experiment("exp1", "cashiers", std::move(levels), replications, threads);
}

ExperimentResult experiment_empowerment(const ScenarioConfig& base, std::size_t replications,
                                        std::vector<double> empowerment, unsigned threads)
{
    std::vector<FactorLevel> levels;
    for (double e : empowerment) {
        ScenarioConfig cfg = base;
        cfg.empowerment = e;
        char label[32];
        std::snprintf(label, sizeof label, "empowerment=%g", e);
        levels.push_back({label, e, std::move(cfg)});
    }
    return run_experiment("exp2", "empowerment", std::move(levels), replications, threads);
}

std::vector<NamedMix> standard_mixes()
{
    std::vector<NamedMix> mixes{{"even", even_mix()}};
    for (std::size_t t = 0; t < kCustomerTypeCount; ++t) {
        const auto type = static_cast<CustomerType>(t);
        mixes.push_back({std::string(to_string(type)), single_type_mix(type)});
    }
    return mixes;
}

ExperimentResult experiment_customer_mix(const ScenarioConfig& base, std::size_t replications,
                                         std::vector<NamedMix> mixes, unsigned threads)
{
    if (mixes.empty()) {
        throw ConfigError("customer mix experiment needs at least one mix");
    }
    std::vector<FactorLevel> levels;
    for (std::size_t i = 0; i < mixes.size(); ++i) {
        ScenarioConfig cfg = base;
        cfg.mix = mixes[i].mix;
        levels.push_back({mixes[i].label, static_cast<double>(i), std::move(cfg)});
    }
    auto result = run_experiment("exp3", "customer_mix", std::move(levels), replications, threads);
    result.baseline = 0;
    return result;
}

// --- config diff ---------------------------------------------------------------

std::vector<std::string> config_diff(const ScenarioConfig& a, const ScenarioConfig& b)
{
    std::vector<std::string> paths;
    for (const auto& op : nlohmann::json::diff(to_json(a), to_json(b))) {
        paths.push_back(op.at("path").get<std::string>());
    }
    return paths;
}

std::vector<std::string> factor_paths(std::string_view factor)
{
    if (factor == "cashiers") {
        return {"/staffing/cashiers", "/staffing/sellers_level1", "/staffing/sellers_level2"};
    }
    if (factor == "empowerment") {
        return {"/refunds/empowerment"};
    }
    if (factor == "customer_mix") {
        return {"/pool/mix"};
    }
    if (factor == "none") {
        return {};
    }
    // Sensitivity levels may touch anything a single parameter maps to.
    return {"/"};
}

std::vector<std::string> audit_factor_isolation(const ExperimentResult& result, const ScenarioConfig& base)
{
    const auto allowed = factor_paths(result.factor);
    std::vector<std::string> stray;
    for (const FactorLevel& level : result.levels) {
        for (const std::string& path : config_diff(base, level.config)) {
            const bool ok = path == "/name" || std::any_of(allowed.begin(), allowed.end(), [&](const std::string& p) {
                                return path.compare(0, p.size(), p) == 0;
                            });
            if (!ok) {
                stray.push_back(level.label + ": " + path);
            }
        }
    }
    return stray;
}

// --- sensitivity ---------------------------------------------------------------

namespace {

void scale_spec(TriangularSpec& s, double f)
{
    s = {s.min * f, s.mode * f, s.max * f};
}

constexpr double kNoLimit = 1e300;

} // namespace

const std::vector<SensitivityParameter>& sensitivity_parameters()
{
    // Scale-type parameters read 1 and multiply the underlying values.
    static const std::vector<SensitivityParameter> params{
        {"conversion_rate", "base purchase probability",
         [](const ScenarioConfig& c) { return c.probabilities.conversion_rate; },
         [](ScenarioConfig& c, double v) { c.probabilities.conversion_rate = v; }, 0.0, 1.0},
        {"ask_help", "base probability of asking for help",
         [](const ScenarioConfig& c) { return c.probabilities.ask_help; },
         [](ScenarioConfig& c, double v) { c.probabilities.ask_help = v; }, 0.0, 1.0},
        {"ask_refund", "base probability of a refund visit",
         [](const ScenarioConfig& c) { return c.probabilities.ask_refund; },
         [](ScenarioConfig& c, double v) { c.probabilities.ask_refund = v; }, 0.0, 1.0},
        {"regoal", "probability a refund turns into a purchase visit",
         [](const ScenarioConfig& c) { return c.probabilities.regoal; },
         [](ScenarioConfig& c, double v) { c.probabilities.regoal = v; }, 0.0, 1.0},
        {"level2_help", "share of help requests needing level 2",
         [](const ScenarioConfig& c) { return c.probabilities.level2_help; },
         [](ScenarioConfig& c, double v) { c.probabilities.level2_help = v; }, 0.0, 1.0},
        {"likelihood_shift", "strength of the low/high likelihood adjustment",
         [](const ScenarioConfig& c) { return c.adjustment.shift; },
         [](ScenarioConfig& c, double v) { c.adjustment.shift = v; }, 0.0, 1.0},
        {"empowerment", "probability a cashier settles a small refund",
         [](const ScenarioConfig& c) { return c.empowerment; }, [](ScenarioConfig& c, double v) { c.empowerment = v; },
         0.0, 1.0},
        {"refund_threshold", "refund amount above which a manager is needed",
         [](const ScenarioConfig& c) { return c.refund_threshold; },
         [](ScenarioConfig& c, double v) { c.refund_threshold = v; }, 1e-9, kNoLimit},
        {"footfall", "scale on every hourly arrival rate", [](const ScenarioConfig&) { return 1.0; },
         [](ScenarioConfig& c, double v) { c.footfall = c.footfall.scaled(v); }, 0.0, kNoLimit},
        {"pool_size", "number of potential customers",
         [](const ScenarioConfig& c) { return static_cast<double>(c.pool_size); },
         [](ScenarioConfig& c, double v) { c.pool_size = static_cast<std::size_t>(std::llround(v)); }, 1.0, kNoLimit},
        {"browse_time", "scale on browsing durations", [](const ScenarioConfig&) { return 1.0; },
         [](ScenarioConfig& c, double v) { scale_spec(c.durations.browse, v); }, 0.0, kNoLimit},
        {"help_time", "scale on both help durations", [](const ScenarioConfig&) { return 1.0; },
         [](ScenarioConfig& c, double v) {
             scale_spec(c.durations.help_level1, v);
             scale_spec(c.durations.help_level2, v);
         },
         0.0, kNoLimit},
        {"till_time", "scale on till service durations", [](const ScenarioConfig&) { return 1.0; },
         [](ScenarioConfig& c, double v) { scale_spec(c.durations.till, v); }, 0.0, kNoLimit},
        {"patience", "scale on queue patience", [](const ScenarioConfig&) { return 1.0; },
         [](ScenarioConfig& c, double v) { scale_spec(c.durations.patience, v); }, 0.0, kNoLimit},
        {"resting", "scale on the resting period between visits", [](const ScenarioConfig&) { return 1.0; },
         [](ScenarioConfig& c, double v) { scale_spec(c.durations.resting, v); }, 0.0, kNoLimit},
    };
    return params;
}

std::vector<std::string> default_sensitivity_parameters()
{
    std::vector<std::string> names;
    for (const auto& p : sensitivity_parameters()) {
        names.push_back(p.name);
    }
    return names;
}

std::vector<SensitivityRow> sensitivity_sweep(const ScenarioConfig& base, const std::vector<std::string>& parameters,
                                              double delta, std::size_t replications, std::string_view kpi_name,
                                              unsigned threads)
{
    std::vector<std::string> problems;
    std::vector<const SensitivityParameter*> chosen;
    for (const std::string& name : parameters) {
        const auto& all = sensitivity_parameters();
        const auto it = std::find_if(all.begin(), all.end(), [&](const auto& p) { return p.name == name; });
        if (it == all.end()) {
            problems.push_back("sensitivity: unknown parameter '" + name + "'");
        } else {
            chosen.push_back(&*it);
        }
    }
    if (!(delta >= 0.0 && delta < 1.0)) {
        problems.push_back("sensitivity: delta must lie in [0, 1)");
    }
    if (!problems.empty()) {
        throw ConfigError(std::move(problems));
    }
    (void)kpi(kpi_name); // throws on an unknown KPI

    std::vector<FactorLevel> levels{{"base", 0.0, base}};
    std::vector<SensitivityRow> rows;
    for (const SensitivityParameter* p : chosen) {
        SensitivityRow row;
        row.parameter = p->name;
        row.base_value = p->get(base);
        row.low_value = std::clamp(row.base_value * (1.0 - delta), p->lo, p->hi);
        row.high_value = std::clamp(row.base_value * (1.0 + delta), p->lo, p->hi);
        ScenarioConfig lo = base;
        ScenarioConfig hi = base;
        // Scale-type parameters read 1, so set() receives the factor directly.
        p->set(lo, row.low_value);
        p->set(hi, row.high_value);
        levels.push_back({p->name + "-", row.low_value, std::move(lo)});
        levels.push_back({p->name + "+", row.high_value, std::move(hi)});
        rows.push_back(row);
    }
    const auto result = run_experiment("sens", "sensitivity", std::move(levels), replications, threads);

    const double k0 = result.summary(0, kpi_name).mean;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        SensitivityRow& row = rows[i];
        row.kpi_base = k0;
        row.kpi_low = result.summary(1 + 2 * i, kpi_name).mean;
        row.kpi_high = result.summary(2 + 2 * i, kpi_name).mean;
        const double dp = row.high_value - row.low_value;
        if (dp > 0.0 && row.base_value != 0.0 && k0 != 0.0) {
            row.elasticity = ((row.kpi_high - row.kpi_low) / k0) / (dp / row.base_value);
        }
    }
    std::vector<std::size_t> order(rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::abs(rows[a].elasticity) > std::abs(rows[b].elasticity);
    });
    for (std::size_t r = 0; r < order.size(); ++r) {
        rows[order[r]].rank = r + 1;
    }
    return rows;
}

} // namespace retailsim
