#include "retailsim/harness/results_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "retailsim/error.hpp"

namespace retailsim {

using nlohmann::json;

namespace {

constexpr int kManifestVersion = 1;

void write_row(std::ostream& out, const std::vector<std::string>& fields)
{
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) {
            out << ',';
        }
        out << fields[i];
    }
    out << '\n';
}

std::ofstream open_for_write(const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    return out;
}

void check_written(std::ofstream& out, const std::filesystem::path& path)
{
    out.flush();
    if (!out) {
        throw std::runtime_error("write failed for " + path.string());
    }
}

} // namespace

std::string format_number(double v)
{
    if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 1e15) {
        return std::to_string(static_cast<long long>(v));
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::vector<std::string> replication_csv_header()
{
    std::vector<std::string> h{"experiment", "level", "level_value", "replication", "seed"};
    for (const KpiColumn& c : kpi_columns()) {
        h.push_back(c.name);
    }
    return h;
}

std::vector<std::string> aggregate_csv_header()
{
    std::vector<std::string> h{"experiment", "level", "level_value", "n"};
    for (const KpiColumn& c : kpi_columns()) {
        h.push_back(c.name + "_mean");
        h.push_back(c.name + "_sd");
        h.push_back(c.name + "_ci95");
    }
    h.push_back("ratio_mean");
    h.push_back("ratio_ci95");
    return h;
}

void write_replication_csv(const ExperimentResult& result, std::ostream& out)
{
    write_row(out, replication_csv_header());
    for (std::size_t l = 0; l < result.levels.size(); ++l) {
        for (std::size_t r = 0; r < result.records[l].size(); ++r) {
            const MetricsRecord& rec = result.records[l][r];
            std::vector<std::string> row{result.name, result.levels[l].label, format_number(result.levels[l].value),
                                         std::to_string(r), std::to_string(rec.seed)};
            for (const KpiColumn& c : kpi_columns()) {
                row.push_back(format_number(c.value(rec)));
            }
            write_row(out, row);
        }
    }
}

void write_aggregate_csv(const ExperimentResult& result, std::ostream& out)
{
    write_row(out, aggregate_csv_header());
    for (std::size_t l = 0; l < result.levels.size(); ++l) {
        std::vector<std::string> row{result.name, result.levels[l].label, format_number(result.levels[l].value),
                                     std::to_string(result.records[l].size())};
        for (const KpiColumn& c : kpi_columns()) {
            const Summary s = result.summary(l, c.name);
            row.push_back(format_number(s.mean));
            row.push_back(format_number(s.sd));
            row.push_back(format_number(s.half_width));
        }
        if (const auto ratio = result.ratio(l)) {
            row.push_back(format_number(ratio->mean));
            row.push_back(format_number(ratio->half_width));
        } else {
            row.emplace_back();
            row.emplace_back();
        }
        write_row(out, row);
    }
}

json manifest(const ExperimentResult& result)
{
    json levels = json::array();
    for (std::size_t l = 0; l < result.levels.size(); ++l) {
        json seeds = json::array();
        for (std::size_t r = 0; r < result.replications; ++r) {
            seeds.push_back(replication_seed(result.levels[l].config.seed, r));
        }
        levels.push_back({{"label", result.levels[l].label},
                          {"value", result.levels[l].value},
                          {"config", to_json(result.levels[l].config)},
                          {"seeds", seeds}});
    }
    json m{{"manifest_version", kManifestVersion},
           {"experiment", result.name},
           {"factor", result.factor},
           {"replications", result.replications},
           {"ratio_kpi", result.ratio_kpi},
           {"levels", levels}};
    m["baseline"] = result.baseline ? json(*result.baseline) : json(nullptr);
    return m;
}

ResultFiles write_results(const ExperimentResult& result, const std::filesystem::path& dir)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
    }
    ResultFiles files{dir / "replications.csv", dir / "aggregate.csv", dir / "manifest.json"};
    {
        auto out = open_for_write(files.replications);
        write_replication_csv(result, out);
        check_written(out, files.replications);
    }
    {
        auto out = open_for_write(files.aggregate);
        write_aggregate_csv(result, out);
        check_written(out, files.aggregate);
    }
    {
        auto out = open_for_write(files.manifest);
        out << manifest(result).dump(2) << '\n';
        check_written(out, files.manifest);
    }
    return files;
}

ExperimentResult rerun_manifest(const json& m, unsigned threads)
{
    std::vector<std::string> problems;
    if (!m.is_object()) {
        throw ConfigError("manifest: not a JSON object");
    }
    for (const char* key : {"experiment", "factor", "replications", "levels"}) {
        if (!m.contains(key)) {
            problems.push_back(std::string("manifest.") + key + ": missing");
        }
    }
    if (!problems.empty()) {
        throw ConfigError(std::move(problems));
    }
    std::vector<FactorLevel> levels;
    for (const json& l : m.at("levels")) {
        levels.push_back({l.at("label").get<std::string>(), l.at("value").get<double>(),
                          scenario_from_json(l.at("config"))});
    }
    auto result = run_experiment(m.at("experiment").get<std::string>(), m.at("factor").get<std::string>(),
                                 std::move(levels), m.at("replications").get<std::size_t>(), threads);
    if (m.contains("baseline") && !m.at("baseline").is_null()) {
        result.baseline = m.at("baseline").get<std::size_t>();
    }
    if (m.contains("ratio_kpi")) {
        result.ratio_kpi = m.at("ratio_kpi").get<std::string>();
    }
    return result;
}

ExperimentResult rerun_manifest(const std::filesystem::path& path, unsigned threads)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read " + path.string());
    }
    json m;
    try {
        m = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
    return rerun_manifest(m, threads);
}

void write_sensitivity_csv(const std::vector<SensitivityRow>& rows, std::ostream& out)
{
    write_row(out, {"parameter", "base_value", "low_value", "high_value", "kpi_low", "kpi_base", "kpi_high",
                    "elasticity", "rank"});
    for (const SensitivityRow& r : rows) {
        write_row(out, {r.parameter, format_number(r.base_value), format_number(r.low_value),
                        format_number(r.high_value), format_number(r.kpi_low), format_number(r.kpi_base),
                        format_number(r.kpi_high), format_number(r.elasticity), std::to_string(r.rank)});
    }
}

std::vector<std::string> split_csv_line(std::string_view line)
{
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        fields.emplace_back(line.substr(start, comma - start));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    if (!fields.empty() && !fields.back().empty() && fields.back().back() == '\r') {
        fields.back().pop_back();
    }
    return fields;
}

void write_plot_data(const std::filesystem::path& aggregate_csv, std::string_view kpi_name, std::ostream& out)
{
    std::ifstream in(aggregate_csv);
    if (!in) {
        throw std::runtime_error("cannot read " + aggregate_csv.string());
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error(aggregate_csv.string() + ": empty file");
    }
    const auto header = split_csv_line(line);
    auto column = [&](const std::string& name) -> std::size_t {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (header[i] == name) {
                return i;
            }
        }
        throw ConfigError(aggregate_csv.string() + ": no column '" + name + "'");
    };
    const std::string k(kpi_name);
    const std::size_t value_col = column("level_value");
    const std::size_t mean_col = column(k + "_mean");
    const std::size_t ci_col = column(k + "_ci95");
    out << "# level_value " << k << "_mean lower upper\n";
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto f = split_csv_line(line);
        const double mean = std::stod(f.at(mean_col));
        const double ci = std::stod(f.at(ci_col));
        out << f.at(value_col) << ' ' << f.at(mean_col) << ' ' << format_number(mean - ci) << ' '
            << format_number(mean + ci) << '\n';
    }
}

} // namespace retailsim
