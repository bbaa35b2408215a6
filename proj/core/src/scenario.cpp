#include "retailsim/harness/scenario.hpp"

#include <algorithm>
#include <cstdint>
#include <cmath>
#include <fstream>
#include <sstream>

#define TOML_EXCEPTIONS 1
#include <toml.hpp>

#include "retailsim/error.hpp"

namespace retailsim {

using nlohmann::json;

namespace {

constexpr std::string_view kDurationNames[] = {"browse",       "decide",  "help_level1",
                                               "help_level2",  "till",    "refund",
                                               "manager_auth", "patience", "resting"};

std::array<TriangularSpec*, 9> duration_fields(Durations& d)
{
    return {&d.browse, &d.decide, &d.help_level1, &d.help_level2, &d.till,
            &d.refund, &d.manager_auth, &d.patience, &d.resting};
}

std::array<const TriangularSpec*, 9> duration_fields(const Durations& d)
{
    return {&d.browse, &d.decide, &d.help_level1, &d.help_level2, &d.till,
            &d.refund, &d.manager_auth, &d.patience, &d.resting};
}

void check_probability(double p, const std::string& path, std::vector<std::string>& problems)
{
    if (!(p >= 0.0 && p <= 1.0)) {
        problems.push_back(path + ": must lie in [0, 1]");
    }
}

} // namespace

std::string format_clock(int minute_of_day)
{
    char buf[16];
    std::snprintf(buf, sizeof buf, "%02d:%02d", minute_of_day / 60, minute_of_day % 60);
    return buf;
}

std::vector<std::string> validate(const ScenarioConfig& c)
{
    std::vector<std::string> problems;

    if (c.calendar.lifespan_weeks() < 1) {
        problems.push_back("calendar.lifespan_weeks: must be >= 1");
    }
    if (!(c.closing_drain_limit > 0.0)) {
        problems.push_back("calendar.closing_drain_limit_minutes: must be positive");
    }
    for (int d = 0; d < kDaysPerWeek; ++d) {
        const DayHours& h = c.calendar.day(d);
        const std::string day(kDayNames[static_cast<std::size_t>(d)]);
        if (h.open && h.closing_minute + c.closing_drain_limit > kMinutesPerDay) {
            problems.push_back("calendar.hours." + day + ": closing plus the drain limit runs past midnight");
        }
        for (int hour = 0; hour < kHoursPerDay; ++hour) {
            const double r = c.footfall.at(d, hour);
            const std::string path = "footfall." + day + "[" + std::to_string(hour) + "]";
            if (!(std::isfinite(r) && r >= 0.0)) {
                problems.push_back(path + ": must be a finite non-negative rate");
                continue;
            }
            const bool overlaps =
                h.open && h.opening_minute < (hour + 1) * 60 && h.closing_minute > hour * 60;
            if (r > 0.0 && !overlaps) {
                problems.push_back(path + ": footfall outside opening hours");
            }
        }
    }

    if (c.pool_size == 0) {
        problems.push_back("pool.size: must be positive");
    }
    double mix_sum = 0.0;
    for (std::size_t t = 0; t < kCustomerTypeCount; ++t) {
        if (!(c.mix[t] >= 0.0)) {
            problems.push_back("pool.mix." + std::string(to_string(static_cast<CustomerType>(t))) +
                               ": must be non-negative");
        }
        mix_sum += c.mix[t];
    }
    if (!(std::abs(mix_sum - 1.0) <= 1e-9)) {
        problems.push_back("pool.mix: proportions sum to " + std::to_string(mix_sum) + ", expected 1");
    }

    check_probability(c.probabilities.conversion_rate, "probabilities.conversion_rate", problems);
    check_probability(c.probabilities.ask_help, "probabilities.ask_help", problems);
    check_probability(c.probabilities.ask_refund, "probabilities.ask_refund", problems);
    check_probability(c.probabilities.regoal, "probabilities.regoal", problems);
    check_probability(c.probabilities.level2_help, "probabilities.level2_help", problems);
    check_probability(c.adjustment.shift, "likelihood_shift", problems);

    const auto specs = duration_fields(c.durations);
    for (std::size_t i = 0; i < specs.size(); ++i) {
        check_triangular(*specs[i], "durations." + std::string(kDurationNames[i]), problems);
    }

    for (StaffRole role : kAllStaffRoles) {
        if (c.staffing.of(role) < 0) {
            problems.push_back("staffing." + std::string(to_string(role)) + "s: must be >= 0");
        }
    }
    check_probability(c.seller_level2_share, "staffing.seller_level2_share", problems);

    check_probability(c.empowerment, "refunds.empowerment", problems);
    if (!(c.refund_threshold > 0.0)) {
        problems.push_back("refunds.threshold: must be positive");
    }
    check_triangular(c.refund_amount, "refunds.amount", problems);
    if (!(c.refund_amount.min > 0.0)) {
        problems.push_back("refunds.amount: minimum must be positive");
    }
    return problems;
}

double worst_case_drain_minutes(const ScenarioConfig& c)
{
    const Durations& d = c.durations;
    const double wait = d.patience.max;
    const double help = std::max(d.help_level1.max, d.help_level2.max);
    const double till = wait + d.till.max;
    const double refund = wait + d.refund.max + wait + d.manager_auth.max;
    return std::max({help, till, refund});
}

// ---------------------------------------------------------------------------
// JSON mapping

namespace {

json spec_json(const TriangularSpec& s)
{
    return json::array({s.min, s.mode, s.max});
}

std::string hours_string(const DayHours& h)
{
    if (!h.open) {
        return "closed";
    }
    return format_clock(h.opening_minute) + "-" + format_clock(h.closing_minute);
}

} // namespace

json to_json(const ScenarioConfig& c)
{
    json doc;
    doc["name"] = c.name;
    doc["seed"] = c.seed;

    json hours = json::object();
    for (int d = 0; d < kDaysPerWeek; ++d) {
        hours[std::string(kDayNames[static_cast<std::size_t>(d)])] = hours_string(c.calendar.day(d));
    }
    doc["calendar"] = {{"lifespan_weeks", c.calendar.lifespan_weeks()},
                       {"closing_drain_limit_minutes", c.closing_drain_limit},
                       {"hours", hours}};

    json mix = json::object();
    for (std::size_t t = 0; t < kCustomerTypeCount; ++t) {
        mix[std::string(to_string(static_cast<CustomerType>(t)))] = c.mix[t];
    }
    doc["pool"] = {{"size", c.pool_size}, {"mix", mix}};

    json footfall = json::object();
    for (int d = 0; d < kDaysPerWeek; ++d) {
        const auto& row = c.footfall.rate[static_cast<std::size_t>(d)];
        footfall[std::string(kDayNames[static_cast<std::size_t>(d)])] = json(std::vector<double>(row.begin(), row.end()));
    }
    doc["footfall"] = footfall;

    doc["probabilities"] = {{"conversion_rate", c.probabilities.conversion_rate},
                            {"ask_help", c.probabilities.ask_help},
                            {"ask_refund", c.probabilities.ask_refund},
                            {"regoal", c.probabilities.regoal},
                            {"level2_help", c.probabilities.level2_help}};
    doc["likelihood_shift"] = c.adjustment.shift;

    json durations = json::object();
    const auto specs = duration_fields(c.durations);
    for (std::size_t i = 0; i < specs.size(); ++i) {
        durations[std::string(kDurationNames[i])] = spec_json(*specs[i]);
    }
    doc["durations"] = durations;

    doc["staffing"] = {{"cashiers", c.staffing.cashiers},
                       {"sellers_level1", c.staffing.sellers_level1},
                       {"sellers_level2", c.staffing.sellers_level2},
                       {"managers", c.staffing.managers},
                       {"seller_level2_share", c.seller_level2_share}};
    doc["refunds"] = {{"empowerment", c.empowerment},
                      {"threshold", c.refund_threshold},
                      {"amount", spec_json(c.refund_amount)}};

    json weights = json::object();
    for (std::size_t e = 0; e < kSatisfactionEventCount; ++e) {
        weights[std::string(kSatisfactionEventNames[e])] = c.weights.weight[e];
    }
    doc["weights"] = weights;
    return doc;
}

namespace {

// Walks a document and records every missing or mistyped field.
class FieldReader {
public:
    explicit FieldReader(std::vector<std::string>& problems) : problems_(problems) {}

    const json* object(const json& parent, const std::string& key, const std::string& path)
    {
        const json* v = find(parent, key, path);
        if (v != nullptr && !v->is_object()) {
            problems_.push_back(path + ": expected a table/object");
            return nullptr;
        }
        return v;
    }

    double number(const json& parent, const std::string& key, const std::string& path, double fallback = 0.0)
    {
        const json* v = find(parent, key, path);
        if (v == nullptr) {
            return fallback;
        }
        if (!v->is_number()) {
            problems_.push_back(path + ": expected a number");
            return fallback;
        }
        return v->get<double>();
    }

    double optional_number(const json& parent, const std::string& key, const std::string& path, double fallback)
    {
        if (!parent.contains(key)) {
            return fallback;
        }
        return number(parent, key, path, fallback);
    }

    long long integer(const json& parent, const std::string& key, const std::string& path)
    {
        const json* v = find(parent, key, path);
        if (v == nullptr) {
            return 0;
        }
        if (!v->is_number_integer()) {
            problems_.push_back(path + ": expected an integer");
            return 0;
        }
        return v->get<long long>();
    }

    TriangularSpec triangular(const json& parent, const std::string& key, const std::string& path)
    {
        const json* v = find(parent, key, path);
        if (v == nullptr) {
            return {};
        }
        if (!v->is_array() || v->size() != 3 || !std::all_of(v->begin(), v->end(), [](const json& x) {
                return x.is_number();
            })) {
            problems_.push_back(path + ": expected [min, mode, max]");
            return {};
        }
        return TriangularSpec{(*v)[0].get<double>(), (*v)[1].get<double>(), (*v)[2].get<double>()};
    }

    const json* find(const json& parent, const std::string& key, const std::string& path)
    {
        if (!parent.is_object() || !parent.contains(key)) {
            problems_.push_back(path + ": missing");
            return nullptr;
        }
        return &parent.at(key);
    }

    void problem(std::string msg) { problems_.push_back(std::move(msg)); }

private:
    std::vector<std::string>& problems_;
};

bool parse_clock(std::string_view s, int& minute)
{
    if (s.size() != 5 || s[2] != ':') {
        return false;
    }
    auto digit = [](char ch) { return ch >= '0' && ch <= '9'; };
    if (!digit(s[0]) || !digit(s[1]) || !digit(s[3]) || !digit(s[4])) {
        return false;
    }
    const int h = (s[0] - '0') * 10 + (s[1] - '0');
    const int m = (s[3] - '0') * 10 + (s[4] - '0');
    if (h > 24 || m > 59 || (h == 24 && m != 0)) {
        return false;
    }
    minute = h * 60 + m;
    return true;
}

bool parse_hours(const std::string& s, DayHours& out)
{
    if (s == "closed") {
        out = DayHours{};
        return true;
    }
    const auto dash = s.find('-');
    if (dash == std::string::npos) {
        return false;
    }
    DayHours h;
    h.open = true;
    if (!parse_clock(std::string_view(s).substr(0, dash), h.opening_minute) ||
        !parse_clock(std::string_view(s).substr(dash + 1), h.closing_minute)) {
        return false;
    }
    out = h;
    return true;
}

} // namespace

ScenarioConfig scenario_from_json(const json& doc)
{
    std::vector<std::string> problems;
    FieldReader rd(problems);
    ScenarioConfig c;

    if (!doc.is_object()) {
        throw ConfigError("scenario: top level must be a table/object");
    }
    if (doc.contains("name")) {
        if (doc["name"].is_string()) {
            c.name = doc["name"].get<std::string>();
        } else {
            rd.problem("name: expected a string");
        }
    }
    if (doc.contains("seed")) {
        const json& s = doc["seed"];
        if (s.is_number_unsigned()) {
            c.seed = s.get<std::uint64_t>();
        } else if (s.is_number_integer() && s.get<long long>() >= 0) {
            c.seed = static_cast<std::uint64_t>(s.get<long long>());
        } else if (s.is_string()) {
            try {
                std::size_t used = 0;
                c.seed = std::stoull(s.get<std::string>(), &used);
                if (used != s.get<std::string>().size()) {
                    rd.problem("seed: not an unsigned integer");
                }
            } catch (const std::exception&) {
                rd.problem("seed: not an unsigned integer");
            }
        } else {
            rd.problem("seed: expected an unsigned integer");
        }
    }

    // calendar
    int weeks = 10;
    std::array<DayHours, kDaysPerWeek> days{};
    if (const json* cal = rd.object(doc, "calendar", "calendar")) {
        weeks = static_cast<int>(rd.integer(*cal, "lifespan_weeks", "calendar.lifespan_weeks"));
        c.closing_drain_limit =
            rd.optional_number(*cal, "closing_drain_limit_minutes", "calendar.closing_drain_limit_minutes", 15.0);
        if (const json* hours = rd.object(*cal, "hours", "calendar.hours")) {
            for (int d = 0; d < kDaysPerWeek; ++d) {
                const std::string day(kDayNames[static_cast<std::size_t>(d)]);
                const std::string path = "calendar.hours." + day;
                const json* v = rd.find(*hours, day, path);
                if (v == nullptr) {
                    continue;
                }
                if (!v->is_string() || !parse_hours(v->get<std::string>(), days[static_cast<std::size_t>(d)])) {
                    rd.problem(path + ": expected \"HH:MM-HH:MM\" or \"closed\"");
                }
            }
        }
    }
    try {
        c.calendar = Calendar(days, weeks);
    } catch (const ConfigError& e) {
        problems.insert(problems.end(), e.problems().begin(), e.problems().end());
    }

    // pool
    if (const json* pool = rd.object(doc, "pool", "pool")) {
        const long long size = rd.integer(*pool, "size", "pool.size");
        if (size < 0) {
            rd.problem("pool.size: must be positive");
        }
        c.pool_size = static_cast<std::size_t>(std::max(0LL, size));
        if (const json* mix = rd.object(*pool, "mix", "pool.mix")) {
            c.mix.fill(0.0);
            for (const auto& [key, value] : mix->items()) {
                const auto type = parse_customer_type(key);
                if (!type) {
                    rd.problem("pool.mix." + key + ": unknown customer type");
                } else if (!value.is_number()) {
                    rd.problem("pool.mix." + key + ": expected a number");
                } else {
                    c.mix[static_cast<std::size_t>(*type)] = value.get<double>();
                }
            }
        }
    }

    // footfall
    if (const json* ff = rd.object(doc, "footfall", "footfall")) {
        for (int d = 0; d < kDaysPerWeek; ++d) {
            const std::string day(kDayNames[static_cast<std::size_t>(d)]);
            const json* row = rd.find(*ff, day, "footfall." + day);
            if (row == nullptr) {
                continue;
            }
            if (!row->is_array() || row->size() != static_cast<std::size_t>(kHoursPerDay)) {
                rd.problem("footfall." + day + ": expected 24 hourly rates");
                continue;
            }
            for (int h = 0; h < kHoursPerDay; ++h) {
                const json& v = (*row)[static_cast<std::size_t>(h)];
                if (!v.is_number()) {
                    rd.problem("footfall." + day + "[" + std::to_string(h) + "]: expected a number");
                    continue;
                }
                c.footfall.rate[static_cast<std::size_t>(d)][static_cast<std::size_t>(h)] = v.get<double>();
            }
        }
    }

    if (const json* p = rd.object(doc, "probabilities", "probabilities")) {
        c.probabilities.conversion_rate = rd.number(*p, "conversion_rate", "probabilities.conversion_rate");
        c.probabilities.ask_help = rd.number(*p, "ask_help", "probabilities.ask_help");
        c.probabilities.ask_refund = rd.number(*p, "ask_refund", "probabilities.ask_refund");
        c.probabilities.regoal = rd.number(*p, "regoal", "probabilities.regoal");
        c.probabilities.level2_help = rd.number(*p, "level2_help", "probabilities.level2_help");
    }
    c.adjustment.shift = rd.optional_number(doc, "likelihood_shift", "likelihood_shift", 0.5);

    if (const json* d = rd.object(doc, "durations", "durations")) {
        auto specs = duration_fields(c.durations);
        for (std::size_t i = 0; i < specs.size(); ++i) {
            const std::string key(kDurationNames[i]);
            *specs[i] = rd.triangular(*d, key, "durations." + key);
        }
    }

    if (const json* s = rd.object(doc, "staffing", "staffing")) {
        c.staffing.cashiers = static_cast<int>(rd.integer(*s, "cashiers", "staffing.cashiers"));
        c.staffing.sellers_level1 = static_cast<int>(rd.integer(*s, "sellers_level1", "staffing.sellers_level1"));
        c.staffing.sellers_level2 = static_cast<int>(rd.integer(*s, "sellers_level2", "staffing.sellers_level2"));
        c.staffing.managers = static_cast<int>(rd.integer(*s, "managers", "staffing.managers"));
        c.seller_level2_share =
            rd.optional_number(*s, "seller_level2_share", "staffing.seller_level2_share", 0.5);
    }

    if (const json* r = rd.object(doc, "refunds", "refunds")) {
        c.empowerment = rd.number(*r, "empowerment", "refunds.empowerment");
        c.refund_threshold = rd.number(*r, "threshold", "refunds.threshold");
        c.refund_amount = rd.triangular(*r, "amount", "refunds.amount");
    }

    if (const json* w = rd.object(doc, "weights", "weights")) {
        for (std::size_t e = 0; e < kSatisfactionEventCount; ++e) {
            const std::string key(kSatisfactionEventNames[e]);
            c.weights.weight[e] = static_cast<int>(rd.integer(*w, key, "weights." + key));
        }
        for (const auto& [key, value] : w->items()) {
            if (!parse_satisfaction_event(key)) {
                rd.problem("weights." + key + ": unknown event kind");
            }
        }
    }

    if (problems.empty()) {
        problems = validate(c);
    }
    if (!problems.empty()) {
        throw ConfigError(std::move(problems));
    }
    return c;
}

namespace {

json toml_to_json(const toml::node& node)
{
    if (const auto* t = node.as_table()) {
        json obj = json::object();
        for (const auto& [k, v] : *t) {
            obj[std::string(k.str())] = toml_to_json(v);
        }
        return obj;
    }
    if (const auto* a = node.as_array()) {
        json arr = json::array();
        for (const auto& v : *a) {
            arr.push_back(toml_to_json(v));
        }
        return arr;
    }
    if (const auto* v = node.as_integer()) {
        return json(v->get());
    }
    if (const auto* v = node.as_floating_point()) {
        return json(v->get());
    }
    if (const auto* v = node.as_boolean()) {
        return json(v->get());
    }
    if (const auto* v = node.as_string()) {
        return json(v->get());
    }
    throw ConfigError("scenario: unsupported TOML value (dates and times are not used)");
}

} // namespace

namespace {

void append_toml(toml::table& tbl, const std::string& key, const json& v);

toml::array json_to_toml_array(const json& arr)
{
    toml::array out;
    for (const json& v : arr) {
        if (v.is_array()) {
            out.push_back(json_to_toml_array(v));
        } else if (v.is_number_integer()) {
            out.push_back(v.get<std::int64_t>());
        } else if (v.is_number()) {
            out.push_back(v.get<double>());
        } else if (v.is_boolean()) {
            out.push_back(v.get<bool>());
        } else {
            out.push_back(v.get<std::string>());
        }
    }
    return out;
}

toml::table json_to_toml_table(const json& obj)
{
    toml::table tbl;
    for (const auto& [k, v] : obj.items()) {
        append_toml(tbl, k, v);
    }
    return tbl;
}

void append_toml(toml::table& tbl, const std::string& key, const json& v)
{
    if (v.is_object()) {
        tbl.insert(key, json_to_toml_table(v));
    } else if (v.is_array()) {
        tbl.insert(key, json_to_toml_array(v));
    } else if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
        tbl.insert(key, std::to_string(v.get<std::uint64_t>())); // TOML integers are signed 64-bit
    } else if (v.is_number_integer()) {
        tbl.insert(key, v.get<std::int64_t>());
    } else if (v.is_number()) {
        tbl.insert(key, v.get<double>());
    } else if (v.is_boolean()) {
        tbl.insert(key, v.get<bool>());
    } else {
        tbl.insert(key, v.get<std::string>());
    }
}

} // namespace

std::string to_toml(const ScenarioConfig& config)
{
    std::ostringstream out;
    out << toml::toml_formatter(json_to_toml_table(to_json(config)));
    return out.str();
}

ScenarioConfig parse_scenario(std::string_view text, ScenarioFormat format)
{
    if (format == ScenarioFormat::Json) {
        json doc;
        try {
            doc = json::parse(text);
        } catch (const json::parse_error& e) {
            throw ConfigError(std::string("scenario: malformed JSON: ") + e.what());
        }
        return scenario_from_json(doc);
    }
    try {
        const toml::table tbl = toml::parse(text);
        return scenario_from_json(toml_to_json(tbl));
    } catch (const toml::parse_error& e) {
        std::ostringstream msg;
        msg << "scenario: malformed TOML: " << e.description() << " at " << e.source().begin;
        throw ConfigError(msg.str());
    }
}

ScenarioConfig load_scenario(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError(path.string() + ": cannot open scenario file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    const auto format = path.extension() == ".toml" ? ScenarioFormat::Toml : ScenarioFormat::Json;
    try {
        return parse_scenario(buf.str(), format);
    } catch (const ConfigError& e) {
        std::vector<std::string> problems;
        for (const auto& p : e.problems()) {
            problems.push_back(path.filename().string() + ": " + p);
        }
        throw ConfigError(std::move(problems));
    }
}

} // namespace retailsim
