#include "luckgrid/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <string_view>

namespace luckgrid {

ConfigError::ConfigError(int line_no, const std::string& message)
    : std::runtime_error("line " + std::to_string(line_no) + ": " + message),
      line(line_no) {}

namespace {

std::string trim(std::string_view s) {
    const char* ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(ws);
    return std::string(s.substr(b, e - b + 1));
}

int parse_int(const std::string& v) {
    std::size_t pos = 0;
    long long out = 0;
    try {
        out = std::stoll(v, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("expected an integer, got '" + v + "'");
    }
    if (pos != v.size())
        throw std::invalid_argument("expected an integer, got '" + v + "'");
    if (out < std::numeric_limits<int>::min() || out > std::numeric_limits<int>::max())
        throw std::invalid_argument("integer out of range: '" + v + "'");
    return static_cast<int>(out);
}

double parse_double(const std::string& v) {
    std::size_t pos = 0;
    double out = 0.0;
    try {
        out = std::stod(v, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("expected a number, got '" + v + "'");
    }
    if (pos != v.size() || !std::isfinite(out))
        throw std::invalid_argument("expected a finite number, got '" + v + "'");
    return out;
}

std::uint64_t parse_seed(const std::string& v) {
    if (!v.empty() && v[0] == '-')
        throw std::invalid_argument("seed must be non-negative, got '" + v + "'");
    std::size_t pos = 0;
    std::uint64_t out = 0;
    try {
        out = std::stoull(v, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("expected an unsigned integer, got '" + v + "'");
    }
    if (pos != v.size())
        throw std::invalid_argument("expected an unsigned integer, got '" + v + "'");
    return out;
}

using Setter = void (*)(SimParams&, const std::string&);

const std::map<std::string, Setter, std::less<>>& setters() {
    static const std::map<std::string, Setter, std::less<>> table = {
        {"n_agents", [](SimParams& p, const std::string& v) { p.n_agents = parse_int(v); }},
        {"world_side", [](SimParams& p, const std::string& v) { p.world_side = parse_double(v); }},
        {"n_events", [](SimParams& p, const std::string& v) { p.n_events = parse_int(v); }},
        {"p_lucky", [](SimParams& p, const std::string& v) { p.p_lucky = parse_double(v); }},
        {"talent_mean", [](SimParams& p, const std::string& v) { p.talent_mean = parse_double(v); }},
        {"talent_std", [](SimParams& p, const std::string& v) { p.talent_std = parse_double(v); }},
        {"event_radius", [](SimParams& p, const std::string& v) { p.event_radius = parse_double(v); }},
        {"event_speed", [](SimParams& p, const std::string& v) { p.event_speed = parse_double(v); }},
        {"agent_speed", [](SimParams& p, const std::string& v) { p.agent_speed = parse_double(v); }},
        {"initial_wealth", [](SimParams& p, const std::string& v) { p.initial_wealth = parse_double(v); }},
        {"delta_wealth", [](SimParams& p, const std::string& v) { p.delta_wealth = parse_double(v); }},
        {"location_radius", [](SimParams& p, const std::string& v) { p.location_radius = parse_double(v); }},
        {"wealth_radius_mult", [](SimParams& p, const std::string& v) { p.wealth_radius_mult = parse_double(v); }},
        {"talent_radius_mult", [](SimParams& p, const std::string& v) { p.talent_radius_mult = parse_double(v); }},
        {"random_link_prob", [](SimParams& p, const std::string& v) { p.random_link_prob = parse_double(v); }},
        {"steps", [](SimParams& p, const std::string& v) { p.steps = parse_int(v); }},
        {"network_rule",
         [](SimParams& p, const std::string& v) {
             const auto r = parse_network_rule(v);
             if (!r)
                 throw std::invalid_argument("expected Random, Location, Wealth or Talent, got '" + v + "'");
             p.network_rule = *r;
         }},
        {"movement_rule",
         [](SimParams& p, const std::string& v) {
             const auto r = parse_movement_rule(v);
             if (!r)
                 throw std::invalid_argument("expected Random, Highest or Average, got '" + v + "'");
             p.movement_rule = *r;
         }},
        {"seed", [](SimParams& p, const std::string& v) { p.seed = parse_seed(v); }},
    };
    return table;
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

SimParams parse_config(const std::string& text) {
    SimParams params;
    std::map<std::string, int> set_at; // field -> line that last set it
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(line_no, "expected key = value, got '" + line + "'");
        const std::string key = trim(std::string_view(line).substr(0, eq));
        const std::string value = trim(std::string_view(line).substr(eq + 1));
        if (key.empty())
            throw ConfigError(line_no, "missing key before '='");
        if (value.empty())
            throw ConfigError(line_no, "missing value for key '" + key + "'");
        const auto it = setters().find(key);
        if (it == setters().end())
            throw ConfigError(line_no, "unknown key '" + key + "'");
        try {
            it->second(params, value);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(line_no, key + ": " + e.what());
        }
        set_at[key] = line_no;
    }

    try {
        params.validate();
    } catch (const std::invalid_argument& e) {
        // validate() messages lead with the field name; point at the line
        // that set it.
        const std::string what = e.what();
        const std::string field = what.substr(0, what.find(' '));
        const auto it = set_at.find(field);
        throw ConfigError(it != set_at.end() ? it->second : 0, what);
    }
    return params;
}

SimParams load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error(path + ": cannot open config file");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_config(buf.str());
    } catch (const ConfigError& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

std::string serialize_config(const SimParams& p) {
    std::string out;
    auto kv = [&out](const char* key, const std::string& value) {
        out += key;
        out += " = ";
        out += value;
        out += '\n';
    };
    kv("n_agents", std::to_string(p.n_agents));
    kv("world_side", fmt_double(p.world_side));
    kv("n_events", std::to_string(p.n_events));
    kv("p_lucky", fmt_double(p.p_lucky));
    kv("talent_mean", fmt_double(p.talent_mean));
    kv("talent_std", fmt_double(p.talent_std));
    kv("event_radius", fmt_double(p.event_radius));
    kv("event_speed", fmt_double(p.event_speed));
    kv("agent_speed", fmt_double(p.agent_speed));
    kv("initial_wealth", fmt_double(p.initial_wealth));
    kv("delta_wealth", fmt_double(p.delta_wealth));
    kv("location_radius", fmt_double(p.location_radius));
    kv("wealth_radius_mult", fmt_double(p.wealth_radius_mult));
    kv("talent_radius_mult", fmt_double(p.talent_radius_mult));
    if (p.random_link_prob)
        kv("random_link_prob", fmt_double(*p.random_link_prob));
    kv("steps", std::to_string(p.steps));
    kv("network_rule", to_string(p.network_rule));
    kv("movement_rule", to_string(p.movement_rule));
    kv("seed", std::to_string(p.seed));
    return out;
}

} // namespace luckgrid
