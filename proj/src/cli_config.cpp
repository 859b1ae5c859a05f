#include "ezeta/cli_config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "ezeta/grid.hpp"
#include "ezeta/types.hpp"

namespace ezeta {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    return s.substr(a, s.find_last_not_of(" \t\r") - a + 1);
}

double parse_tol(const std::string& key, const std::string& v) {
    double d = 0.0;
    const auto r = std::from_chars(v.data(), v.data() + v.size(), d);
    if (r.ec != std::errc() || r.ptr != v.data() + v.size() || !std::isfinite(d) || d < 0.0)
        throw DomainError("config: " + key + " must be a nonnegative number, got '" + v + "'");
    return d;
}

unsigned parse_jobs(const std::string& v) {
    unsigned n = 0;
    const auto r = std::from_chars(v.data(), v.data() + v.size(), n);
    if (r.ec != std::errc() || r.ptr != v.data() + v.size() || n == 0)
        throw DomainError("config: jobs must be a positive integer, got '" + v + "'");
    return n;
}

bool parse_bool(const std::string& v) {
    if (v == "true" || v == "1" || v == "on") return true;
    if (v == "false" || v == "0" || v == "off") return false;
    throw DomainError("config: expected a boolean, got '" + v + "'");
}

}  // namespace

OutputFormat parse_format(const std::string& s) {
    if (s == "human") return OutputFormat::Human;
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    throw DomainError("format must be human, json or csv, got '" + s + "'");
}

std::string to_string(OutputFormat f) {
    switch (f) {
        case OutputFormat::Human: return "human";
        case OutputFormat::Json: return "json";
        case OutputFormat::Csv: return "csv";
    }
    return "human";
}

std::pair<std::string, std::vector<double>> parse_grid_override(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0) throw DomainError("grid override must be axis=values, got '" + text + "'");
    return {trim(text.substr(0, eq)), parse_axis_values(trim(text.substr(eq + 1)))};
}

CliConfig parse_config(const std::string& text) {
    CliConfig c;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw DomainError("config line " + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key == "tol_abs") c.tol_abs = parse_tol(key, val);
        else if (key == "tol_rel") c.tol_rel = parse_tol(key, val);
        else if (key == "format") c.format = parse_format(val);
        else if (key == "out") c.out = val;
        else if (key == "jobs") c.jobs = parse_jobs(val);
        else if (key == "filter") c.filter = val;
        else if (key == "deterministic") c.deterministic = parse_bool(val);
        else if (key.rfind("grid.", 0) == 0 && key.size() > 5) c.grids[key.substr(5)] = parse_axis_values(val);
        else throw DomainError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    return c;
}

CliConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw DomainError("config: cannot read '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

CliConfig merge(CliConfig base, const CliConfig& over) {
    if (over.tol_abs) base.tol_abs = over.tol_abs;
    if (over.tol_rel) base.tol_rel = over.tol_rel;
    if (over.format) base.format = over.format;
    if (over.out) base.out = over.out;
    if (over.jobs) base.jobs = over.jobs;
    if (over.filter) base.filter = over.filter;
    for (const auto& [k, v] : over.grids) base.grids[k] = v;
    if (over.deterministic) base.deterministic = over.deterministic;
    return base;
}

}  // namespace ezeta
