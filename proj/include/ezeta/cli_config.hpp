#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ezeta {

enum class OutputFormat { Human, Json, Csv };

OutputFormat parse_format(const std::string& s);
std::string to_string(OutputFormat f);

/// Settings for a suite run, from a key=value file and/or flags.
struct CliConfig {
    std::optional<double> tol_abs;
    std::optional<double> tol_rel;
    std::optional<OutputFormat> format;
    std::optional<std::string> out;
    std::optional<unsigned> jobs;
    std::optional<std::string> filter;
    std::map<std::string, std::vector<double>> grids;
    /// unset means on; off adds wall-clock timing to the human summary
    std::optional<bool> deterministic;
};

/// Keys: tol_abs, tol_rel, format, out, jobs, filter, deterministic, grid.<axis>.
/// Blank lines and lines starting with '#' are ignored. DomainError on unknown keys or bad values.
CliConfig parse_config(const std::string& text);
CliConfig load_config(const std::string& path);

/// "axis=values" as given to --grid
std::pair<std::string, std::vector<double>> parse_grid_override(const std::string& text);

/// Fields set in `over` replace those in `base`; grids merge per axis.
CliConfig merge(CliConfig base, const CliConfig& over);

}  // namespace ezeta
