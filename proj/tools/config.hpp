#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dimerlab::cli {

// configuration/schema problems map to exit code 2
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// INI-style file: [section] headers, key = value lines, # or ; comments.
struct ConfigFile {
    std::map<std::string, std::map<std::string, std::string>> sections;

    static ConfigFile parse_string(const std::string& text, const std::string& origin = "<string>");
    static ConfigFile parse_file(const std::string& path);

    bool has(const std::string& section, const std::string& key) const;
    const std::string& get(const std::string& section, const std::string& key) const;
};

// One sweep axis: parameter name plus its value list (verbatim strings).
struct SweepAxis {
    std::string name;
    std::vector<std::string> values;
};

// Parsed experiment request: [experiment] id/output, [params] map, optional
// [sweep] axes (value lists `a, b, c` or ranges `start:step:stop`).
struct ExperimentConfig {
    std::string id;
    std::string output;  // base path (no extension) for emitted files
    bool gnuplot = false;
    std::map<std::string, std::string> params;
    std::vector<SweepAxis> sweep;

    static ExperimentConfig from(const ConfigFile& file);
};

// numeric parsing with field-level diagnostics
double to_number(const std::string& field, const std::string& value);
long to_integer(const std::string& field, const std::string& value);
std::vector<std::string> split_list(const std::string& value);

}  // namespace dimerlab::cli
