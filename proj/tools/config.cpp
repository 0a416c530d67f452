#include "config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace dimerlab::cli {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

const std::set<std::string> kExperiments = {
    "epr-measures", "collision-scan", "raman-profile", "trap-squeeze",
    "fluorescence", "superbeats",     "teleport",      "cavity"};

}  // namespace

ConfigFile ConfigFile::parse_string(const std::string& text, const std::string& origin) {
    ConfigFile file;
    std::istringstream in(text);
    std::string line, section;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto cut = line.find_first_of("#;");
        if (cut != std::string::npos) line.erase(cut);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw config_error(origin + ":" + std::to_string(lineno) +
                                   ": unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty())
                throw config_error(origin + ":" + std::to_string(lineno) + ": empty section name");
            file.sections[section];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error(origin + ":" + std::to_string(lineno) +
                               ": expected `key = value`, got `" + line + "`");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw config_error(origin + ":" + std::to_string(lineno) + ": empty key");
        if (section.empty())
            throw config_error(origin + ":" + std::to_string(lineno) +
                               ": key `" + key + "` outside any section");
        if (file.sections[section].count(key))
            throw config_error(origin + ":" + std::to_string(lineno) + ": duplicate key `" + key +
                               "` in [" + section + "]");
        file.sections[section][key] = value;
    }
    return file;
}

ConfigFile ConfigFile::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_string(buf.str(), path);
}

bool ConfigFile::has(const std::string& section, const std::string& key) const {
    const auto s = sections.find(section);
    return s != sections.end() && s->second.count(key) > 0;
}

const std::string& ConfigFile::get(const std::string& section, const std::string& key) const {
    const auto s = sections.find(section);
    if (s == sections.end()) throw config_error("missing section [" + section + "]");
    const auto k = s->second.find(key);
    if (k == s->second.end())
        throw config_error("missing key `" + key + "` in section [" + section + "]");
    return k->second;
}

double to_number(const std::string& field, const std::string& value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size() || !std::isfinite(v)) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw config_error("field `" + field + "`: not a finite number: `" + value + "`");
    }
}

long to_integer(const std::string& field, const std::string& value) {
    long v = 0;
    const auto res = std::from_chars(value.data(), value.data() + value.size(), v);
    if (res.ec != std::errc{} || res.ptr != value.data() + value.size())
        throw config_error("field `" + field + "`: not an integer: `" + value + "`");
    return v;
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(value);
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

namespace {

// `start:step:stop` inclusive range, or a comma list
std::vector<std::string> axis_values(const std::string& name, const std::string& value) {
    const auto c1 = value.find(':');
    if (c1 != std::string::npos) {
        const auto c2 = value.find(':', c1 + 1);
        if (c2 == std::string::npos)
            throw config_error("sweep axis `" + name + "`: range needs start:step:stop");
        const double start = to_number(name, trim(value.substr(0, c1)));
        const double step = to_number(name, trim(value.substr(c1 + 1, c2 - c1 - 1)));
        const double stop = to_number(name, trim(value.substr(c2 + 1)));
        if (step == 0.0 || (stop - start) * step < 0.0)
            throw config_error("sweep axis `" + name + "`: empty or unbounded range");
        std::vector<std::string> out;
        const long n = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
        for (long i = 0; i < n; ++i) {
            std::ostringstream ss;
            ss.precision(17);
            ss << start + static_cast<double>(i) * step;
            out.push_back(ss.str());
        }
        return out;
    }
    auto out = split_list(value);
    if (out.empty()) throw config_error("sweep axis `" + name + "`: empty value list");
    return out;
}

}  // namespace

ExperimentConfig ExperimentConfig::from(const ConfigFile& file) {
    ExperimentConfig cfg;
    cfg.id = file.get("experiment", "id");
    if (!kExperiments.count(cfg.id)) {
        std::string known;
        for (const auto& e : kExperiments) known += (known.empty() ? "" : ", ") + e;
        throw config_error("unknown experiment id `" + cfg.id + "` (known: " + known + ")");
    }
    cfg.output = file.has("experiment", "output") ? file.get("experiment", "output") : cfg.id;
    if (file.has("experiment", "gnuplot")) {
        const auto& v = file.get("experiment", "gnuplot");
        if (v != "true" && v != "false")
            throw config_error("field `gnuplot`: expected true or false, got `" + v + "`");
        cfg.gnuplot = v == "true";
    }
    for (const auto& [key, value] : file.sections.at("experiment"))
        if (key != "id" && key != "output" && key != "gnuplot")
            throw config_error("unknown key `" + key + "` in [experiment]");

    if (file.sections.count("params")) cfg.params = file.sections.at("params");
    if (file.sections.count("sweep"))
        for (const auto& [name, value] : file.sections.at("sweep"))
            cfg.sweep.push_back({name, axis_values(name, value)});
    for (const auto& [name, values] : file.sections)
        if (name != "experiment" && name != "params" && name != "sweep")
            throw config_error("unknown section [" + name + "]");
    return cfg;
}

}  // namespace dimerlab::cli
