#include "aml/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "aml/csv.hpp"
#include "aml/errors.hpp"
#include "aml/rng.hpp"

namespace aml {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

}  // namespace

KeyValueConfig KeyValueConfig::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str(), path);
}

KeyValueConfig KeyValueConfig::parse_text(const std::string& text, const std::string& origin) {
    KeyValueConfig cfg;
    cfg.origin_ = origin;
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw UsageError(origin + ":" + std::to_string(lineno) +
                             ": expected 'key = value', got '" + stripped + "'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty())
            throw UsageError(origin + ":" + std::to_string(lineno) + ": empty key");
        cfg.values_[key] = value;
    }
    return cfg;
}

std::string KeyValueConfig::get_string(const std::string& key, const std::string& fallback) {
    auto it = values_.find(key);
    if (it == values_.end()) {
        values_[key] = fallback;
        return fallback;
    }
    return it->second;
}

int64_t KeyValueConfig::get_int(const std::string& key, int64_t fallback) {
    auto it = values_.find(key);
    if (it == values_.end()) {
        values_[key] = std::to_string(fallback);
        return fallback;
    }
    try {
        return parse_int(it->second, key);
    } catch (const DataError& e) {
        throw UsageError(e.what());
    }
}

uint64_t KeyValueConfig::get_u64(const std::string& key, uint64_t fallback) {
    auto it = values_.find(key);
    if (it == values_.end()) {
        values_[key] = std::to_string(fallback);
        return fallback;
    }
    uint64_t v = 0;
    try {
        v = std::stoull(it->second);
    } catch (...) {
        throw UsageError("invalid unsigned integer for " + key + ": '" + it->second + "'");
    }
    return v;
}

double KeyValueConfig::get_double(const std::string& key, double fallback) {
    auto it = values_.find(key);
    if (it == values_.end()) {
        values_[key] = format_double(fallback);
        return fallback;
    }
    try {
        return parse_double(it->second, key);
    } catch (const DataError& e) {
        throw UsageError(e.what());
    }
}

bool KeyValueConfig::get_bool(const std::string& key, bool fallback) {
    auto it = values_.find(key);
    if (it == values_.end()) {
        values_[key] = fallback ? "true" : "false";
        return fallback;
    }
    const std::string& v = it->second;
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw UsageError("invalid boolean for " + key + ": '" + v + "'");
}

void KeyValueConfig::check_known(const std::set<std::string>& known) const {
    for (const auto& [key, value] : values_) {
        if (known.count(key) == 0)
            throw UsageError("unknown config key: '" + key + "'");
    }
}

std::string KeyValueConfig::dump() const {
    std::string out;
    for (const auto& [key, value] : values_) {
        out += key;
        out += " = ";
        out += value;
        out += '\n';
    }
    return out;
}

std::string config_hash(const KeyValueConfig& cfg) {
    const uint64_t h = hash_str(cfg.dump());
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace aml
