#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>

namespace aml {

// Flat "key = value" config text. Lines starting with '#' and blank lines
// are ignored. Keys are dotted paths (e.g. "synth.n_accounts"). Typed
// getters parse on access; get() with a default records the default so the
// resolved dump is complete.
class KeyValueConfig {
public:
    static KeyValueConfig parse_file(const std::string& path);
    static KeyValueConfig parse_text(const std::string& text, const std::string& origin = "<text>");

    bool has(const std::string& key) const { return values_.count(key) != 0; }
    void set(const std::string& key, const std::string& value) { values_[key] = value; }

    std::string get_string(const std::string& key, const std::string& fallback);
    int64_t get_int(const std::string& key, int64_t fallback);
    uint64_t get_u64(const std::string& key, uint64_t fallback);
    double get_double(const std::string& key, double fallback);
    bool get_bool(const std::string& key, bool fallback);

    // Throws UsageError naming the first key not in `known`.
    void check_known(const std::set<std::string>& known) const;

    // Sorted "key = value" lines; parseable by parse_text.
    std::string dump() const;

    const std::map<std::string, std::string>& values() const { return values_; }

private:
    std::map<std::string, std::string> values_;
    std::string origin_;
};

// FNV-1a over the dump text; identifies a resolved configuration in reports.
std::string config_hash(const KeyValueConfig& cfg);

}  // namespace aml
