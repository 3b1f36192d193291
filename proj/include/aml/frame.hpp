#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace aml {

enum class FeatureTag : uint8_t { raw, profile, degree, gw, gwd };

FeatureTag tag_from_column_name(const std::string& name);

// Aligned per-(account, day) feature matrix, column-major. Rows are sorted
// by (day, account_id); every feature defines a value for every row.
class FeatureFrame {
public:
    size_t n_rows() const { return account_ids.size(); }
    size_t n_cols() const { return names.size(); }

    // Throws DataError on duplicate names or size mismatch.
    void add_column(std::string name, FeatureTag tag, std::vector<double> values);

    // -1 when absent.
    int column_index(const std::string& name) const;
    const std::vector<double>& column(const std::string& name) const;

    // Same rows, columns restricted to `keep` (order preserved).
    FeatureFrame select_columns(const std::function<bool(const std::string&, FeatureTag)>& keep) const;

    // Rows for which keep(row) is true, all columns.
    FeatureFrame select_rows(const std::function<bool(size_t)>& keep) const;

    // CSV layout: account_id,day,<feature columns...>,label. Tags are
    // recovered from column-name prefixes on read.
    void write_csv(const std::string& path) const;
    static FeatureFrame read_csv(const std::string& path);

    std::vector<std::string> account_ids;  // per row
    std::vector<int> days;                 // per row
    std::vector<uint8_t> labels;           // per row, 1 = suspicious
    std::vector<std::string> names;        // per column
    std::vector<FeatureTag> tags;          // per column
    std::vector<std::vector<double>> cols;  // cols[c][row]
};

}  // namespace aml
