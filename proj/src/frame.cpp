#include "aml/frame.hpp"

#include <unordered_set>

#include "aml/csv.hpp"
#include "aml/errors.hpp"

namespace aml {

FeatureTag tag_from_column_name(const std::string& name) {
    if (name.rfind("prof_", 0) == 0) return FeatureTag::profile;
    if (name.rfind("deg_", 0) == 0 || name.rfind("wdeg_", 0) == 0) return FeatureTag::degree;
    if (name.rfind("gwd_", 0) == 0) return FeatureTag::gwd;
    if (name.rfind("gw_", 0) == 0) return FeatureTag::gw;
    return FeatureTag::raw;
}

void FeatureFrame::add_column(std::string name, FeatureTag tag, std::vector<double> values) {
    if (values.size() != n_rows())
        throw DataError("feature column '" + name + "' has " + std::to_string(values.size()) +
                        " values for " + std::to_string(n_rows()) + " rows");
    if (column_index(name) >= 0) throw DataError("duplicate feature column '" + name + "'");
    names.push_back(std::move(name));
    tags.push_back(tag);
    cols.push_back(std::move(values));
}

int FeatureFrame::column_index(const std::string& name) const {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

const std::vector<double>& FeatureFrame::column(const std::string& name) const {
    const int idx = column_index(name);
    if (idx < 0) throw DataError("no feature column named '" + name + "'");
    return cols[idx];
}

FeatureFrame FeatureFrame::select_columns(
    const std::function<bool(const std::string&, FeatureTag)>& keep) const {
    FeatureFrame out;
    out.account_ids = account_ids;
    out.days = days;
    out.labels = labels;
    for (size_t c = 0; c < names.size(); ++c) {
        if (keep(names[c], tags[c])) {
            out.names.push_back(names[c]);
            out.tags.push_back(tags[c]);
            out.cols.push_back(cols[c]);
        }
    }
    return out;
}

FeatureFrame FeatureFrame::select_rows(const std::function<bool(size_t)>& keep) const {
    std::vector<size_t> rows;
    for (size_t r = 0; r < n_rows(); ++r)
        if (keep(r)) rows.push_back(r);
    FeatureFrame out;
    out.names = names;
    out.tags = tags;
    out.account_ids.reserve(rows.size());
    out.days.reserve(rows.size());
    out.labels.reserve(rows.size());
    for (size_t r : rows) {
        out.account_ids.push_back(account_ids[r]);
        out.days.push_back(days[r]);
        out.labels.push_back(labels[r]);
    }
    out.cols.resize(cols.size());
    for (size_t c = 0; c < cols.size(); ++c) {
        out.cols[c].reserve(rows.size());
        for (size_t r : rows) out.cols[c].push_back(cols[c][r]);
    }
    return out;
}

void FeatureFrame::write_csv(const std::string& path) const {
    std::vector<std::string> header = {"account_id", "day"};
    header.insert(header.end(), names.begin(), names.end());
    header.push_back("label");
    CsvWriter writer(path, header);
    std::vector<std::string> row(header.size());
    for (size_t r = 0; r < n_rows(); ++r) {
        row[0] = account_ids[r];
        row[1] = std::to_string(days[r]);
        for (size_t c = 0; c < cols.size(); ++c) row[2 + c] = format_double(cols[c][r]);
        row.back() = labels[r] ? "1" : "0";
        writer.write_row(row);
    }
    writer.close();
}

FeatureFrame FeatureFrame::read_csv(const std::string& path) {
    CsvReader reader(path);
    const auto& header = reader.header();
    if (header.size() < 3 || header[0] != "account_id" || header[1] != "day" ||
        header.back() != "label")
        throw DataError(path + ": feature CSV must be account_id,day,<features...>,label");
    FeatureFrame frame;
    const size_t n_features = header.size() - 3;
    for (size_t c = 0; c < n_features; ++c) {
        frame.names.push_back(header[2 + c]);
        frame.tags.push_back(tag_from_column_name(header[2 + c]));
    }
    frame.cols.resize(n_features);
    std::unordered_set<std::string> seen(frame.names.begin(), frame.names.end());
    if (seen.size() != frame.names.size())
        throw DataError(path + ": duplicate feature column names");

    std::vector<std::string> f;
    while (reader.next_row(f)) {
        const std::string where = path + ":" + std::to_string(reader.line_number());
        frame.account_ids.push_back(f[0]);
        frame.days.push_back(static_cast<int>(parse_int(f[1], where + " day")));
        for (size_t c = 0; c < n_features; ++c)
            frame.cols[c].push_back(parse_double(f[2 + c], where + " " + frame.names[c]));
        if (f.back() == "1")
            frame.labels.push_back(1);
        else if (f.back() == "0")
            frame.labels.push_back(0);
        else
            throw DataError(where + ": label must be 0 or 1");
    }
    return frame;
}

}  // namespace aml
