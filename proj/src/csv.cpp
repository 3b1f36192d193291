#include "aml/csv.hpp"

#include <charconv>
#include <cstdlib>
#include <system_error>

#include "aml/errors.hpp"

namespace aml {

std::string format_double(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) throw DataError("failed to format double");
    return std::string(buf, ptr);
}

double parse_double(const std::string& s, const std::string& what) {
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
        throw DataError("invalid number for " + what + ": '" + s + "'");
    return v;
}

int64_t parse_int(const std::string& s, const std::string& what) {
    int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw DataError("invalid integer for " + what + ": '" + s + "'");
    return v;
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    size_t start = 0;
    for (;;) {
        const size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

}  // namespace

CsvReader::CsvReader(const std::string& path) : path_(path), in_(path) {
    if (!in_) throw DataError("cannot open file: " + path);
    std::string line;
    if (!std::getline(in_, line)) throw DataError(path + ": empty file, header required");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    header_ = split_fields(line);
    line_ = 1;
}

void CsvReader::expect_header(const std::vector<std::string>& columns) {
    if (header_ != columns) {
        std::string want, got;
        for (const auto& c : columns) want += (want.empty() ? "" : ",") + c;
        for (const auto& c : header_) got += (got.empty() ? "" : ",") + c;
        throw DataError(path_ + ": bad header, expected '" + want + "', got '" + got + "'");
    }
}

bool CsvReader::next_row(std::vector<std::string>& fields) {
    std::string line;
    for (;;) {
        if (!std::getline(in_, line)) return false;
        ++line_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) break;
    }
    fields = split_fields(line);
    if (fields.size() != header_.size())
        throw DataError(path_ + ":" + std::to_string(line_) + ": expected " +
                        std::to_string(header_.size()) + " fields, got " +
                        std::to_string(fields.size()));
    return true;
}

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& columns)
    : path_(path), out_(path), n_columns_(columns.size()) {
    if (!out_) throw DataError("cannot open file for writing: " + path);
    for (size_t i = 0; i < columns.size(); ++i) {
        if (i) out_ << ',';
        out_ << columns[i];
    }
    out_ << '\n';
}

void CsvWriter::write_row(const std::vector<std::string>& fields) {
    if (fields.size() != n_columns_)
        throw DataError(path_ + ": row has " + std::to_string(fields.size()) +
                        " fields, header has " + std::to_string(n_columns_));
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i) out_ << ',';
        out_ << fields[i];
    }
    out_ << '\n';
}

void CsvWriter::close() {
    out_.close();
    if (!out_) throw DataError("failed to write " + path_);
}

}  // namespace aml
