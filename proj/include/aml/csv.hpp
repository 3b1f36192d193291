#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

namespace aml {

// Shortest round-trip decimal form; the one float formatter used for every
// CSV and report so identical values always serialize identically.
std::string format_double(double v);

double parse_double(const std::string& s, const std::string& what);
int64_t parse_int(const std::string& s, const std::string& what);

// Minimal line-oriented CSV reader for our fixed schemas: comma-separated,
// no quoting (account ids and numbers never contain commas), header
// required. Errors carry 1-based line numbers.
class CsvReader {
public:
    explicit CsvReader(const std::string& path);

    // Throws DataError unless the header matches exactly.
    void expect_header(const std::vector<std::string>& columns);

    const std::vector<std::string>& header() const { return header_; }

    // Returns false at EOF; otherwise fills fields (count checked against
    // the header).
    bool next_row(std::vector<std::string>& fields);

    size_t line_number() const { return line_; }
    const std::string& path() const { return path_; }

private:
    std::string path_;
    std::ifstream in_;
    std::vector<std::string> header_;
    size_t line_ = 0;
};

class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::vector<std::string>& columns);

    void write_row(const std::vector<std::string>& fields);
    void close();

private:
    std::string path_;
    std::ofstream out_;
    size_t n_columns_;
};

}  // namespace aml
