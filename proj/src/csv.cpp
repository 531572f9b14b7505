#include "salpeter/csv.hpp"

#include <cstdio>

namespace salpeter {

std::string format_float(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& header)
    : out_(path, std::ios::binary | std::ios::trunc), path_(path), columns_(header.size()) {
    if (!out_) throw IoError("csv: cannot open " + path + " for writing");
    row(header);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    if (cells.size() != columns_)
        throw IoError("csv: row with " + std::to_string(cells.size()) + " cells in a " +
                      std::to_string(columns_) + "-column file " + path_);
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) out_ << ',';
        out_ << cells[i];
    }
    out_ << "\r\n";
    if (!out_) throw IoError("csv: write failure on " + path_);
}

void CsvWriter::close() {
    if (out_.is_open()) {
        out_.close();
        if (!out_) throw IoError("csv: close failure on " + path_);
    }
}

} // namespace salpeter
