#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "salpeter/errors.hpp"

namespace salpeter {

/// Shortest-unambiguous fixed formatting: 17 significant digits, enough to
/// round-trip any double bit-exactly. Used for every float the CLI writes.
std::string format_float(double v);

/// RFC-4180 writer: header row, '.' decimal separator, CRLF record ends.
/// Cell values are written verbatim (the CLI only emits numbers and plain
/// identifiers, so no quoting is ever needed).
class CsvWriter {
  public:
    CsvWriter(const std::string& path, const std::vector<std::string>& header);
    void row(const std::vector<std::string>& cells);
    void close();

  private:
    std::ofstream out_;
    std::string path_;
    size_t columns_ = 0;
};

} // namespace salpeter
