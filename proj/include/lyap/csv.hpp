#pragma once

// Canonical CSV emission: headered, comma-separated, '.' decimal point,
// LF line endings, numbers at 12 significant digits. This is the golden
// output format; plots are derived from it.

#include <string>
#include <string_view>
#include <vector>

namespace lyap::csv {

// 12 significant digits, shortest form (trailing zeros dropped).
std::string format_number(double x);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string to_string() const;
};

// Inverse of Table::to_string for round-trip checks; fields never contain
// commas or quotes, so splitting on ',' is exact.
Table parse(std::string_view text);

void write_file(const std::string& path, std::string_view content);

}  // namespace lyap::csv
