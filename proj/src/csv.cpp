#include "lyap/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace lyap::csv {

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string Table::to_string() const {
    std::string out;
    auto append_row = [&out](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) out.push_back(',');
            out += fields[i];
        }
        out.push_back('\n');
    };
    append_row(header);
    for (const auto& row : rows) append_row(row);
    return out;
}

Table parse(std::string_view text) {
    Table table;
    bool saw_header = false;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;

        std::vector<std::string> fields;
        std::size_t start = 0;
        for (;;) {
            const std::size_t comma = line.find(',', start);
            if (comma == std::string_view::npos) {
                fields.emplace_back(line.substr(start));
                break;
            }
            fields.emplace_back(line.substr(start, comma - start));
            start = comma + 1;
        }
        if (!saw_header) {
            table.header = std::move(fields);
            saw_header = true;
        } else {
            table.rows.push_back(std::move(fields));
        }
    }
    return table;
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("failed writing output file: " + path);
}

}  // namespace lyap::csv
