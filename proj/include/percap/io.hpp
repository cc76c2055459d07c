#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// CSV/JSON table emission for the CLI. CSV: header row, ',' separator,
// '\n' line endings, >= 15 significant digits; optional '# key=value'
// comment lines before the header.
namespace percap::io {

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> comments;  // emitted as "# <text>" lines
};

std::string format_number(double v);

std::string to_csv(const Table& t);
std::string to_json(const Table& t);

/// Writes CSV or JSON depending on `format` ("csv" or "json").
/// Throws std::runtime_error on I/O failure.
void write_table(const Table& t, const std::string& path,
                 const std::string& format);

/// Parses CSV produced by to_csv (round-trip inverse).
Table parse_csv(const std::string& text);

}  // namespace percap::io
