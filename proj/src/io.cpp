#include "percap/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace percap::io {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string to_csv(const Table& t) {
    std::ostringstream out;
    for (const auto& c : t.comments) out << "# " << c << "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        out << (i ? "," : "") << t.columns[i];
    out << "\n";
    for (const auto& row : t.rows) {
        if (row.size() != t.columns.size())
            throw std::invalid_argument("to_csv: ragged row");
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << format_number(row[i]);
        out << "\n";
    }
    return out.str();
}

std::string to_json(const Table& t) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json rec;
        for (std::size_t i = 0; i < t.columns.size(); ++i)
            rec[t.columns[i]] = row[i];
        arr.push_back(rec);
    }
    nlohmann::json doc;
    if (t.comments.empty()) {
        doc = arr;
    } else {
        doc["meta"] = t.comments;
        doc["records"] = arr;
    }
    return doc.dump(2) + "\n";
}

void write_table(const Table& t, const std::string& path,
                 const std::string& format) {
    const std::string body = format == "json" ? to_json(t) : to_csv(t);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_table: cannot open " + path);
    out << body;
    if (!out.good()) throw std::runtime_error("write_table: write failed for " + path);
}

Table parse_csv(const std::string& text) {
    Table t;
    std::istringstream in(text);
    std::string line;
    bool header_done = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            t.comments.push_back(line.size() > 2 ? line.substr(2) : "");
            continue;
        }
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (!header_done) {
            t.columns = cells;
            header_done = true;
        } else {
            std::vector<double> row;
            row.reserve(cells.size());
            for (const auto& c : cells) row.push_back(std::stod(c));
            t.rows.push_back(std::move(row));
        }
    }
    return t;
}

}  // namespace percap::io
