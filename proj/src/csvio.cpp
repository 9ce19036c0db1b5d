#include "glider/csvio.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace glider {

std::string format_double(double v) {
    char buf[32];
    const int len = std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf, static_cast<std::size_t>(len));
}

void write_csv(const LogTable& table, std::ostream& os) {
    for (const auto& c : table.columns) os << c << ',';
    os << "events\n";
    for (std::size_t k = 0; k < table.rows.size(); ++k) {
        const auto& row = table.rows[k];
        for (double v : row) os << format_double(v) << ',';
        os << table.events[k] << '\n';
    }
}

void write_csv_file(const LogTable& table, const std::filesystem::path& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
    write_csv(table, os);
    if (!os) throw std::runtime_error("write failed for " + path.string());
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            cells.push_back(line.substr(start));
            break;
        }
        cells.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return cells;
}

double parse_double(const std::string& cell, std::size_t line_no) {
    double v = 0.0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last) {
        throw std::runtime_error("malformed numeric cell '" + cell + "' on line " +
                                 std::to_string(line_no));
    }
    return v;
}

}  // namespace

LogTable read_csv(std::istream& is) {
    LogTable table;
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("empty CSV input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> header = split_line(line);
    if (header.empty() || header.back() != "events") {
        throw std::runtime_error("CSV header must end with an 'events' column");
    }
    header.pop_back();
    table.columns = std::move(header);

    std::size_t line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cells = split_line(line);
        if (cells.size() != table.columns.size() + 1) {
            throw std::runtime_error("line " + std::to_string(line_no) + " has " +
                                     std::to_string(cells.size()) + " cells, expected " +
                                     std::to_string(table.columns.size() + 1));
        }
        std::vector<double> row;
        row.reserve(table.columns.size());
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
            row.push_back(parse_double(cells[i], line_no));
        }
        table.rows.push_back(std::move(row));
        table.events.push_back(std::move(cells.back()));
    }
    return table;
}

LogTable read_csv_file(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open " + path.string() + " for reading");
    return read_csv(is);
}

}  // namespace glider
