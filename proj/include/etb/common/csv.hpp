#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "etb/common/errors.hpp"

namespace etb {

// Formats a double with enough digits to round-trip exactly. %.17g prints
// stable, locale-independent text, so identical values give identical bytes.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

class CsvWriter {
public:
    explicit CsvWriter(const std::string& path) : out_(path, std::ios::binary) {
        if (!out_) throw ConfigError("cannot open for writing: " + path);
    }

    void comment(const std::string& line) { out_ << "# " << line << "\n"; }

    void header(const std::vector<std::string>& names) { write_strings(names); }

    void row(const std::vector<double>& values) {
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) out_ << ',';
            out_ << format_double(values[i]);
        }
        out_ << '\n';
    }

private:
    void write_strings(const std::vector<std::string>& v) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out_ << ',';
            out_ << v[i];
        }
        out_ << '\n';
    }

    std::ofstream out_;
};

struct CsvTable {
    std::vector<std::string> comments;  // leading '#' lines, marker stripped
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

inline CsvTable read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open for reading: " + path);
    CsvTable t;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::size_t start = line.size() > 1 && line[1] == ' ' ? 2 : 1;
            t.comments.push_back(line.substr(start));
            continue;
        }
        if (!header_seen) {
            std::stringstream ss(line);
            std::string cell;
            while (std::getline(ss, cell, ',')) t.header.push_back(cell);
            header_seen = true;
            continue;
        }
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                row.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw ConfigError("non-numeric CSV cell in " + path + ": " + cell);
            }
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace etb
