#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "geomv/errors.hpp"

namespace geomv {

inline std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Lossless decimal rendering for doubles (17 significant digits).
inline std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline double parse_double(const std::string& tok) {
    try {
        std::size_t pos = 0;
        double v = std::stod(tok, &pos);
        if (pos != tok.size()) throw ParseError("trailing characters in number '" + tok + "'");
        return v;
    } catch (const std::invalid_argument&) {
        throw ParseError("not a number: '" + tok + "'");
    } catch (const std::out_of_range&) {
        throw ParseError("number out of range: '" + tok + "'");
    }
}

inline long parse_long(const std::string& tok) {
    try {
        std::size_t pos = 0;
        long v = std::stol(tok, &pos);
        if (pos != tok.size()) throw ParseError("trailing characters in integer '" + tok + "'");
        return v;
    } catch (const std::invalid_argument&) {
        throw ParseError("not an integer: '" + tok + "'");
    } catch (const std::out_of_range&) {
        throw ParseError("integer out of range: '" + tok + "'");
    }
}

// Reads all non-empty lines; verifies the header when one is expected.
inline std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

class CsvWriter {
  public:
    explicit CsvWriter(const std::string& path) : out_(path) {
        if (!out_) throw IoError("cannot open " + path + " for writing");
    }
    void row(const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) out_ << ',';
            out_ << fields[i];
        }
        out_ << '\n';
    }
    void raw(const std::string& line) { out_ << line << '\n'; }

  private:
    std::ofstream out_;
};

}  // namespace geomv
