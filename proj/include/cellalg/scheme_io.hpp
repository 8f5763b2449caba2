#pragma once

// Scheme file format: first line n, then n lines of n space-separated color
// indices. Blank lines and lines starting with '#' are ignored.

#include "cellalg/scheme.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace cellalg {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// With one_based set, every color is shifted down by one on read.
inline ColorMatrix parse_scheme_text(const std::string& text, bool one_based = false)
{
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::size_t n = 0;
    bool have_n = false;
    std::size_t row = 0;
    ColorMatrix m;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream ls(line);
        if (!have_n) {
            long long value = 0;
            std::string rest;
            if (!(ls >> value) || (ls >> rest) || value <= 0)
                throw ParseError(lineno, "expected a positive point count");
            n = static_cast<std::size_t>(value);
            if (n > 4096)
                throw ParseError(lineno, "point count " + std::to_string(n) + " is too large");
            m = ColorMatrix(n, n);
            have_n = true;
            continue;
        }
        if (row == n)
            throw ParseError(lineno, "more than " + std::to_string(n) + " matrix rows");
        std::size_t col = 0;
        std::string token;
        while (ls >> token) {
            if (col == n)
                throw ParseError(lineno, "more than " + std::to_string(n) + " entries");
            std::size_t used = 0;
            long long value = 0;
            try {
                value = std::stoll(token, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != token.size())
                throw ParseError(lineno, "'" + token + "' is not an integer");
            if (one_based)
                --value;
            m(row, col++) = value;
        }
        if (col != n)
            throw ParseError(lineno, "expected " + std::to_string(n) + " entries, found " + std::to_string(col));
        ++row;
    }
    if (!have_n)
        throw ParseError(lineno, "empty scheme file");
    if (row != n)
        throw ParseError(lineno, "expected " + std::to_string(n) + " matrix rows, found " + std::to_string(row));
    return m;
}

inline ColorMatrix read_scheme_file(const std::string& path, bool one_based = false)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scheme_text(buf.str(), one_based);
}

inline std::string format_scheme(const Scheme& s)
{
    std::ostringstream os;
    os << s.size() << '\n';
    for (Point u = 0; u < s.size(); ++u) {
        for (Point v = 0; v < s.size(); ++v)
            os << (v ? " " : "") << s.color(u, v);
        os << '\n';
    }
    return os.str();
}

} // namespace cellalg
