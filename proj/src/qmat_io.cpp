#include "qlin/qmat_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "qlin/text.hpp"

namespace qlin {

namespace {

bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        std::size_t p = line.find_first_not_of(" \t\r");
        if (p == std::string::npos) continue;  // blank
        if (line[p] == '#') continue;          // comment
        return true;
    }
    return false;
}

}  // namespace

QuatMatrix read_qmat(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) throw ParseError("missing QMAT header");
    std::istringstream head(line);
    std::string magic;
    long long rows = 0, cols = 0;
    head >> magic >> rows >> cols;
    if (magic != "QMAT" || head.fail() || rows < 1 || cols < 1)
        throw ParseError("malformed QMAT header: '" + line + "'");

    std::vector<Quaternion> data;
    data.reserve(static_cast<std::size_t>(rows * cols));
    for (long long r = 0; r < rows; ++r) {
        if (!next_content_line(in, line))
            throw ParseError("QMAT body ended after " + std::to_string(r) + " of " +
                             std::to_string(rows) + " rows");
        std::istringstream row(line);
        std::string token;
        long long seen = 0;
        while (row >> token) {
            data.push_back(parse_quaternion(token));
            ++seen;
        }
        if (seen != cols)
            throw ParseError("QMAT row " + std::to_string(r) + " has " + std::to_string(seen) +
                             " entries, expected " + std::to_string(cols));
    }
    return {static_cast<std::size_t>(rows), static_cast<std::size_t>(cols), std::move(data)};
}

QuatMatrix read_qmat_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    return read_qmat(in);
}

void write_qmat(std::ostream& out, const QuatMatrix& a) {
    out << "QMAT " << a.rows() << ' ' << a.cols() << '\n';
    for (std::size_t m = 0; m < a.rows(); ++m) {
        for (std::size_t n = 0; n < a.cols(); ++n) {
            if (n) out << ' ';
            out << format_quaternion(a(m, n));
        }
        out << '\n';
    }
}

void write_qmat_file(const std::string& path, const QuatMatrix& a) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open file for writing: " + path);
    write_qmat(out, a);
}

}  // namespace qlin
