#include "qlin/text.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>

namespace qlin {

namespace {

bool is_unit_char(char c) { return c == 'i' || c == 'j' || c == 'k'; }

int unit_index(char c) { return c == 'i' ? 1 : (c == 'j' ? 2 : 3); }

}  // namespace

Quaternion parse_quaternion(std::string_view text) {
    size_t begin = 0, end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    if (begin == end) throw ParseError("empty quaternion literal");

    double comp[4] = {0.0, 0.0, 0.0, 0.0};
    size_t pos = begin;
    while (pos < end) {
        double sign = 1.0;
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-') sign = -1.0;
            ++pos;
            if (pos == end) throw ParseError("dangling sign in '" + std::string(text) + "'");
        }
        double value = 1.0;
        bool have_number = false;
        const char* first = text.data() + pos;
        const char* last = text.data() + end;
        double parsed = 0.0;
        auto [ptr, ec] = std::from_chars(first, last, parsed);
        if (ec == std::errc() && ptr != first) {
            value = parsed;
            have_number = true;
            pos += static_cast<size_t>(ptr - first);
        }
        int idx = 0;
        if (pos < end && is_unit_char(text[pos])) {
            idx = unit_index(text[pos]);
            ++pos;
        } else if (!have_number) {
            throw ParseError("unexpected character '" + std::string(1, text[pos]) + "' in '" +
                             std::string(text) + "'");
        }
        comp[idx] += sign * value;
        if (pos < end && text[pos] != '+' && text[pos] != '-')
            throw ParseError("unexpected character '" + std::string(1, text[pos]) + "' in '" +
                             std::string(text) + "'");
    }
    Quaternion q{comp[0], comp[1], comp[2], comp[3]};
    if (!std::isfinite(q.w) || !std::isfinite(q.x) || !std::isfinite(q.y) || !std::isfinite(q.z))
        throw ParseError("non-finite quaternion literal '" + std::string(text) + "'");
    return q;
}

std::string format_quaternion(const Quaternion& q) {
    const double comp[4] = {q.w, q.x, q.y, q.z};
    static const char* suffix[4] = {"", "i", "j", "k"};
    std::string out;
    char buf[64];
    for (int t = 0; t < 4; ++t) {
        const double v = comp[t];
        if (v == 0.0) continue;
        if (out.empty()) {
            std::snprintf(buf, sizeof buf, "%.17g", v);
        } else {
            out += v < 0.0 ? '-' : '+';
            std::snprintf(buf, sizeof buf, "%.17g", std::fabs(v));
        }
        out += buf;
        out += suffix[t];
    }
    if (out.empty()) out = "0";
    return out;
}

}  // namespace qlin
