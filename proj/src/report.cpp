#include "snt/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace snt {

bool Report::pass() const {
    for (const auto& r : records)
        if (!r.pass) return false;
    return true;
}

void Report::add(const std::string& name, double expected, double got, double tol) {
    CheckRecord r;
    r.name = name;
    r.expected = expected;
    r.got = got;
    r.deviation = std::abs(expected - got);
    r.pass = r.deviation <= tol;
    records.push_back(std::move(r));
}

void Report::add_bool(const std::string& name, bool ok, double deviation) {
    CheckRecord r;
    r.name = name;
    r.deviation = deviation;
    r.pass = ok;
    records.push_back(std::move(r));
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

static void json_escape(std::ostringstream& os, const std::string& s) {
    for (char c : s) {
        if (c == '"' || c == '\\') os << '\\' << c;
        else if (c == '\n') os << "\\n";
        else os << c;
    }
}

std::string Report::to_json() const {
    std::ostringstream os;
    os << "{\"schema\":\"" << schema << "\",\"command\":\"";
    json_escape(os, command);
    os << "\",\"category\":\"";
    json_escape(os, category);
    os << "\",\"checks\":[";
    for (size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        if (i) os << ',';
        os << "{\"name\":\"";
        json_escape(os, r.name);
        os << '"';
        if (r.expected) os << ",\"expected\":" << format_double(*r.expected);
        if (r.got) os << ",\"got\":" << format_double(*r.got);
        os << ",\"deviation\":" << format_double(r.deviation);
        os << ",\"pass\":" << (r.pass ? "true" : "false") << '}';
    }
    os << "],\"pass\":" << (pass() ? "true" : "false") << '}';
    return os.str();
}

std::string Report::to_human() const {
    std::ostringstream os;
    os << "# " << command;
    if (!category.empty()) os << "  [category " << category << "]";
    os << '\n';
    for (const auto& r : records) {
        os << (r.pass ? "PASS " : "FAIL ") << r.name;
        if (r.expected && r.got)
            os << "  expected " << format_double(*r.expected) << "  got " << format_double(*r.got);
        if (r.deviation != 0.0) os << "  dev " << format_double(r.deviation);
        os << '\n';
    }
    os << (pass() ? "OK" : "FAILED") << '\n';
    return os.str();
}

} // namespace snt
