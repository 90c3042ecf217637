#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace snt {

/// Machine-readable check report shared by the CLI commands.
struct CheckRecord {
    std::string name;
    std::optional<double> expected;
    std::optional<double> got;
    double deviation = 0.0;
    bool pass = false;
};

struct Report {
    std::string schema = "snt-report/1";
    std::string command;
    std::string category;
    std::vector<CheckRecord> records;

    bool pass() const;
    void add(const std::string& name, double expected, double got, double tol);
    void add_bool(const std::string& name, bool ok, double deviation = 0.0);

    std::string to_json() const;
    std::string to_human() const;
};

std::string format_double(double v);

} // namespace snt
