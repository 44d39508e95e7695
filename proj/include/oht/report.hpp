#pragma once

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

// Structured result of a verification run: a CSV-able table plus named
// fitted constants and pass/fail flags.  Key order is insertion order so
// that serialized output is deterministic.

namespace oht {

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct ExperimentReport {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, double>> summary;
    std::vector<std::pair<std::string, bool>> flags;

    void add_row(std::vector<double> row) {
        if (row.size() != columns.size())
            throw std::invalid_argument("ExperimentReport: row width mismatch");
        rows.push_back(std::move(row));
    }

    void set(const std::string& k, double v) {
        for (auto& kv : summary)
            if (kv.first == k) { kv.second = v; return; }
        summary.emplace_back(k, v);
    }

    void set_flag(const std::string& k, bool v) {
        for (auto& kv : flags)
            if (kv.first == k) { kv.second = v; return; }
        flags.emplace_back(k, v);
    }

    double get(const std::string& k) const {
        for (const auto& kv : summary)
            if (kv.first == k) return kv.second;
        throw std::out_of_range("ExperimentReport: no summary key " + k);
    }

    bool has(const std::string& k) const {
        for (const auto& kv : summary)
            if (kv.first == k) return true;
        return false;
    }

    bool flag(const std::string& k) const {
        for (const auto& kv : flags)
            if (kv.first == k) return kv.second;
        throw std::out_of_range("ExperimentReport: no flag " + k);
    }

    /// True when every pass/fail flag is true (vacuously true without flags).
    bool passed() const {
        for (const auto& kv : flags)
            if (!kv.second) return false;
        return true;
    }

    std::string to_csv() const {
        std::string out;
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (c) out += ',';
            out += columns[c];
        }
        out += "\r\n";
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c) out += ',';
                out += format_double(row[c]);
            }
            out += "\r\n";
        }
        return out;
    }

    nlohmann::ordered_json summary_json() const {
        nlohmann::ordered_json j;
        j["name"] = name;
        for (const auto& kv : summary) j["summary"][kv.first] = kv.second;
        j["flags"] = nlohmann::ordered_json::object();
        for (const auto& kv : flags) j["flags"][kv.first] = kv.second;
        j["passed"] = passed();
        return j;
    }

    void write_csv(const std::string& path) const {
        std::ofstream os(path, std::ios::binary);
        if (!os) throw std::runtime_error("cannot open " + path);
        os << to_csv();
    }
};

} // namespace oht
