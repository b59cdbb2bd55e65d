#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace strobs {

struct CheckRecord {
    std::string suite;
    std::string name;
    std::string sector;
    std::string verdict; // PASS / FAIL / ERROR
    std::map<std::string, int64_t> dims;
    std::string counterexample;
    double wall_ms = 0.0;

    bool pass() const { return verdict == "PASS"; }
};

// Deterministic run report: records sorted by (suite, sector, name);
// timings are excluded from the canonical formats unless requested so that
// identical configurations serialize byte-identically.
struct SuiteReport {
    std::string version = "0.1.0";
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<CheckRecord> checks;

    void add(CheckRecord rec) { checks.push_back(std::move(rec)); }
    void sort_records();
    bool all_pass() const;
    bool any_error() const;

    std::string to_json(bool with_timings = false) const;
    std::string to_csv(bool with_timings = false) const;
    std::string to_text(bool with_timings = false) const;
};

} // namespace strobs
