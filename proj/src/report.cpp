#include "strobs/report.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace strobs {

using ordered_json = nlohmann::ordered_json;

void SuiteReport::sort_records() {
    std::stable_sort(checks.begin(), checks.end(), [](const CheckRecord& a, const CheckRecord& b) {
        if (a.suite != b.suite) return a.suite < b.suite;
        if (a.sector != b.sector) return a.sector < b.sector;
        return a.name < b.name;
    });
}

bool SuiteReport::all_pass() const {
    for (const CheckRecord& c : checks)
        if (c.verdict != "PASS") return false;
    return true;
}

bool SuiteReport::any_error() const {
    for (const CheckRecord& c : checks)
        if (c.verdict == "ERROR") return true;
    return false;
}

std::string SuiteReport::to_json(bool with_timings) const {
    ordered_json j;
    j["schema"] = "strobs-report/1";
    j["version"] = version;
    ordered_json cfg = ordered_json::object();
    for (const auto& [k, v] : config) cfg[k] = v;
    j["config"] = std::move(cfg);
    ordered_json arr = ordered_json::array();
    for (const CheckRecord& c : checks) {
        ordered_json r;
        r["suite"] = c.suite;
        r["name"] = c.name;
        r["sector"] = c.sector;
        r["verdict"] = c.verdict;
        if (!c.dims.empty()) {
            ordered_json d = ordered_json::object();
            for (const auto& [k, v] : c.dims) d[k] = v;
            r["dims"] = std::move(d);
        }
        if (!c.counterexample.empty()) r["counterexample"] = c.counterexample;
        if (with_timings) r["wall_ms"] = c.wall_ms;
        arr.push_back(std::move(r));
    }
    j["checks"] = std::move(arr);
    return j.dump(2) + "\n";
}

std::string SuiteReport::to_csv(bool with_timings) const {
    std::ostringstream out;
    out << "suite,name,sector,verdict,dims,counterexample";
    if (with_timings) out << ",wall_ms";
    out << "\n";
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"') q += "\"\"";
            else q += c;
        }
        return q + "\"";
    };
    for (const CheckRecord& c : checks) {
        std::string dims;
        for (const auto& [k, v] : c.dims) {
            if (!dims.empty()) dims += ";";
            dims += k + "=" + std::to_string(v);
        }
        out << c.suite << "," << c.name << "," << c.sector << "," << c.verdict << ","
            << quote(dims) << "," << quote(c.counterexample);
        if (with_timings) out << "," << c.wall_ms;
        out << "\n";
    }
    return out.str();
}

std::string SuiteReport::to_text(bool with_timings) const {
    std::ostringstream out;
    std::size_t passed = 0;
    for (const CheckRecord& c : checks) {
        out << (c.verdict == "PASS" ? "[PASS] " : (c.verdict == "FAIL" ? "[FAIL] " : "[ERR ] "))
            << c.suite << " :: " << c.name << " :: " << c.sector;
        if (!c.dims.empty()) {
            out << " (";
            bool first = true;
            for (const auto& [k, v] : c.dims) {
                if (!first) out << ", ";
                out << k << "=" << v;
                first = false;
            }
            out << ")";
        }
        if (with_timings) out << " [" << c.wall_ms << " ms]";
        out << "\n";
        if (!c.counterexample.empty()) out << "       " << c.counterexample << "\n";
        if (c.verdict == "PASS") ++passed;
    }
    out << passed << "/" << checks.size() << " checks passed\n";
    return out.str();
}

} // namespace strobs
