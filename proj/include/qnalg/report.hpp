#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace qnalg {

struct check_item {
    std::string desc;
    std::string expected;
    std::string actual;
    bool pass = false;
};

/// Outcome of one named verification check: an ordered list of exact
/// expected/actual comparisons plus a wall-clock timing. The timing lives
/// outside the comparison payload so repeated runs stay byte-identical.
struct check_report {
    static constexpr const char* schema_version = "1";

    std::string check;
    std::map<std::string, std::string> params;
    std::vector<check_item> items;
    double seconds = 0.0;

    bool pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }

    void add(std::string desc, std::string expected, std::string actual) {
        const bool ok = expected == actual;
        items.push_back({std::move(desc), std::move(expected), std::move(actual), ok});
    }

    /// The deterministic comparison payload (no timings).
    nlohmann::json payload() const {
        nlohmann::json j;
        j["check"] = check;
        j["params"] = nlohmann::json::object();
        for (const auto& [k, v] : params) j["params"][k] = v;
        j["items"] = nlohmann::json::array();
        for (const auto& it : items)
            j["items"].push_back({{"desc", it.desc},
                                  {"expected", it.expected},
                                  {"actual", it.actual},
                                  {"pass", it.pass}});
        j["pass"] = pass();
        j["version"] = schema_version;
        return j;
    }

    nlohmann::json full() const {
        nlohmann::json j = payload();
        j["timings"] = {{"seconds", seconds}};
        return j;
    }

    std::string text() const {
        std::string out = "check " + check;
        if (!params.empty()) {
            out += " (";
            bool first = true;
            for (const auto& [k, v] : params) {
                if (!first) out += ", ";
                out += k + "=" + v;
                first = false;
            }
            out += ")";
        }
        out += pass() ? ": PASS\n" : ": FAIL\n";
        for (const auto& it : items) {
            out += std::string("  [") + (it.pass ? "ok" : "FAIL") + "] " + it.desc;
            if (!it.pass || it.expected != "true")
                out += ": expected " + it.expected + ", got " + it.actual;
            out += "\n";
        }
        return out;
    }

    std::string csv() const {
        std::string out;
        for (const auto& it : items)
            out += check + "," + csv_quote(it.desc) + "," + csv_quote(it.expected) + "," +
                   csv_quote(it.actual) + "," + (it.pass ? "true" : "false") + "\n";
        return out;
    }

private:
    static std::string csv_quote(const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string out = "\"";
        for (char c : s) {
            if (c == '"') out += '"';
            out += c;
        }
        out += '"';
        return out;
    }
};

}  // namespace qnalg
