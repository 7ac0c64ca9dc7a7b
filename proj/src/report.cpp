#include "gmact/report.hpp"

#include <json.hpp>

#include <algorithm>

namespace gmact::cli {

using ordered = nlohmann::ordered_json;

void Report::add(const std::string& name, bool passed, const std::string& witness, long ms) {
    checks.push_back({name, passed ? "pass" : "fail", witness, ms});
}

void Report::skip(const std::string& name, const std::string& why) {
    checks.push_back({name, "skip", why, 0});
}

void Report::output(const std::string& key, const std::string& value) {
    results.push_back({key, value});
}

bool Report::all_passed() const {
    for (const auto& c : checks)
        if (c.status == "fail")
            return false;
    return true;
}

int Report::exit_code() const {
    return all_passed() ? 0 : 1;
}

std::string Report::to_json(bool with_timings) const {
    std::vector<CheckRecord> sorted = checks;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
    ordered j;
    j["schema"] = 1;
    j["command"] = command;
    j["checks"] = ordered::array();
    for (const auto& c : sorted) {
        ordered rec;
        rec["name"] = c.name;
        rec["status"] = c.status;
        if (!c.witness.empty())
            rec["witness"] = c.witness;
        j["checks"].push_back(rec);
    }
    j["results"] = ordered::object();
    for (const auto& [k, v] : results)
        j["results"][k] = v;
    j["ok"] = all_passed();
    if (with_timings) {
        ordered t = ordered::object();
        for (const auto& c : sorted)
            t[c.name] = c.ms;
        j["timings_ms"] = t;
    }
    return j.dump(2) + "\n";
}

std::string Report::to_text() const {
    std::vector<CheckRecord> sorted = checks;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
    std::string out = "# " + command + "\n";
    for (const auto& [k, v] : results)
        out += k + ": " + v + "\n";
    for (const auto& c : sorted) {
        out += "[" + c.status + "] " + c.name;
        if (!c.witness.empty())
            out += "  (" + c.witness + ")";
        out += "\n";
    }
    out += all_passed() ? "OK\n" : "FAILED\n";
    return out;
}

} // namespace gmact::cli
