#pragma once
#include <string>
#include <vector>

namespace gmact::cli {

struct CheckRecord {
    std::string name;
    std::string status;  // "pass" | "fail" | "skip"
    std::string witness; // empty when not applicable
    long ms = 0;
};

/// Machine- and human-readable result of one CLI invocation. The canonical
/// JSON section is deterministic; timings live under a separate key so that
/// byte comparison of reports is meaningful.
struct Report {
    std::string command;
    std::vector<CheckRecord> checks;
    std::vector<std::pair<std::string, std::string>> results; // named payloads

    void add(const std::string& name, bool passed, const std::string& witness = "",
             long ms = 0);
    void skip(const std::string& name, const std::string& why = "");
    void output(const std::string& key, const std::string& value);

    bool all_passed() const;
    int exit_code() const; // 0 iff no failing check

    std::string to_json(bool with_timings = true) const; // checks sorted by name
    std::string to_text() const;
};

} // namespace gmact::cli
