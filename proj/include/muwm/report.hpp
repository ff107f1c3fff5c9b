#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace muwm {

/// One line of a JSON-lines report: {check, subject, pass, details}.
struct ReportEntry {
    std::string check;
    std::string subject;
    bool pass = false;
    nlohmann::json details = nlohmann::json::object();
};

class Report {
public:
    void add(std::string check, std::string subject, bool pass, nlohmann::json details = nlohmann::json::object());
    const std::vector<ReportEntry>& entries() const { return entries_; }
    bool all_pass() const;
    /// Exit status for the CLI: 0 iff every entry passed.
    int exit_code() const { return all_pass() ? 0 : 1; }
    void write(std::ostream& out) const;

private:
    std::vector<ReportEntry> entries_;
};

nlohmann::json to_json(const ReportEntry& e);

}  // namespace muwm
