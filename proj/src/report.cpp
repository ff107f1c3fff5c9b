#include "muwm/report.hpp"

#include <algorithm>

namespace muwm {

void Report::add(std::string check, std::string subject, bool pass, nlohmann::json details) {
    entries_.push_back({std::move(check), std::move(subject), pass, std::move(details)});
}

bool Report::all_pass() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const ReportEntry& e) { return e.pass; });
}

nlohmann::json to_json(const ReportEntry& e) {
    return {{"check", e.check}, {"subject", e.subject}, {"pass", e.pass}, {"details", e.details}};
}

void Report::write(std::ostream& out) const {
    for (const auto& e : entries_) out << to_json(e).dump() << '\n';
}

}  // namespace muwm
