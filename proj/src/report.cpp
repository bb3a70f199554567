#include "lgb/report.hpp"

#include <ostream>
#include <sstream>

#include <json.hpp>

namespace lgb {

namespace {
const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Undecidable: return "undecidable";
        case CheckStatus::Info: return "info";
    }
    return "?";
}
}  // namespace

void CheckReport::add(CheckStatus status, const std::string& input, const std::string& detail) {
    items.push_back({input, status, detail});
    switch (status) {
        case CheckStatus::Pass: ++passes; break;
        case CheckStatus::Fail: ++failures; break;
        case CheckStatus::Undecidable: ++undecided; break;
        case CheckStatus::Info: break;
    }
}

void CheckReport::merge(const CheckReport& other) {
    for (const auto& it : other.items) items.push_back(it);
    passes += other.passes;
    failures += other.failures;
    undecided += other.undecided;
}

std::string CheckReport::summary() const {
    std::ostringstream os;
    os << target << ": " << passes << " pass, " << failures << " fail, " << undecided
       << " undecidable";
    return os.str();
}

void CheckReport::emit_text(std::ostream& os, bool verbose) const {
    os << summary() << "\n";
    if (!domain.empty()) os << "  domain: " << domain << "\n";
    for (const auto& it : items) {
        if (!verbose && it.status == CheckStatus::Pass) continue;
        os << "  [" << status_name(it.status) << "] " << it.input;
        if (!it.detail.empty()) os << " -- " << it.detail;
        os << "\n";
    }
}

void CheckReport::emit_json(std::ostream& os) const {
    nlohmann::json j;
    j["target"] = target;
    j["domain"] = domain;
    j["passes"] = passes;
    j["failures"] = failures;
    j["undecidable"] = undecided;
    nlohmann::json items_j = nlohmann::json::array();
    for (const auto& it : items) {
        nlohmann::json e;
        e["input"] = it.input;
        e["status"] = status_name(it.status);
        e["detail"] = it.detail;
        items_j.push_back(e);
    }
    j["items"] = items_j;
    os << j.dump(2) << "\n";
}

void CheckReport::emit_junit(std::ostream& os) const {
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<testsuite name=\"" << target << "\" tests=\"" << (passes + failures + undecided)
       << "\" failures=\"" << (failures + undecided) << "\">\n";
    for (const auto& it : items) {
        if (it.status == CheckStatus::Info) continue;
        os << "  <testcase name=\"" << it.input << "\"";
        if (it.status == CheckStatus::Pass) {
            os << "/>\n";
        } else {
            os << ">\n    <failure message=\"" << status_name(it.status) << "\">" << it.detail
               << "</failure>\n  </testcase>\n";
        }
    }
    os << "</testsuite>\n";
}

}  // namespace lgb
