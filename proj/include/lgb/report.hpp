#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lgb {

enum class CheckStatus { Pass, Fail, Undecidable, Info };

struct CheckItem {
    std::string input;   // the concrete point or cell
    CheckStatus status;
    std::string detail;  // both sides / classification on failure
};

struct CheckReport {
    std::string target;
    std::string domain;
    std::vector<CheckItem> items;

    int passes = 0, failures = 0, undecided = 0;

    void add(CheckStatus status, const std::string& input, const std::string& detail = "");
    void merge(const CheckReport& other);
    bool ok() const { return failures == 0 && undecided == 0; }
    std::string summary() const;

    void emit_text(std::ostream& os, bool verbose = false) const;
    void emit_json(std::ostream& os) const;
    void emit_junit(std::ostream& os) const;
};

}  // namespace lgb
