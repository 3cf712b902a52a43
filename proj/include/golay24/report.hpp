// Small pass/fail report type shared by the verification routines.

#pragma once

#include <string>
#include <vector>

namespace golay24 {

struct CheckResult {
    std::string name;    // short stable identifier, e.g. "identity-st-bts"
    std::string claim;   // the mathematical claim being checked, human readable
    bool pass = false;
    std::string detail;  // diagnostic text, filled on failure (and sometimes on success)
};

struct Report {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void add(std::string name, std::string claim, bool pass, std::string detail = "") {
        checks.push_back({std::move(name), std::move(claim), pass, std::move(detail)});
    }
};

}  // namespace golay24
