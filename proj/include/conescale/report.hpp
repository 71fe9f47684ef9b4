#pragma once

#include <string>
#include <vector>

namespace conescale {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Pass/fail ledger used by every validator. Failures are reported, not
/// thrown; sampled checks certify "no counterexample observed" only.
struct ValidationReport {
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }

    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    void add(std::string name, bool passed, std::string detail = {}) {
        checks.push_back({std::move(name), passed, std::move(detail)});
    }
};

}  // namespace conescale
