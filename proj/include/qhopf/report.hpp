#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qhopf {

// One violating witness of a named identity: which basis tuple failed and
// what both sides evaluated to.
struct Violation {
    std::string witness;
    std::string lhs;
    std::string rhs;
};

struct CheckResult {
    std::string name;
    std::uint64_t checked = 0;
    std::vector<Violation> violations;
    bool pass() const { return violations.empty(); }
};

// Outcome of a verifier run: a list of named identity checks, each with the
// number of instances tested and any violations found.
struct Report {
    std::vector<CheckResult> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass()) return false;
        return true;
    }
    void merge(Report other) {
        for (auto& c : other.checks) checks.push_back(std::move(c));
    }
    CheckResult& add(const std::string& name) {
        checks.push_back(CheckResult{name, 0, {}});
        return checks.back();
    }
    std::string text() const;
    // first failing check name, or empty
    std::string first_failure() const {
        for (const auto& c : checks)
            if (!c.pass()) return c.name;
        return {};
    }
};

// Throw std::runtime_error with the report text if any check failed.
void require_pass(const Report& r, const std::string& context);

} // namespace qhopf
