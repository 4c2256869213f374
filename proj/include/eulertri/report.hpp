#pragma once

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace eulertri {

struct CheckResult {
    long n = 0;
    bool pass = false;
    std::string label;   // sub-identity name, empty when a report checks one thing
    std::string detail;  // first discrepancy on failure
    bool applicable = true;
};

struct VerificationReport {
    std::string target;
    std::string scope;
    std::string path;  // which identity form was checked
    std::size_t n_max = 0;
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;

    void add(long n, bool pass, std::string detail = {}, std::string label = {});
    void add_not_applicable(long n, std::string why, std::string label = {});

    /// True when at least one applicable check ran and every applicable check passed.
    bool passed() const;
    std::optional<CheckResult> first_failure() const;
    std::size_t failures() const;

    nlohmann::json to_json() const;
    /// One line, e.g. "thm21[staircase] n<=15: pass (16 checks)".
    std::string summary() const;
};

/// Copy keeping only the checks with the given label.
VerificationReport filter_label(const VerificationReport& r, const std::string& label);

}  // namespace eulertri
