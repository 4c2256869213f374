#include "eulertri/report.hpp"

#include <algorithm>
#include <sstream>

namespace eulertri {

void VerificationReport::add(long n, bool pass, std::string detail, std::string label) {
    checks.push_back({n, pass, std::move(label), std::move(detail), true});
}

void VerificationReport::add_not_applicable(long n, std::string why, std::string label) {
    checks.push_back({n, false, std::move(label), std::move(why), false});
}

bool VerificationReport::passed() const {
    bool any = false;
    for (const auto& c : checks) {
        if (!c.applicable) continue;
        if (!c.pass) return false;
        any = true;
    }
    return any;
}

std::optional<CheckResult> VerificationReport::first_failure() const {
    for (const auto& c : checks) {
        if (c.applicable && !c.pass) return c;
    }
    return std::nullopt;
}

std::size_t VerificationReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.applicable && !c.pass; }));
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j;
    j["target"] = target;
    j["scope"] = scope;
    j["path"] = path;
    j["n_max"] = n_max;
    j["passed"] = passed();
    auto arr = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json e{{"n", c.n}};
        if (!c.label.empty()) e["label"] = c.label;
        e["status"] = !c.applicable ? "n/a" : (c.pass ? "pass" : "fail");
        if (!c.detail.empty()) e["detail"] = c.detail;
        arr.push_back(std::move(e));
    }
    j["checks"] = std::move(arr);
    if (auto f = first_failure()) {
        j["first_failure"] = {{"n", f->n}, {"label", f->label}, {"detail", f->detail}};
    }
    j["notes"] = notes;
    return j;
}

std::string VerificationReport::summary() const {
    std::ostringstream os;
    os << target << "[" << scope << "] n<=" << n_max << ": " << (passed() ? "pass" : "FAIL") << " ("
       << checks.size() << " checks";
    if (const auto bad = failures()) {
        os << ", " << bad << " failed";
    }
    os << ")";
    if (auto f = first_failure()) {
        os << " first failure n=" << f->n;
        if (!f->label.empty()) os << " " << f->label;
        os << ": " << f->detail;
    }
    return os.str();
}

VerificationReport filter_label(const VerificationReport& r, const std::string& label) {
    VerificationReport out = r;
    out.checks.clear();
    for (const auto& c : r.checks) {
        if (c.label == label) out.checks.push_back(c);
    }
    return out;
}

}  // namespace eulertri
