#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "bepoly/gauss_rational.hpp"

namespace bepoly {

/// Outcome at one n (and one parameter sample, for parameterized entries).
/// Side renderings are kept only on failure.
struct PointResult {
    long n = 0;
    std::optional<Gauss> sample;
    bool pass = true;
    std::string lhs;
    std::string rhs;
};

struct IdentityReport {
    std::string id;
    std::string paper_eq;
    std::vector<long> n_tested;
    std::vector<PointResult> failures;
    std::string certificate;  // degree-bound argument for sampled parameters
    bool audit = false;
    double seconds = 0;

    [[nodiscard]] bool passed() const { return failures.empty(); }
};

struct VerificationReport {
    std::vector<IdentityReport> identities;
    double seconds = 0;

    /// Overall verdict; audit entries never count.
    [[nodiscard]] bool passed() const {
        for (const auto& r : identities)
            if (!r.audit && !r.passed()) return false;
        return true;
    }
};

using ordered_json = nlohmann::ordered_json;

/// Stable field order: id, paper_eq, n_tested, status, failures, then the
/// optional certificate / audit markers. Timing is left out so output is
/// reproducible.
inline ordered_json to_json(const IdentityReport& r) {
    ordered_json j;
    j["id"] = r.id;
    j["paper_eq"] = r.paper_eq;
    j["n_tested"] = r.n_tested;
    j["status"] = r.passed() ? "pass" : "fail";
    ordered_json failures = ordered_json::array();
    for (const auto& f : r.failures) {
        ordered_json fj;
        fj["n"] = f.n;
        if (f.sample) fj["sample"] = f.sample->str();
        fj["lhs"] = f.lhs;
        fj["rhs"] = f.rhs;
        failures.push_back(std::move(fj));
    }
    j["failures"] = std::move(failures);
    if (!r.certificate.empty()) j["certificate"] = r.certificate;
    if (r.audit) j["audit"] = true;
    return j;
}

inline ordered_json to_json(const VerificationReport& r) {
    ordered_json j;
    j["status"] = r.passed() ? "pass" : "fail";
    ordered_json ids = ordered_json::array();
    for (const auto& i : r.identities) ids.push_back(to_json(i));
    j["identities"] = std::move(ids);
    return j;
}

/// One summary line per identity plus indented failure details.
inline std::string to_text(const IdentityReport& r) {
    std::ostringstream os;
    os << (r.passed() ? "PASS " : "FAIL ") << r.id;
    if (r.audit) os << " [audit]";
    os << "  n tested: " << r.n_tested.size();
    if (!r.failures.empty()) os << ", failures: " << r.failures.size();
    os << '\n';
    for (const auto& f : r.failures) {
        os << "  n = " << f.n;
        if (f.sample) os << ", sample = " << f.sample->str();
        os << "\n    lhs: " << f.lhs << "\n    rhs: " << f.rhs << '\n';
    }
    return os.str();
}

inline std::string to_text(const VerificationReport& r) {
    std::string out;
    std::size_t failing = 0;
    for (const auto& i : r.identities) {
        out += to_text(i);
        if (!i.audit && !i.passed()) ++failing;
    }
    std::ostringstream os;
    os.precision(3);
    os << std::fixed << (r.passed() ? "all identities verified" : std::to_string(failing) + " identities failed")
       << " (" << r.seconds << " s)\n";
    return out + os.str();
}

}  // namespace bepoly
