#pragma once

// Structured check records shared by the verification suites, the radical
// lab and the CLI. One record per check; machine mode emits one JSON object
// per line in canonical order.

#include <string>
#include <vector>

namespace skewring {

enum class CheckStatus { Pass, Fail, Truncated };

inline const char* to_cstring(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Truncated: return "truncated";
    }
    return "?";
}

struct CheckRecord {
    std::string check_id;
    std::string anchor;   // the mathematical statement being exercised
    CheckStatus status = CheckStatus::Pass;
    std::string witness;  // concrete counterexample data on failure
    double timing_ms = 0;
};

struct Report {
    std::vector<CheckRecord> records;

    void pass(std::string id, std::string anchor, std::string witness = {}) {
        records.push_back({std::move(id), std::move(anchor), CheckStatus::Pass,
                           std::move(witness)});
    }
    void fail(std::string id, std::string anchor, std::string witness) {
        records.push_back({std::move(id), std::move(anchor), CheckStatus::Fail,
                           std::move(witness)});
    }
    void truncated(std::string id, std::string anchor, std::string witness) {
        records.push_back({std::move(id), std::move(anchor), CheckStatus::Truncated,
                           std::move(witness)});
    }
    void check(std::string id, std::string anchor, bool ok, std::string witness = {}) {
        records.push_back({std::move(id), std::move(anchor),
                           ok ? CheckStatus::Pass : CheckStatus::Fail,
                           ok ? std::string{} : std::move(witness)});
    }

    void merge(const Report& o) {
        records.insert(records.end(), o.records.begin(), o.records.end());
    }

    bool all_pass(bool strict = false) const {
        for (const auto& r : records) {
            if (r.status == CheckStatus::Fail) return false;
            if (strict && r.status == CheckStatus::Truncated) return false;
        }
        return true;
    }
    bool any_truncated() const {
        for (const auto& r : records)
            if (r.status == CheckStatus::Truncated) return true;
        return false;
    }
};

}  // namespace skewring
