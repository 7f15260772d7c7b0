#pragma once

// Check results and their table / JSON / CSV renderings.

#include <cstdint>
#include <string>
#include <vector>

namespace towerlab::report {

enum class Verdict { pass, fail, inapplicable, error };

std::string to_string(Verdict v);

struct CheckResult {
    std::string check_id;
    std::uint64_t p = 0;
    std::uint64_t r = 0;
    std::string expected;
    std::string computed;
    Verdict verdict = Verdict::pass;
    std::string provenance;  // published-claim, published-table, derived, invariant
    std::string detail;
};

struct VerificationReport {
    std::string title;
    std::vector<CheckResult> checks;

    /// Any check that failed or could not be evaluated.
    bool has_findings() const;
    std::size_t count(Verdict v) const;
};

enum class Format { table, json, csv };

/// Throws std::invalid_argument for anything but "table", "json", "csv".
Format parse_format(const std::string& s);

std::string render(const VerificationReport& r, Format f);
std::string to_table(const VerificationReport& r);
std::string to_json(const VerificationReport& r);
/// Columns: check_id, p, r, expected, computed, verdict, provenance_tag.
std::string to_csv(const VerificationReport& r);

}  // namespace towerlab::report
