#pragma once

// External class-group records for fields the library cannot compute
// (degree 8 and 16 layers), and the consistency rules they must obey.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "towerlab/report.hpp"
#include "towerlab/towers.hpp"

namespace towerlab::oracle {

struct OracleRecord {
    std::string field;
    towers::FieldLabel label;
    std::uint64_t order = 0;
    std::vector<std::uint64_t> invariants;
    std::string source;
};

/// Thrown for malformed input; names the offending record.
class OracleParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses an array of {"field", "order", "invariants", "source"} objects.
std::vector<OracleRecord> parse_records(const nlohmann::json& j);
std::vector<OracleRecord> load_records(const std::string& path);
nlohmann::json to_json(const std::vector<OracleRecord>& records);

/// One published row: #A(Q2(sqrt p)) and #A(K2) for K = Q(sqrt p, sqrt r).
struct TableRow {
    std::uint64_t p = 0;
    std::uint64_t r = 0;
    std::uint64_t order_Q2_sqrt_p = 0;
    std::uint64_t order_K2 = 0;
};

const std::vector<TableRow>& table_r3();
const std::vector<TableRow>& table_r7();

/// The rows as oracle records, two per row; K2 records are cyclic.
std::vector<OracleRecord> table_records(const std::vector<TableRow>& rows, const std::string& source);

/// Findings, one check per violation:
///   O1 order equals the product of the invariants, each a power of 2 > 1
///   O2 K_n records are cyclic
///   O3 #A(Q_n(sqrt p)) <= #A(K_n) <= 2 #A(Q_n(sqrt p))
///   O4 #A(Q2(sqrt p)) <= 4 for p = 9 mod 16 with (2/p)_4 = -1
///   O5 agreement with the published rows where a label matches
///   O6 repeated labels carry the same data
/// Passing checks are listed too, so the report shows what was covered.
report::VerificationReport oracle_validate(const std::vector<OracleRecord>& records);

}  // namespace towerlab::oracle
