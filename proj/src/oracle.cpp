#include "towerlab/oracle.hpp"

#include <bit>
#include <fstream>
#include <map>
#include <numeric>
#include <set>

#include "towerlab/zsqrt2.hpp"

namespace towerlab::oracle {

namespace {

using report::CheckResult;
using report::Verdict;

std::string type_str(const std::vector<std::uint64_t>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

CheckResult check(std::string id, const OracleRecord& rec, std::string expected, std::string computed, bool ok)
{
    CheckResult c;
    c.check_id = std::move(id);
    c.p = rec.label.p;
    c.r = rec.label.r;
    c.expected = std::move(expected);
    c.computed = std::move(computed);
    c.verdict = ok ? Verdict::pass : Verdict::fail;
    c.provenance = "published-claim";
    c.detail = rec.field;
    return c;
}

}  // namespace

std::vector<OracleRecord> parse_records(const nlohmann::json& j)
{
    if (!j.is_array())
        throw OracleParseError("oracle records: top level must be an array");
    std::vector<OracleRecord> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& o = j[i];
        const std::string where = "oracle record " + std::to_string(i);
        if (!o.is_object())
            throw OracleParseError(where + ": not an object");
        for (const char* key : {"field", "order", "invariants", "source"}) {
            if (!o.contains(key))
                throw OracleParseError(where + ": missing \"" + key + "\"");
        }
        if (!o["field"].is_string() || !o["source"].is_string() || !o["order"].is_number_unsigned()
            || !o["invariants"].is_array())
            throw OracleParseError(where + ": wrong value types");
        OracleRecord rec;
        rec.field = o["field"].get<std::string>();
        rec.source = o["source"].get<std::string>();
        rec.order = o["order"].get<std::uint64_t>();
        if (rec.order == 0)
            throw OracleParseError(where + ": order must be positive");
        for (const auto& v : o["invariants"]) {
            if (!v.is_number_unsigned())
                throw OracleParseError(where + ": invariants must be positive integers");
            rec.invariants.push_back(v.get<std::uint64_t>());
        }
        try {
            rec.label = towers::parse_field_label(rec.field);
        } catch (const std::invalid_argument& e) {
            throw OracleParseError(where + ": " + e.what());
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<OracleRecord> load_records(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw OracleParseError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw OracleParseError(path + ": " + e.what());
    }
    return parse_records(j);
}

nlohmann::json to_json(const std::vector<OracleRecord>& records)
{
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : records)
        j.push_back({{"field", r.field}, {"order", r.order}, {"invariants", r.invariants}, {"source", r.source}});
    return j;
}

const std::vector<TableRow>& table_r3()
{
    static const std::vector<TableRow> rows{
        {41, 3, 4, 4},  {137, 3, 4, 4}, {521, 3, 2, 4}, {569, 3, 2, 4},
        {761, 3, 4, 4}, {809, 3, 2, 4}, {857, 3, 2, 4}, {953, 3, 2, 4},
    };
    return rows;
}

const std::vector<TableRow>& table_r7()
{
    static const std::vector<TableRow> rows{
        {41, 7, 4, 4}, {313, 7, 4, 4}, {409, 7, 2, 4}, {521, 7, 2, 4}, {761, 7, 4, 4}, {857, 7, 2, 4},
    };
    return rows;
}

std::vector<OracleRecord> table_records(const std::vector<TableRow>& rows, const std::string& source)
{
    std::vector<OracleRecord> out;
    for (const TableRow& row : rows) {
        for (bool k : {false, true}) {
            OracleRecord rec;
            rec.label.n = 2;
            rec.label.p = row.p;
            rec.label.kind = k ? towers::FieldKind::Kn : towers::FieldKind::Qn_sqrt_p;
            rec.label.r = k ? row.r : 0;
            rec.field = towers::field_label(rec.label);
            rec.order = k ? row.order_K2 : row.order_Q2_sqrt_p;
            rec.invariants = {rec.order};
            rec.source = source;
            out.push_back(std::move(rec));
        }
    }
    return out;
}

report::VerificationReport oracle_validate(const std::vector<OracleRecord>& records)
{
    report::VerificationReport rep;
    rep.title = "oracle validation of " + std::to_string(records.size()) + " records";

    std::map<std::string, const OracleRecord*> by_label;
    for (const OracleRecord& rec : records) {
        auto [it, fresh] = by_label.emplace(rec.field, &rec);
        if (!fresh) {
            const OracleRecord& first = *it->second;
            const bool same = first.order == rec.order && first.invariants == rec.invariants;
            rep.checks.push_back(check("O6", rec, std::to_string(first.order) + " " + type_str(first.invariants),
                                       std::to_string(rec.order) + " " + type_str(rec.invariants), same));
        }
    }

    for (const auto& [label, recp] : by_label) {
        const OracleRecord& rec = *recp;
        std::uint64_t prod = 1;
        bool powers = true;
        for (std::uint64_t f : rec.invariants) {
            powers = powers && f > 1 && std::has_single_bit(f);
            prod *= f;
        }
        rep.checks.push_back(check("O1", rec, "order = product of 2-power invariants",
                                   std::to_string(rec.order) + " vs " + type_str(rec.invariants),
                                   powers && prod == rec.order));

        if (rec.label.kind == towers::FieldKind::Kn)
            rep.checks.push_back(check("O2", rec, "cyclic", type_str(rec.invariants), rec.invariants.size() <= 1));

        if (rec.label.kind == towers::FieldKind::Qn_sqrt_p && rec.label.n == 2 && zsqrt2::qualifying_p(rec.label.p))
            rep.checks.push_back(
                check("O4", rec, "#A(Q2(sqrt p)) <= 4", std::to_string(rec.order), rec.order <= 4));

        if (rec.label.kind == towers::FieldKind::Kn) {
            towers::FieldLabel base{towers::FieldKind::Qn_sqrt_p, rec.label.n, rec.label.p, 0, 0};
            auto it = by_label.find(towers::field_label(base));
            if (it != by_label.end()) {
                const std::uint64_t lo = it->second->order;
                rep.checks.push_back(check("O3", rec,
                                           std::to_string(lo) + " <= #A(K_n) <= " + std::to_string(2 * lo),
                                           std::to_string(rec.order), lo <= rec.order && rec.order <= 2 * lo));
            }
        }
    }

    for (const auto* rows : {&table_r3(), &table_r7()}) {
        for (const OracleRecord& pub : table_records(*rows, "published")) {
            auto it = by_label.find(pub.field);
            if (it == by_label.end())
                continue;
            rep.checks.push_back(check("O5", *it->second, std::to_string(pub.order),
                                       std::to_string(it->second->order), pub.order == it->second->order));
            rep.checks.back().provenance = "published-table";
        }
    }
    return rep;
}

}  // namespace towerlab::oracle
