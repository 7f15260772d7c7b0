#include <doctest.h>

#include <stdexcept>

#include <fstream>
#include <set>

#include "towerlab/oracle.hpp"
#include "towerlab/scanner.hpp"

using namespace towerlab;
using namespace towerlab::oracle;
using nlohmann::json;

namespace {

std::string fixture(const std::string& name)
{
    return std::string(TOWERLAB_FIXTURE_DIR) + "/" + name;
}

std::size_t findings(const report::VerificationReport& r)
{
    return r.count(report::Verdict::fail) + r.count(report::Verdict::error);
}

}  // namespace

TEST_CASE("bundled table fixtures equal the embedded rows")
{
    const auto r3 = load_records(fixture("table1_r3.json"));
    const auto r7 = load_records(fixture("table2_r7.json"));
    CHECK(r3.size() == 16);
    CHECK(r7.size() == 12);
    const auto e3 = table_records(table_r3(), "");
    const auto e7 = table_records(table_r7(), "");
    REQUIRE(r3.size() == e3.size());
    for (std::size_t i = 0; i < r3.size(); ++i) {
        CHECK(r3[i].field == e3[i].field);
        CHECK(r3[i].order == e3[i].order);
        CHECK(r3[i].invariants == e3[i].invariants);
    }
    REQUIRE(r7.size() == e7.size());
    for (std::size_t i = 0; i < r7.size(); ++i) {
        CHECK(r7[i].field == e7[i].field);
        CHECK(r7[i].order == e7[i].order);
    }
}

TEST_CASE("table rows are admissible pairs")
{
    for (const auto* rows : {&table_r3(), &table_r7()}) {
        const std::uint64_t r = rows->front().r;
        std::vector<std::uint64_t> ps;
        for (const auto& c : scanner::enumerate_condition1(1000, {r}))
            ps.push_back(c.p);
        std::vector<std::uint64_t> table_ps;
        for (const auto& row : *rows)
            table_ps.push_back(row.p);
        CHECK(ps == table_ps);
    }
}

TEST_CASE("fixtures validate with zero findings")
{
    auto all = load_records(fixture("table1_r3.json"));
    const auto r7 = load_records(fixture("table2_r7.json"));
    all.insert(all.end(), r7.begin(), r7.end());
    const auto rep = oracle_validate(all);
    CHECK(findings(rep) == 0);
    CHECK_FALSE(rep.has_findings());
    std::set<std::string> ids;
    for (const auto& c : rep.checks)
        ids.insert(c.check_id);
    // Shared Q2(sqrt p) rows between the two tables are duplicates that agree.
    CHECK(ids == std::set<std::string>{"O1", "O2", "O3", "O4", "O5", "O6"});
}

TEST_CASE("each mutation raises exactly one finding")
{
    std::ifstream in(fixture("mutations.json"));
    REQUIRE(in);
    const json corpus = json::parse(in);
    REQUIRE(corpus.size() == 6);
    for (const auto& m : corpus) {
        const auto rep = oracle_validate(parse_records(m["records"]));
        CHECK_MESSAGE(findings(rep) == 1, m["name"].get<std::string>());
        for (const auto& c : rep.checks)
            if (c.verdict == report::Verdict::fail)
                CHECK(c.check_id == m["expect"].get<std::string>());
    }
}

TEST_CASE("malformed records")
{
    CHECK_THROWS_AS(parse_records(json::object()), OracleParseError);
    CHECK_THROWS_AS(parse_records(json::parse(R"([1])")), OracleParseError);
    CHECK_THROWS_AS(parse_records(json::parse(R"([{"field": "Q2", "order": 2, "invariants": [2]}])")), OracleParseError);
    CHECK_THROWS_AS(parse_records(json::parse(R"([{"field": "Q2", "order": "2", "invariants": [2], "source": ""}])")),
                    OracleParseError);
    CHECK_THROWS_AS(parse_records(json::parse(R"([{"field": "Q2", "order": 0, "invariants": [], "source": ""}])")),
                    OracleParseError);
    CHECK_THROWS_AS(parse_records(json::parse(R"([{"field": "Q2", "order": 2, "invariants": [-2], "source": ""}])")),
                    OracleParseError);
    CHECK_THROWS_AS(parse_records(json::parse(R"([{"field": "L2", "order": 2, "invariants": [2], "source": ""}])")),
                    OracleParseError);
    CHECK_THROWS_AS(load_records(fixture("does_not_exist.json")), OracleParseError);
}

TEST_CASE("records round-trip through JSON")
{
    const auto recs = load_records(fixture("table1_r3.json"));
    const auto again = parse_records(to_json(recs));
    REQUIRE(again.size() == recs.size());
    for (std::size_t i = 0; i < recs.size(); ++i) {
        CHECK(again[i].field == recs[i].field);
        CHECK(again[i].label == recs[i].label);
        CHECK(again[i].source == recs[i].source);
    }
}

TEST_CASE("report renderings")
{
    const auto rep = oracle_validate(load_records(fixture("table2_r7.json")));
    const std::string csv = report::to_csv(rep);
    CHECK(csv.rfind("check_id,p,r,expected,computed,verdict,provenance_tag\n", 0) == 0);
    const json j = json::parse(report::to_json(rep));
    CHECK(j["checks"].size() == rep.checks.size());
    CHECK(report::render(rep, report::Format::table).find("O3") != std::string::npos);
    CHECK(report::parse_format("csv") == report::Format::csv);
    CHECK_THROWS_AS(report::parse_format("xml"), std::invalid_argument);
}
