#include "towerlab/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace towerlab::report {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::pass:
        return "pass";
    case Verdict::fail:
        return "fail";
    case Verdict::inapplicable:
        return "inapplicable";
    case Verdict::error:
        return "error";
    }
    return "?";
}

bool VerificationReport::has_findings() const
{
    return count(Verdict::fail) + count(Verdict::error) > 0;
}

std::size_t VerificationReport::count(Verdict v) const
{
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [v](const CheckResult& c) { return c.verdict == v; }));
}

Format parse_format(const std::string& s)
{
    if (s == "table")
        return Format::table;
    if (s == "json")
        return Format::json;
    if (s == "csv")
        return Format::csv;
    throw std::invalid_argument("unknown format '" + s + "' (expected table, json or csv)");
}

std::string render(const VerificationReport& r, Format f)
{
    switch (f) {
    case Format::table:
        return to_table(r);
    case Format::json:
        return to_json(r);
    case Format::csv:
        return to_csv(r);
    }
    return {};
}

std::string to_table(const VerificationReport& r)
{
    std::ostringstream out;
    if (!r.title.empty())
        out << r.title << "\n";
    out << std::left << std::setw(6) << "check" << std::setw(8) << "p" << std::setw(5) << "r" << std::setw(14)
        << "verdict" << "expected | computed\n";
    for (const CheckResult& c : r.checks) {
        out << std::setw(6) << c.check_id << std::setw(8) << (c.p ? std::to_string(c.p) : "-") << std::setw(5)
            << (c.r ? std::to_string(c.r) : "-") << std::setw(14) << to_string(c.verdict) << c.expected << " | "
            << c.computed;
        if (!c.detail.empty())
            out << "  (" << c.detail << ")";
        out << "\n";
    }
    out << r.count(Verdict::pass) << " pass, " << r.count(Verdict::fail) << " fail, "
        << r.count(Verdict::inapplicable) << " inapplicable, " << r.count(Verdict::error) << " error\n";
    return out.str();
}

std::string to_json(const VerificationReport& r)
{
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& c : r.checks) {
        checks.push_back({{"check_id", c.check_id},
                          {"p", c.p},
                          {"r", c.r},
                          {"expected", c.expected},
                          {"computed", c.computed},
                          {"verdict", to_string(c.verdict)},
                          {"provenance_tag", c.provenance},
                          {"detail", c.detail}});
    }
    nlohmann::json j{{"title", r.title}, {"findings", r.has_findings()}, {"checks", checks}};
    return j.dump(2) + "\n";
}

namespace {

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

std::string to_csv(const VerificationReport& r)
{
    std::ostringstream out;
    out << "check_id,p,r,expected,computed,verdict,provenance_tag\n";
    for (const CheckResult& c : r.checks) {
        out << csv_field(c.check_id) << ',' << c.p << ',' << c.r << ',' << csv_field(c.expected) << ','
            << csv_field(c.computed) << ',' << to_string(c.verdict) << ',' << csv_field(c.provenance) << "\n";
    }
    return out.str();
}

}  // namespace towerlab::report
