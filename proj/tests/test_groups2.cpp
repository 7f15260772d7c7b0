#include <doctest.h>

#include <stdexcept>

#include <map>
#include <set>

#include "towerlab/groups2.hpp"

using namespace towerlab::groups2;

namespace {

// Subgroups found by testing every subset that contains the identity.
std::size_t brute_subgroup_count(const FiniteGroup2& g)
{
    std::size_t n = 0;
    const Mask full = g.all();
    for (Mask m = 1; m <= full && m != 0; m += 2) {
        if (is_subgroup(g, m))
            ++n;
        if (m == full)
            break;
    }
    return n;
}

std::size_t class_count(const FiniteGroup2& g)
{
    std::set<Mask> classes;
    for (std::size_t a = 0; a < g.order(); ++a) {
        Mask c = 0;
        for (std::size_t x = 0; x < g.order(); ++x)
            c |= Mask{1} << g.mul(g.mul(x, a), g.inverse(x));
        classes.insert(c);
    }
    return classes.size();
}

}  // namespace

TEST_CASE("basic families")
{
    CHECK(cyclic(8).is_abelian());
    CHECK(cyclic(8).exponent() == 8);
    CHECK_FALSE(dihedral(8).is_abelian());
    CHECK(popcount(dihedral(8).center()) == 2);
    CHECK(popcount(quaternion(8).center()) == 2);
    CHECK(quaternion(8).exponent() == 4);
    CHECK(dihedral(16).exponent() == 8);
    CHECK(semidihedral(16).exponent() == 8);
    CHECK(popcount(abelian({2, 4}).all()) == 8);
    CHECK(dihedral(32).order() == 32);
    CHECK(abelian_invariants(abelian({4, 2})) == AbelianType{2, 4});
    CHECK(abelian_invariants(abelian({2, 2, 4})) == AbelianType{2, 2, 4});
    CHECK(abelian_invariants(cyclic(1)).empty());
    CHECK_THROWS_AS(abelian_invariants(dihedral(8)), std::invalid_argument);
}

TEST_CASE("invalid tables are rejected")
{
    // 3 elements: not a 2-power order.
    CHECK_THROWS_AS(FiniteGroup2("bad", 3, {0, 1, 2, 1, 2, 0, 2, 0, 1}), std::invalid_argument);
    // Not a Latin square.
    CHECK_THROWS_AS(FiniteGroup2("bad", 2, {0, 1, 1, 1}), std::invalid_argument);
    // Wrong size.
    CHECK_THROWS_AS(FiniteGroup2("bad", 2, {0, 1, 1}), std::invalid_argument);
    // Identity not at index 0.
    CHECK_THROWS_AS(FiniteGroup2("bad", 2, {1, 0, 0, 1}), std::invalid_argument);
    CHECK_NOTHROW(FiniteGroup2("c2", 2, {0, 1, 1, 0}));
}

TEST_CASE("abelianisation and commutator subgroup")
{
    CHECK(abelianization(dihedral(8)) == AbelianType{2, 2});
    CHECK(abelianization(quaternion(16)) == AbelianType{2, 2});
    CHECK(abelianization(semidihedral(32)) == AbelianType{2, 2});
    CHECK(abelianization(modular16()) == AbelianType{2, 4});
    CHECK(abelianization(Q8_x_C2()) == AbelianType{2, 2, 2});
    for (const auto& cat : {order8_catalog(), order16_catalog()})
        for (const FiniteGroup2& g : cat) {
            std::size_t ab = 1;
            for (auto f : abelianization(g))
                ab *= f;
            CHECK(static_cast<std::size_t>(popcount(commutator_subgroup(g))) * ab == g.order());
            CHECK(is_normal(g, commutator_subgroup(g)));
        }
}

TEST_CASE("subgroup lattice matches brute force and known counts")
{
    const std::map<std::string, std::size_t> known{
        {"(8)", 4},        {"(2,4)", 8},        {"(2,2,2)", 16},    {"D8", 10},     {"Q8", 6},
        {"(16)", 5},       {"(2,8)", 11},       {"(4,4)", 15},      {"(2,2,4)", 27}, {"(2,2,2,2)", 67},
        {"D8_x_C2", 35},   {"Q8_x_C2", 19},     {"D8_central_C4", 23}, {"M16", 11},  {"C4_semi_C4", 15},
        {"V4_semi_C4", 23}, {"D16", 19},        {"Q16", 11},        {"SD16", 15}};
    for (const auto& cat : {order8_catalog(), order16_catalog()})
        for (const FiniteGroup2& g : cat) {
            const auto subs = all_subgroups(g);
            CHECK_MESSAGE(subs.size() == brute_subgroup_count(g), g.name());
            REQUIRE_MESSAGE(known.count(g.name()) == 1, g.name());
            CHECK_MESSAGE(subs.size() == known.at(g.name()), g.name());
            // Closed under joins.
            std::set<Mask> masks;
            for (const auto& s : subs)
                masks.insert(s.elements);
            for (const auto& a : subs)
                for (const auto& b : subs)
                    CHECK(masks.count(closure(g, a.elements | b.elements)) == 1);
            for (const auto& s : subs) {
                CHECK(g.order() % s.order == 0);
                CHECK(s.normal == is_normal(g, s.elements));
            }
        }
}

TEST_CASE("catalog fingerprints are distinct and identify is consistent")
{
    for (const auto& cat : {order8_catalog(), order16_catalog()}) {
        for (std::size_t i = 0; i < cat.size(); ++i) {
            CHECK(identify(cat[i]) == cat[i].name());
            for (std::size_t j = i + 1; j < cat.size(); ++j)
                CHECK_FALSE(fingerprint(cat[i]) == fingerprint(cat[j]));
        }
    }
    CHECK(identify(direct_product(cyclic(2), dihedral(8))) == "D8_x_C2");
    CHECK(identify(cyclic(4)) == "(4)");
    CHECK(identify(dihedral(32)) == "unknown");
}

TEST_CASE("class equation: class counts of order 8 and 16 groups")
{
    CHECK(class_count(dihedral(8)) == 5);
    CHECK(class_count(quaternion(8)) == 5);
    CHECK(class_count(dihedral(16)) == 7);
    CHECK(class_count(Q8_x_C2()) == 10);
    CHECK(class_count(abelian({4, 4})) == 16);
    for (const FiniteGroup2& g : order16_catalog()) {
        const std::size_t z = popcount(g.center());
        const std::size_t k = class_count(g);
        // Noncentral classes have size 2 or 4 or 8.
        CHECK(k >= z);
        CHECK((g.order() - z) % 2 == 0);
    }
}

TEST_CASE("quotients")
{
    const FiniteGroup2 d16 = dihedral(16);
    const FiniteGroup2 q = quotient(d16, d16.center());
    CHECK(identify(q) == "D8");
    CHECK(identify(quotient(quaternion(16), quaternion(16).center())) == "D8");
    CHECK(identify(quotient(semidihedral(16), semidihedral(16).center())) == "D8");
    Mask non_normal = 0;
    for (const auto& s : all_subgroups(d16))
        if (!s.normal) {
            non_normal = s.elements;
            break;
        }
    REQUIRE(non_normal != 0);
    CHECK_THROWS_AS(quotient(d16, non_normal), std::invalid_argument);
}

TEST_CASE("index-2 subgroups of D, Q, S groups")
{
    auto types = [](const FiniteGroup2& g) {
        std::multiset<std::string> t;
        for (const auto& s : index2_subgroup_abelianizations(g)) {
            CHECK(s.allowed);
            t.insert(s.type);
        }
        return t;
    };
    CHECK(types(quaternion(8)) == std::multiset<std::string>{"(4)", "(4)", "(4)"});
    CHECK(types(dihedral(8)) == std::multiset<std::string>{"(4)", "(2,2)", "(2,2)"});
    CHECK(types(dihedral(16)) == std::multiset<std::string>{"(8)", "D8", "D8"});
    CHECK(types(quaternion(16)) == std::multiset<std::string>{"(8)", "Q8", "Q8"});
    CHECK(types(semidihedral(16)) == std::multiset<std::string>{"(8)", "D8", "Q8"});
    CHECK(types(dihedral(32)) == std::multiset<std::string>{"(16)", "D16", "D16"});
    CHECK(types(semidihedral(32)) == std::multiset<std::string>{"(16)", "D16", "Q16"});
    CHECK_THROWS_AS(index2_subgroup_abelianizations(modular16()), std::invalid_argument);
    CHECK_THROWS_AS(index2_subgroup_abelianizations(cyclic(8)), std::invalid_argument);
}

TEST_CASE("claim reports")
{
    const auto r = verify_subgroup_claims();
    CHECK(r.claims.size() == 6);
    CHECK(r.all_passed());
    const auto g = verify_abelianization_22_filter();
    CHECK(g.all_passed());
    const auto f = verify_order16_case_facts();
    CHECK(f.all_passed());
    for (const auto& c : f.claims)
        CHECK_MESSAGE(c.passed, c.id << " " << c.observed);
}

TEST_CASE("construct by name")
{
    CHECK(construct("dihedral(16)").name() == "D16");
    CHECK(construct("quaternion(8)").name() == "Q8");
    CHECK(construct("semidihedral(32)").order() == 32);
    CHECK(construct("abelian(2,4)").order() == 8);
    CHECK(construct("D8_central_C4").order() == 16);
    CHECK_THROWS_AS(construct("dihedral(12)"), std::invalid_argument);
    CHECK_THROWS_AS(construct("frobenius(20)"), std::invalid_argument);
    CHECK_THROWS_AS(construct("dihedral(64)"), std::invalid_argument);
    CHECK_THROWS_AS(construct(""), std::invalid_argument);
}
