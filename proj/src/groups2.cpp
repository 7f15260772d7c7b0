#include "towerlab/groups2.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "towerlab/abelian.hpp"

namespace towerlab::groups2 {

namespace {

bool has(Mask m, std::size_t i)
{
    return (m >> i) & 1U;
}

Mask bit(std::size_t i)
{
    return Mask{1} << i;
}

std::vector<std::size_t> elements_of(Mask m)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < kMaxOrder; ++i) {
        if (has(m, i))
            out.push_back(i);
    }
    return out;
}

std::vector<std::uint64_t> parse_numbers(const std::string& s)
{
    std::vector<std::uint64_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stoull(item));
    return out;
}

std::size_t count_if_subgroups(const FiniteGroup2& g, const std::function<bool(const Subgroup&)>& pred)
{
    std::size_t n = 0;
    for (const Subgroup& h : all_subgroups(g)) {
        if (pred(h))
            ++n;
    }
    return n;
}

bool is_type(const FiniteGroup2& g, const Subgroup& h, const AbelianType& t)
{
    FiniteGroup2 sub = subgroup_as_group(g, h.elements);
    return sub.is_abelian() && abelian_invariants(sub) == t;
}

}  // namespace

std::string type_str(const AbelianType& t)
{
    if (t.empty())
        return "1";
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i)
        s += (i ? "," : "") + std::to_string(t[i]);
    return s + ")";
}

FiniteGroup2::FiniteGroup2(std::string name, std::size_t order, std::vector<std::uint8_t> table)
    : name_(std::move(name)), order_(order), table_(std::move(table))
{
    if (order_ == 0 || order_ > kMaxOrder || !std::has_single_bit(order_))
        throw std::invalid_argument(name_ + ": order must be a power of 2 up to 32");
    if (table_.size() != order_ * order_)
        throw std::invalid_argument(name_ + ": table has the wrong size");
    for (std::size_t a = 0; a < order_; ++a) {
        if (mul(0, a) != a || mul(a, 0) != a)
            throw std::invalid_argument(name_ + ": index 0 is not the identity");
        Mask row = 0, col = 0;
        for (std::size_t b = 0; b < order_; ++b) {
            if (mul(a, b) >= order_)
                throw std::invalid_argument(name_ + ": table entry out of range");
            row |= bit(mul(a, b));
            col |= bit(mul(b, a));
        }
        if (row != all() || col != all())
            throw std::invalid_argument(name_ + ": table is not a Latin square");
    }
    for (std::size_t a = 0; a < order_; ++a)
        for (std::size_t b = 0; b < order_; ++b)
            for (std::size_t c = 0; c < order_; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw std::invalid_argument(name_ + ": multiplication is not associative");
    inverse_.resize(order_);
    for (std::size_t a = 0; a < order_; ++a)
        for (std::size_t b = 0; b < order_; ++b)
            if (mul(a, b) == 0)
                inverse_[a] = static_cast<std::uint8_t>(b);
}

FiniteGroup2 FiniteGroup2::from_rule(std::string name, std::size_t order,
                                     const std::function<std::size_t(std::size_t, std::size_t)>& mul)
{
    if (order == 0 || order > kMaxOrder)
        throw std::invalid_argument(name + ": order out of range");
    std::vector<std::uint8_t> table(order * order);
    for (std::size_t a = 0; a < order; ++a)
        for (std::size_t b = 0; b < order; ++b)
            table[a * order + b] = static_cast<std::uint8_t>(mul(a, b));
    return FiniteGroup2(std::move(name), order, std::move(table));
}

std::size_t FiniteGroup2::element_order(std::size_t a) const
{
    std::size_t k = 1;
    for (std::size_t x = a; x != 0; x = mul(x, a))
        ++k;
    return k;
}

std::size_t FiniteGroup2::exponent() const
{
    std::size_t e = 1;
    for (std::size_t a = 0; a < order_; ++a)
        e = std::max(e, element_order(a));
    return e;
}

bool FiniteGroup2::is_abelian() const
{
    for (std::size_t a = 0; a < order_; ++a)
        for (std::size_t b = a + 1; b < order_; ++b)
            if (mul(a, b) != mul(b, a))
                return false;
    return true;
}

Mask FiniteGroup2::center() const
{
    Mask z = 0;
    for (std::size_t a = 0; a < order_; ++a) {
        bool central = true;
        for (std::size_t b = 0; b < order_ && central; ++b)
            central = mul(a, b) == mul(b, a);
        if (central)
            z |= bit(a);
    }
    return z;
}

FiniteGroup2 cyclic(std::size_t n)
{
    return FiniteGroup2::from_rule("(" + std::to_string(n) + ")", n,
                                   [n](std::size_t a, std::size_t b) { return (a + b) % n; });
}

FiniteGroup2 abelian(const AbelianType& type)
{
    AbelianType t = type;
    std::sort(t.begin(), t.end());
    std::size_t order = 1;
    for (std::uint64_t f : t) {
        if (f < 2 || !std::has_single_bit(f))
            throw std::invalid_argument("abelian: factors must be powers of 2 greater than 1");
        order *= f;
        if (order > kMaxOrder)
            throw std::invalid_argument("abelian: order exceeds 32");
    }
    return FiniteGroup2::from_rule(type_str(t), order, [t](std::size_t a, std::size_t b) {
        std::size_t out = 0, place = 1;
        for (std::uint64_t f : t) {
            out += ((a / place % f + b / place % f) % f) * place;
            place *= f;
        }
        return out;
    });
}

FiniteGroup2 metacyclic(std::string name, std::size_t n, std::size_t k, std::size_t a, std::size_t s)
{
    // Element x^i y^e has index i + n*e.
    std::vector<std::size_t> apow(k, 1);
    for (std::size_t e = 1; e < k; ++e)
        apow[e] = apow[e - 1] * a % n;
    return FiniteGroup2::from_rule(std::move(name), n * k, [=](std::size_t u, std::size_t v) {
        const std::size_t i = u % n, e = u / n, j = v % n, f = v / n;
        std::size_t x = i + apow[e] * j;
        std::size_t y = e + f;
        if (y >= k) {
            y -= k;
            x += s;
        }
        return x % n + n * y;
    });
}

FiniteGroup2 dihedral(std::size_t order)
{
    if (order < 4 || order > kMaxOrder || !std::has_single_bit(order))
        throw std::invalid_argument("dihedral: order must be 4..32, a power of 2");
    const std::size_t n = order / 2;
    return metacyclic("D" + std::to_string(order), n, 2, n - 1, 0);
}

FiniteGroup2 quaternion(std::size_t order)
{
    if (order < 8 || order > kMaxOrder || !std::has_single_bit(order))
        throw std::invalid_argument("quaternion: order must be 8..32, a power of 2");
    const std::size_t n = order / 2;
    return metacyclic("Q" + std::to_string(order), n, 2, n - 1, n / 2);
}

FiniteGroup2 semidihedral(std::size_t order)
{
    if (order < 16 || order > kMaxOrder || !std::has_single_bit(order))
        throw std::invalid_argument("semidihedral: order must be 16 or 32");
    const std::size_t n = order / 2;
    return metacyclic("SD" + std::to_string(order), n, 2, n / 2 - 1, 0);
}

FiniteGroup2 modular16()
{
    return metacyclic("M16", 8, 2, 5, 0);
}

FiniteGroup2 C4_semi_C4()
{
    return metacyclic("C4_semi_C4", 4, 4, 3, 0);
}

FiniteGroup2 V4_semi_C4()
{
    // (v, e) -> v + 4e; the generator of (4) swaps the two bits of v.
    auto swap = [](std::size_t w) { return ((w & 1) << 1) | ((w >> 1) & 1); };
    return FiniteGroup2::from_rule("V4_semi_C4", 16, [=](std::size_t u, std::size_t v) {
        const std::size_t a = u % 4, e = u / 4, b = v % 4, f = v / 4;
        const std::size_t bw = (e % 2) ? swap(b) : b;
        return (a ^ bw) + 4 * ((e + f) % 4);
    });
}

FiniteGroup2 direct_product(const FiniteGroup2& g, const FiniteGroup2& h)
{
    const std::size_t n = g.order();
    return FiniteGroup2::from_rule(g.name() + "_x_" + h.name(), n * h.order(), [&](std::size_t u, std::size_t v) {
        return g.mul(u % n, v % n) + n * h.mul(u / n, v / n);
    });
}

FiniteGroup2 quotient(const FiniteGroup2& g, Mask normal)
{
    if (!is_subgroup(g, normal) || !is_normal(g, normal))
        throw std::invalid_argument("quotient: not a normal subgroup");
    std::vector<int> coset(g.order(), -1);
    std::vector<std::size_t> reps;
    for (std::size_t a = 0; a < g.order(); ++a) {
        if (coset[a] >= 0)
            continue;
        for (std::size_t n : elements_of(normal))
            coset[g.mul(a, n)] = static_cast<int>(reps.size());
        reps.push_back(a);
    }
    return FiniteGroup2::from_rule(g.name() + "/N", reps.size(), [&](std::size_t u, std::size_t v) {
        return static_cast<std::size_t>(coset[g.mul(reps[u], reps[v])]);
    });
}

FiniteGroup2 D8_central_C4()
{
    // In D8 x C4 (index d + 8c) the centre of D8 is x^2 = 2 and the element
    // of order 2 in C4 is 2, so the diagonal is {0, 2 + 8*2}.
    FiniteGroup2 prod = direct_product(dihedral(8), cyclic(4));
    FiniteGroup2 q = quotient(prod, bit(0) | bit(2 + 8 * 2));
    return FiniteGroup2("D8_central_C4", 16, [&] {
        std::vector<std::uint8_t> t(256);
        for (std::size_t a = 0; a < 16; ++a)
            for (std::size_t b = 0; b < 16; ++b)
                t[a * 16 + b] = static_cast<std::uint8_t>(q.mul(a, b));
        return t;
    }());
}

namespace {

FiniteGroup2 renamed(const FiniteGroup2& g, std::string name)
{
    std::vector<std::uint8_t> t(g.order() * g.order());
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < g.order(); ++b)
            t[a * g.order() + b] = static_cast<std::uint8_t>(g.mul(a, b));
    return FiniteGroup2(std::move(name), g.order(), std::move(t));
}

}  // namespace

FiniteGroup2 Q8_x_C2()
{
    return renamed(direct_product(quaternion(8), cyclic(2)), "Q8_x_C2");
}

FiniteGroup2 D8_x_C2()
{
    return renamed(direct_product(dihedral(8), cyclic(2)), "D8_x_C2");
}

FiniteGroup2 construct(const std::string& name)
{
    static const std::regex with_arg(R"(^(\w+)\(([\d,]+)\)$)");
    std::smatch m;
    if (std::regex_match(name, m, with_arg)) {
        const std::string family = m[1].str();
        const std::vector<std::uint64_t> args = parse_numbers(m[2].str());
        if (family == "abelian")
            return abelian(args);
        if (args.size() == 1) {
            if (family == "dihedral")
                return dihedral(args[0]);
            if (family == "quaternion")
                return quaternion(args[0]);
            if (family == "semidihedral")
                return semidihedral(args[0]);
        }
    }
    if (name == "modular16")
        return modular16();
    if (name == "C4_semi_C4")
        return C4_semi_C4();
    if (name == "V4_semi_C4")
        return V4_semi_C4();
    if (name == "D8_central_C4")
        return D8_central_C4();
    if (name == "Q8_x_C2")
        return Q8_x_C2();
    if (name == "D8_x_C2")
        return D8_x_C2();
    throw std::invalid_argument("unknown group '" + name + "'");
}

Mask closure(const FiniteGroup2& g, Mask generators)
{
    const std::vector<std::size_t> gens = elements_of(generators);
    Mask h = bit(0);
    std::vector<std::size_t> queue{0};
    while (!queue.empty()) {
        const std::size_t a = queue.back();
        queue.pop_back();
        for (std::size_t s : gens) {
            const std::size_t b = g.mul(a, s);
            if (!has(h, b)) {
                h |= bit(b);
                queue.push_back(b);
            }
        }
    }
    return h;
}

bool is_subgroup(const FiniteGroup2& g, Mask h)
{
    if (!has(h, 0) || (h & ~g.all()))
        return false;
    const auto els = elements_of(h);
    for (std::size_t a : els)
        for (std::size_t b : els)
            if (!has(h, g.mul(a, b)))
                return false;
    return true;
}

bool is_normal(const FiniteGroup2& g, Mask h)
{
    const auto els = elements_of(h);
    for (std::size_t x = 0; x < g.order(); ++x)
        for (std::size_t a : els)
            if (!has(h, g.mul(g.mul(x, a), g.inverse(x))))
                return false;
    return true;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup2& g)
{
    std::set<Mask> found;
    for (std::size_t a = 0; a < g.order(); ++a)
        found.insert(closure(g, bit(a)));
    // Every subgroup is the join of the cyclic subgroups it contains, so
    // closing under pairwise joins reaches all of them.
    std::vector<Mask> frontier(found.begin(), found.end());
    while (!frontier.empty()) {
        std::vector<Mask> fresh;
        const std::vector<Mask> current(found.begin(), found.end());
        for (Mask x : frontier)
            for (Mask y : current) {
                const Mask j = closure(g, x | y);
                if (found.insert(j).second)
                    fresh.push_back(j);
            }
        frontier = std::move(fresh);
    }
    std::vector<Subgroup> out;
    for (Mask h : found)
        out.push_back({h, static_cast<std::size_t>(popcount(h)), is_normal(g, h)});
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        return a.order != b.order ? a.order < b.order : a.elements < b.elements;
    });
    return out;
}

Mask commutator_subgroup(const FiniteGroup2& g)
{
    Mask c = 0;
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < g.order(); ++b)
            c |= bit(g.mul(g.mul(g.inverse(a), g.inverse(b)), g.mul(a, b)));
    return closure(g, c);
}

FiniteGroup2 subgroup_as_group(const FiniteGroup2& g, Mask h, std::string name)
{
    if (!is_subgroup(g, h))
        throw std::invalid_argument("subgroup_as_group: not a subgroup");
    const auto els = elements_of(h);
    std::vector<int> index(g.order(), -1);
    for (std::size_t i = 0; i < els.size(); ++i)
        index[els[i]] = static_cast<int>(i);
    return FiniteGroup2::from_rule(std::move(name), els.size(), [&](std::size_t u, std::size_t v) {
        return static_cast<std::size_t>(index[g.mul(els[u], els[v])]);
    });
}

AbelianType abelian_invariants(const FiniteGroup2& g)
{
    if (!g.is_abelian())
        throw std::invalid_argument("abelian_invariants: " + g.name() + " is not abelian");
    if (g.order() == 1)
        return {};
    std::vector<std::size_t> gens;
    Mask span = bit(0);
    for (std::size_t a = 1; a < g.order(); ++a) {
        if (!has(span, a)) {
            gens.push_back(a);
            span = closure(g, span | bit(a));
        }
    }
    abelian::CayleyStructure cs = abelian::structure_from_action(
        g.order(), 0, gens.size(), [&](std::size_t e, std::size_t i) { return g.mul(e, gens[i]); });
    return cs.invariants();
}

AbelianType abelianization(const FiniteGroup2& g)
{
    return abelian_invariants(quotient(g, commutator_subgroup(g)));
}

Fingerprint fingerprint(const FiniteGroup2& g)
{
    Fingerprint f;
    f.order = g.order();
    f.order_counts.assign(6, 0);
    for (std::size_t a = 0; a < g.order(); ++a)
        ++f.order_counts[std::countr_zero(g.element_order(a))];
    f.center = popcount(g.center());
    f.abelianization = abelianization(g);
    for (const Subgroup& h : all_subgroups(g)) {
        ++f.subgroups;
        if (h.normal)
            ++f.normal_subgroups;
    }
    return f;
}

std::vector<FiniteGroup2> order8_catalog()
{
    return {abelian({8}), abelian({2, 4}), abelian({2, 2, 2}), dihedral(8), quaternion(8)};
}

std::vector<FiniteGroup2> order16_catalog()
{
    return {abelian({16}),     abelian({2, 8}),  abelian({4, 4}),    abelian({2, 2, 4}), abelian({2, 2, 2, 2}),
            D8_x_C2(),         Q8_x_C2(),        D8_central_C4(),    modular16(),        C4_semi_C4(),
            V4_semi_C4(),      dihedral(16),     quaternion(16),     semidihedral(16)};
}

std::string identify(const FiniteGroup2& g)
{
    std::vector<FiniteGroup2> candidates;
    switch (g.order()) {
    case 1:
        return "1";
    case 2:
        return "(2)";
    case 4:
        candidates = {abelian({4}), abelian({2, 2})};
        break;
    case 8:
        candidates = order8_catalog();
        break;
    case 16:
        candidates = order16_catalog();
        break;
    default:
        return "unknown";
    }
    const Fingerprint f = fingerprint(g);
    for (const FiniteGroup2& c : candidates) {
        if (fingerprint(c) == f)
            return c.name();
    }
    return "unknown";
}

bool GroupReport::all_passed() const
{
    return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.passed; });
}

GroupReport verify_subgroup_claims()
{
    GroupReport r;
    for (const FiniteGroup2& g : {dihedral(16), quaternion(16), semidihedral(16)}) {
        const std::size_t n = count_if_subgroups(g, [&](const Subgroup& h) {
            return h.order == 8 && is_type(g, h, {2, 4});
        });
        r.claims.push_back({"R1", g.name(), "no subgroup of type (2,4)", std::to_string(n) + " subgroups of type (2,4)",
                            n == 0});
    }
    {
        const FiniteGroup2 g = C4_semi_C4();
        const std::size_t n = count_if_subgroups(g, [&](const Subgroup& h) {
            return h.order == 4 && is_type(g, h, {2, 2});
        });
        r.claims.push_back({"R2", g.name(), "exactly one subgroup of type (2,2)",
                            std::to_string(n) + " subgroups of type (2,2)", n == 1});
    }
    {
        const FiniteGroup2 g = modular16();
        std::vector<std::string> types;
        std::size_t index_two_normal = 0;
        for (const Subgroup& h : all_subgroups(g)) {
            if (h.order != 8)
                continue;
            types.push_back(identify(subgroup_as_group(g, h.elements)));
            index_two_normal += h.normal;
        }
        std::sort(types.begin(), types.end());
        std::string seen;
        for (const auto& t : types)
            seen += (seen.empty() ? "" : " ") + t;
        const std::vector<std::string> expected{"(2,4)", "(8)", "(8)"};
        r.claims.push_back({"R3", g.name(), "exactly 3 subgroups of order 8: (8), (8), (2,4); 3 quotients of type (2)",
                            seen + "; " + std::to_string(index_two_normal) + " quotients of type (2)",
                            types == expected && index_two_normal == 3});
    }
    {
        const FiniteGroup2 g = V4_semi_C4();
        const std::size_t n = count_if_subgroups(g, [&](const Subgroup& h) {
            return h.order == 4 && h.normal && is_type(g, h, {4});
        });
        r.claims.push_back({"R4", g.name(), "no normal cyclic subgroup of order 4",
                            std::to_string(n) + " normal cyclic subgroups of order 4", n == 0});
    }
    return r;
}

GroupReport verify_abelianization_22_filter()
{
    GroupReport r;
    auto run = [&](const std::vector<FiniteGroup2>& catalog, std::size_t expected_size,
                   std::vector<std::string> expected, const std::string& id) {
        std::vector<std::string> selected;
        std::set<std::string> prints;
        for (const FiniteGroup2& g : catalog) {
            if (abelianization(g) == AbelianType{2, 2})
                selected.push_back(g.name());
            const Fingerprint f = fingerprint(g);
            std::string key = std::to_string(f.center) + "|" + type_str(f.abelianization) + "|"
                              + std::to_string(f.subgroups) + "|" + std::to_string(f.normal_subgroups);
            for (std::size_t c : f.order_counts)
                key += "|" + std::to_string(c);
            prints.insert(key);
        }
        std::sort(selected.begin(), selected.end());
        std::sort(expected.begin(), expected.end());
        std::string seen;
        for (const auto& s : selected)
            seen += (seen.empty() ? "" : " ") + s;
        const std::string order = std::to_string(catalog.front().order());
        r.claims.push_back({id + "a", "order " + order,
                            std::to_string(expected_size) + " pairwise distinguishable groups",
                            std::to_string(catalog.size()) + " groups, " + std::to_string(prints.size())
                                + " distinct fingerprints",
                            catalog.size() == expected_size && prints.size() == expected_size});
        r.claims.push_back({id + "b", "order " + order, "G/G' = (2,2) exactly for the D, Q, S families", seen,
                            selected == expected});
    };
    run(order8_catalog(), 5, {"D8", "Q8"}, "G8");
    run(order16_catalog(), 14, {"D16", "Q16", "SD16"}, "G16");
    return r;
}

GroupReport verify_order16_case_facts()
{
    GroupReport r;
    {
        const FiniteGroup2 g = Q8_x_C2();
        std::size_t total = 0, normal = 0;
        for (const Subgroup& h : all_subgroups(g)) {
            if (h.order == 2) {
                ++total;
                normal += h.normal;
            }
        }
        r.claims.push_back({"F1", g.name(), "exactly three subgroups of order 2, all normal",
                            std::to_string(total) + " of order 2, " + std::to_string(normal) + " normal",
                            total == 3 && normal == 3});
    }
    {
        const FiniteGroup2 g = D8_central_C4();
        const std::size_t n = count_if_subgroups(g, [](const Subgroup& h) { return h.order == 2 && h.normal; });
        r.claims.push_back({"F2", g.name(), "exactly one normal subgroup of order 2",
                            std::to_string(n) + " normal subgroups of order 2", n == 1});
    }
    {
        const FiniteGroup2 g = D8_x_C2();
        std::map<std::string, std::size_t> counts;
        for (const Subgroup& h : all_subgroups(g)) {
            if (h.order == 8)
                ++counts[identify(subgroup_as_group(g, h.elements))];
        }
        std::string seen;
        for (const auto& [k, v] : counts)
            seen += (seen.empty() ? "" : ", ") + k + ": " + std::to_string(v);
        const std::map<std::string, std::size_t> expected{{"D8", 4}, {"(2,2,2)", 2}, {"(2,4)", 1}};
        r.claims.push_back({"F3", g.name(), "subgroups of order 8: four D8, two (2,2,2), one (2,4)", seen,
                            counts == expected});
    }
    return r;
}

std::vector<IndexTwoSubgroup> index2_subgroup_abelianizations(const FiniteGroup2& g)
{
    const std::size_t n = g.order();
    if (n < 8 || n > kMaxOrder)
        throw std::invalid_argument("index2_subgroup_abelianizations: order must be 8, 16 or 32");
    const Fingerprint f = fingerprint(g);
    bool in_family = f == fingerprint(dihedral(n)) || f == fingerprint(quaternion(n));
    if (n >= 16)
        in_family = in_family || f == fingerprint(semidihedral(n));
    if (!in_family)
        throw std::invalid_argument("index2_subgroup_abelianizations: " + g.name()
                                    + " is not dihedral, quaternion or semidihedral");

    const std::size_t half = n / 2;
    const std::set<std::string> allowed{"(2,2)",
                                        "(2)",
                                        "(4)",
                                        "(" + std::to_string(half) + ")",
                                        "D" + std::to_string(half),
                                        "Q" + std::to_string(half)};
    std::vector<IndexTwoSubgroup> out;
    for (const Subgroup& h : all_subgroups(g)) {
        if (h.order != half)
            continue;
        FiniteGroup2 sub = subgroup_as_group(g, h.elements);
        IndexTwoSubgroup s;
        s.elements = h.elements;
        s.type = identify(sub);
        if (s.type == "unknown") {
            // Order 16 subgroups of order-32 groups: compare with the families directly.
            for (const FiniteGroup2& c : {dihedral(half), quaternion(half), semidihedral(half)}) {
                if (fingerprint(c) == fingerprint(sub))
                    s.type = c.name();
            }
        }
        s.abelianization = abelianization(sub);
        s.allowed = allowed.count(s.type) > 0;
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace towerlab::groups2
