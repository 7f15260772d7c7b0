#include "towerlab/quadforms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

#include "towerlab/abelian.hpp"
#include "towerlab/arith.hpp"

namespace towerlab::quadforms {

namespace {

std::int64_t pos_mod(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::uint64_t form_key(std::int64_t a, std::int64_t b)
{
    return (static_cast<std::uint64_t>(a + (std::int64_t{1} << 31)) << 32) | static_cast<std::uint32_t>(b);
}

// x*a + y*b = g = gcd(a, b) >= 0.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y)
{
    std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::tie(old_r, r) = std::pair{r, old_r - q * r};
        std::tie(old_s, s) = std::pair{s, old_s - q * s};
        std::tie(old_t, t) = std::pair{t, old_t - q * t};
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    x = old_s;
    y = old_t;
    return old_r;
}

}  // namespace

QuadForm::QuadForm(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t D) : a_(a), b_(b), c_(c), D_(D)
{
    if (D <= 0 || arith::is_square(D))
        throw std::invalid_argument("QuadForm: discriminant must be a positive non-square, got " + std::to_string(D));
    const __int128 disc = static_cast<__int128>(b) * b - static_cast<__int128>(4) * a * c;
    if (disc != D)
        throw std::invalid_argument("QuadForm: b^2 - 4ac != D for " + str());
}

bool QuadForm::is_reduced() const
{
    if (b_ <= 0 || static_cast<__int128>(b_) * b_ >= D_)
        return false;
    const __int128 two_a = 2 * static_cast<__int128>(a_ < 0 ? -a_ : a_);
    // sqrt(D) - b < 2|a|  <=>  D < (2|a| + b)^2
    if (!(D_ < (two_a + b_) * (two_a + b_)))
        return false;
    // 2|a| < sqrt(D) + b  <=>  2|a| - b <= 0 or (2|a| - b)^2 < D
    const __int128 diff = two_a - b_;
    return diff <= 0 || diff * diff < D_;
}

QuadForm QuadForm::rho() const
{
    const std::int64_t abs_c = c_ < 0 ? -c_ : c_;
    const std::int64_t two_c = 2 * abs_c;
    std::int64_t nb;
    if (static_cast<__int128>(abs_c) * abs_c < D_) {
        const std::int64_t s = arith::isqrt(D_);
        nb = s - pos_mod(s + b_, two_c);
    } else {
        nb = pos_mod(-b_, two_c);
        if (nb > abs_c)
            nb -= two_c;
    }
    const __int128 num = static_cast<__int128>(nb) * nb - D_;
    return QuadForm(c_, nb, static_cast<std::int64_t>(num / (4 * static_cast<__int128>(c_))), D_);
}

std::string QuadForm::str() const
{
    return "(" + std::to_string(a_) + ", " + std::to_string(b_) + ", " + std::to_string(c_) + ")";
}

QuadForm reduce(const QuadForm& f)
{
    QuadForm g = f;
    while (!g.is_reduced())
        g = g.rho();
    return g;
}

QuadForm compose(const QuadForm& f, const QuadForm& g)
{
    if (f.discriminant() != g.discriminant())
        throw std::invalid_argument("compose: discriminants differ");
    if (f.a() <= 0 || g.a() <= 0)
        throw std::invalid_argument("compose: leading coefficients must be positive");
    const QuadForm& f1 = f.a() <= g.a() ? f : g;
    const QuadForm& f2 = f.a() <= g.a() ? g : f;
    const std::int64_t a1 = f1.a(), b1 = f1.b();
    const std::int64_t a2 = f2.a(), b2 = f2.b(), c2 = f2.c();
    const std::int64_t D = f.discriminant();

    const std::int64_t s = (b1 + b2) / 2;
    const std::int64_t n = b2 - s;
    std::int64_t y1, d;
    if (a2 % a1 == 0) {
        y1 = 0;
        d = a1;
    } else {
        std::int64_t u, v;
        d = ext_gcd(a2, a1, u, v);
        y1 = u;
    }
    std::int64_t x2, y2, d1;
    if (s % d == 0) {
        y2 = -1;
        x2 = 0;
        d1 = d;
    } else {
        std::int64_t yy;
        d1 = ext_gcd(s, d, x2, yy);
        y2 = -yy;
    }
    const std::int64_t v1 = a1 / d1, v2 = a2 / d1;
    const __int128 t = static_cast<__int128>(y1) * y2 * n - static_cast<__int128>(x2) * c2;
    std::int64_t r = static_cast<std::int64_t>(t % v1);
    if (r < 0)
        r += v1;
    const std::int64_t b3 = b2 + 2 * v2 * r;
    const std::int64_t a3 = v1 * v2;
    const __int128 num = static_cast<__int128>(b3) * b3 - D;
    if (num % (4 * static_cast<__int128>(a3)) != 0)
        throw std::logic_error("compose: non-integral third coefficient");
    return QuadForm(a3, b3, static_cast<std::int64_t>(num / (4 * static_cast<__int128>(a3))), D);
}

std::vector<QuadForm> reduced_forms(std::int64_t D)
{
    if (D <= 0 || arith::is_square(D) || pos_mod(D, 4) > 1)
        throw std::invalid_argument("reduced_forms: invalid discriminant " + std::to_string(D));
    std::vector<QuadForm> out;
    const std::int64_t s = arith::isqrt(D);
    for (std::int64_t b = (D % 2 == 0 ? 2 : 1); b <= s; b += 2) {
        const std::int64_t n = (D - b * b) / 4;  // = -a*c
        // sqrt(D) - b < 2A < sqrt(D) + b with A = |a|.
        for (std::int64_t A = std::max<std::int64_t>(1, (s - b) / 2); 2 * A <= s + b; ++A) {
            if (n % A != 0)
                continue;
            for (std::int64_t a : {A, -A}) {
                QuadForm f(a, b, -n / a, D);
                if (f.is_reduced())
                    out.push_back(f);
            }
        }
    }
    return out;
}

FormClassSet::FormClassSet(std::int64_t D) : D_(D)
{
    std::vector<QuadForm> forms = reduced_forms(D);
    for (std::size_t i = 0; i < forms.size(); ++i)
        index_.emplace(form_key(forms[i].a(), forms[i].b()), i);
    std::vector<std::size_t> cycle_id(forms.size(), SIZE_MAX);
    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (cycle_id[i] != SIZE_MAX)
            continue;
        const std::size_t id = cycles_.size();
        cycles_.emplace_back();
        QuadForm f = forms[i];
        std::size_t pos_rep = SIZE_MAX;
        for (;;) {
            const std::size_t j = index_.at(form_key(f.a(), f.b()));
            if (cycle_id[j] != SIZE_MAX)
                break;
            cycle_id[j] = id;
            if (pos_rep == SIZE_MAX && f.a() > 0)
                pos_rep = cycles_[id].size();
            cycles_[id].push_back(f);
            f = f.rho();
        }
        positive_rep_.push_back(pos_rep);
    }
    for (auto& [key, i] : index_)
        i = cycle_id[i];

    const std::int64_t s = arith::isqrt(D);
    const std::int64_t b0 = (s - D) % 2 == 0 ? s : s - 1;
    identity_ = cycle_of(QuadForm(1, b0, (b0 * b0 - D) / 4, D));
    negative_identity_ = cycle_of(QuadForm(-1, b0, -(b0 * b0 - D) / 4, D));
}

std::size_t FormClassSet::cycle_of(const QuadForm& reduced) const
{
    auto it = index_.find(form_key(reduced.a(), reduced.b()));
    if (it == index_.end() || reduced.discriminant() != D_)
        throw std::invalid_argument("cycle_of: " + reduced.str() + " is not a reduced form of this discriminant");
    return it->second;
}

std::size_t FormClassSet::class_of(const QuadForm& f) const
{
    return cycle_of(reduce(f));
}

const QuadForm& FormClassSet::positive_representative(std::size_t cycle) const
{
    return cycles_.at(cycle).at(positive_rep_.at(cycle));
}

std::size_t FormClassSet::multiply(std::size_t x, std::size_t y) const
{
    return class_of(compose(positive_representative(x), positive_representative(y)));
}

std::uint64_t QuadClassGroup::two_part_wide() const
{
    std::uint64_t t = 1;
    for (std::uint64_t d : two_sylow)
        t *= d;
    return t;
}

QuadClassGroup class_group(std::int64_t D)
{
    if (D > kMaxDiscriminant)
        throw std::out_of_range("class_group: discriminant " + std::to_string(D) + " exceeds 10^7");
    if (D <= 0 || !arith::is_fundamental_discriminant(D))
        throw std::invalid_argument("class_group: " + std::to_string(D) + " is not a positive fundamental discriminant");

    const FormClassSet classes(D);
    const std::size_t h = classes.class_count();

    QuadClassGroup g;
    g.D = D;
    g.h_narrow = h;

    // Greedy generating set of prime forms, in increasing norm.
    std::vector<std::size_t> gens;
    std::vector<bool> in_sub(h, false);
    in_sub[classes.identity()] = true;
    std::size_t sub_size = 1;
    auto close_subgroup = [&]() {
        std::vector<std::size_t> stack;
        for (std::size_t e = 0; e < h; ++e) {
            if (in_sub[e])
                stack.push_back(e);
        }
        while (!stack.empty()) {
            std::size_t e = stack.back();
            stack.pop_back();
            for (std::size_t gi : gens) {
                std::size_t f = classes.multiply(e, gi);
                if (!in_sub[f]) {
                    in_sub[f] = true;
                    ++sub_size;
                    stack.push_back(f);
                }
            }
        }
    };
    auto offer = [&](std::size_t cls, const QuadForm& form) {
        if (in_sub[cls])
            return;
        gens.push_back(cls);
        g.generators.push_back(form);
        close_subgroup();
    };
    const std::int64_t minkowski = arith::isqrt(D) / 2 + 1;
    for (std::int64_t q = 2; q <= minkowski && sub_size < h; ++q) {
        if (!arith::is_prime_u64(static_cast<std::uint64_t>(q)))
            continue;
        for (std::int64_t b = D % 2; b < 2 * q; b += 2) {
            if (pos_mod(b * b - D, 4 * q) != 0)
                continue;
            QuadForm f(q, b, (b * b - D) / (4 * q), D);
            offer(classes.class_of(f), f);
            break;
        }
    }
    for (std::size_t e = 0; e < h && sub_size < h; ++e)
        offer(e, classes.positive_representative(e));

    abelian::CayleyStructure cs = abelian::structure_from_action(
        h, classes.identity(), gens.size(), [&](std::size_t e, std::size_t i) { return classes.multiply(e, gens[i]); });
    g.invariant_factors = cs.invariants();

    abelian::RelationLattice wide = cs.lattice;
    abelian::Row minus_one;
    bool nontrivial = false;
    for (std::int64_t c : cs.coords[classes.negative_identity()]) {
        minus_one.emplace_back(static_cast<long>(c));
        nontrivial = nontrivial || c != 0;
    }
    if (nontrivial)
        wide.add(minus_one);
    g.wide_invariant_factors = wide.invariants();
    g.h_wide = std::accumulate(g.wide_invariant_factors.begin(), g.wide_invariant_factors.end(), std::uint64_t{1},
                               std::multiplies<>());
    g.two_sylow = abelian::two_parts(g.wide_invariant_factors);

    const std::uint64_t narrow_product = std::accumulate(g.invariant_factors.begin(), g.invariant_factors.end(),
                                                         std::uint64_t{1}, std::multiplies<>());
    if (narrow_product != h)
        throw std::logic_error("class_group: invariant factors do not multiply to the cycle count");

    g.unit_norm = arith::order_fundamental_unit(D).norm_value.get_si();
    const std::uint64_t expected_wide = g.unit_norm == 1 ? h / 2 : h;
    if (g.h_wide != expected_wide || (classes.negative_identity() == classes.identity()) != (g.unit_norm == -1))
        throw std::logic_error("class_group: narrow/wide relation disagrees with the fundamental unit norm");
    return g;
}

QuadClassGroup class_group_of_radicand(std::int64_t m)
{
    return class_group(arith::field_discriminant(m));
}

std::vector<std::uint64_t> two_sylow_structure(const QuadClassGroup& g)
{
    return g.two_sylow;
}

}  // namespace towerlab::quadforms
