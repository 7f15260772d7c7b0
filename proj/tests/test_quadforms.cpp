#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <set>

#include "towerlab/arith.hpp"
#include "towerlab/quadforms.hpp"

using namespace towerlab;
using namespace towerlab::quadforms;

namespace {

// Wide class number from h * log(eps) = -1/2 * sum chi(a) log sin(pi a / D).
std::uint64_t analytic_class_number(std::int64_t D)
{
    const auto eps = arith::order_fundamental_unit(D);
    long ex = 0, ey = 0;
    const double mx = mpz_get_d_2exp(&ex, eps.x.get_mpz_t());
    const double my = mpz_get_d_2exp(&ey, eps.y.get_mpz_t());
    // log((x + y sqrt D)/2) with x, y possibly far beyond double range.
    const long double lx = std::log(static_cast<long double>(mx)) + ex * std::log(2.0L);
    const long double ly = std::log(static_cast<long double>(my)) + ey * std::log(2.0L) + 0.5L * std::log(static_cast<long double>(D));
    const long double hi = std::max(lx, ly), lo = std::min(lx, ly);
    const long double log_eps = hi + std::log1p(std::exp(lo - hi)) - std::log(2.0L);

    const long double pi = std::acos(-1.0L);
    long double sum = 0;
    mpz_class d(static_cast<long>(D));
    for (std::int64_t a = 1; a < D; ++a) {
        const int chi = mpz_kronecker_si(d.get_mpz_t(), static_cast<long>(a));
        if (chi != 0)
            sum += chi * std::log(std::sin(pi * a / D));
    }
    const long double h = -0.5L * sum / log_eps;
    return static_cast<std::uint64_t>(std::llround(h));
}

}  // namespace

TEST_CASE("forms validate their discriminant")
{
    CHECK_NOTHROW(QuadForm(1, 10, -2, 108));
    CHECK_THROWS_AS(QuadForm(1, 10, -3, 108), std::invalid_argument);
    CHECK_THROWS_AS(QuadForm(1, 2, -3, 16), std::invalid_argument);
    CHECK_THROWS_AS(QuadForm(1, 1, 1, -3), std::invalid_argument);
}

TEST_CASE("reduction")
{
    const QuadForm f(-2, 6, 3, 60);
    const QuadForm r = reduce(f);
    CHECK(r.is_reduced());
    CHECK(reduce(r) == r);
    const FormClassSet classes(60);
    CHECK(classes.class_of(f) == classes.cycle_of(r));
    for (const QuadForm& g : reduced_forms(60))
        CHECK(reduce(g) == g);
}

TEST_CASE("rho cycles partition the reduced forms")
{
    for (std::int64_t D = 5; D < 3000; ++D) {
        if (!arith::is_fundamental_discriminant(D))
            continue;
        const FormClassSet classes(D);
        std::size_t total = 0;
        std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t>> seen;
        for (std::size_t i = 0; i < classes.cycles().size(); ++i) {
            for (const QuadForm& f : classes.cycles()[i]) {
                CHECK(f.is_reduced());
                CHECK(classes.cycle_of(f) == i);
                CHECK(seen.insert({f.a(), f.b(), f.c()}).second);
                ++total;
            }
        }
        CHECK(total == reduced_forms(D).size());
    }
}

TEST_CASE("class group examples")
{
    auto q2 = class_group(8);
    CHECK(q2.h_narrow == 1);
    CHECK(q2.h_wide == 1);
    auto q123 = class_group(492);
    CHECK(q123.h_narrow == 4);
    CHECK(q123.h_wide == 2);
    CHECK(q123.invariant_factors == std::vector<std::uint64_t>{2, 2});
    CHECK(q123.two_sylow == std::vector<std::uint64_t>{2});
    CHECK(two_sylow_structure(q123) == std::vector<std::uint64_t>{2});
    CHECK(q123.unit_norm == 1);
    CHECK(class_group(41).h_wide == 1);
    CHECK(two_sylow_structure(class_group(41)).empty());
    CHECK(class_group_of_radicand(287).two_sylow == std::vector<std::uint64_t>{2});
    CHECK(class_group_of_radicand(79).h_wide == 3);
    CHECK(class_group_of_radicand(10).h_wide == 2);
    CHECK_THROWS_AS(class_group(12 * 4), std::invalid_argument);
    CHECK_THROWS_AS(class_group(9), std::invalid_argument);
    CHECK_THROWS_AS(class_group(10'000'009 * 4), std::out_of_range);
}

TEST_CASE("cycle counts match the analytic class number formula, D < 10^4")
{
    std::size_t n = 0;
    for (std::int64_t D = 5; D < 10000; ++D) {
        if (!arith::is_fundamental_discriminant(D))
            continue;
        const auto g = class_group(D);
        const std::uint64_t h = analytic_class_number(D);
        CHECK_MESSAGE(g.h_wide == h, "D = " << D);
        CHECK(g.h_narrow == (g.unit_norm == -1 ? h : 2 * h));
        std::uint64_t prod = 1;
        for (auto f : g.invariant_factors)
            prod *= f;
        CHECK(prod == g.h_narrow);
        ++n;
    }
    CHECK(n > 3000);
}

TEST_CASE("composition is well defined on cycles, D < 2000")
{
    for (std::int64_t D = 5; D < 2000; ++D) {
        if (!arith::is_fundamental_discriminant(D))
            continue;
        const FormClassSet classes(D);
        const auto& cycles = classes.cycles();
        for (std::size_t x = 0; x < cycles.size(); ++x)
            for (std::size_t y = 0; y < cycles.size(); ++y) {
                std::set<std::size_t> results;
                for (const QuadForm& f : cycles[x])
                    for (const QuadForm& g : cycles[y])
                        if (f.a() > 0 && g.a() > 0)
                            results.insert(classes.class_of(compose(f, g)));
                CHECK(results.size() == 1);
                CHECK(*results.begin() == classes.multiply(x, y));
            }
        for (std::size_t x = 0; x < cycles.size(); ++x)
            CHECK(classes.multiply(x, classes.identity()) == x);
    }
}
