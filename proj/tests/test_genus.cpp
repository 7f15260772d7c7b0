#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "towerlab/arith.hpp"
#include "towerlab/genus.hpp"
#include "towerlab/quadforms.hpp"

using namespace towerlab;
using namespace towerlab::genus;

namespace {

std::vector<std::int64_t> small_primes(std::int64_t bound)
{
    std::vector<std::int64_t> out;
    for (std::int64_t p = 2; p < bound; ++p)
        if (arith::is_prime_u64(static_cast<std::uint64_t>(p)))
            out.push_back(p);
    return out;
}

// d is a sum of two rational squares iff it is a sum of two integer squares
// up to a square factor; for squarefree d just search.
bool sum_of_two_squares(std::int64_t d)
{
    for (std::int64_t x = 0; x * x <= d; ++x) {
        const std::int64_t rest = d - x * x;
        const auto y = static_cast<std::int64_t>(std::sqrt(static_cast<double>(rest)));
        for (std::int64_t z = std::max<std::int64_t>(0, y - 1); z <= y + 1; ++z)
            if (z * z == rest)
                return true;
    }
    return false;
}

}  // namespace

TEST_CASE("Hilbert symbol examples")
{
    CHECK(hilbert_symbol(-1, -1, Place::real()) == -1);
    CHECK(hilbert_symbol(-1, -1, Place::finite(2)) == -1);
    CHECK(hilbert_symbol(-1, -1, Place::finite(3)) == 1);
    CHECK(hilbert_symbol(2, 3, Place::finite(3)) == -1);
    CHECK(hilbert_symbol(2, 3, Place::finite(2)) == -1);
    CHECK(hilbert_symbol(2, 5, Place::finite(5)) == -1);
    CHECK(hilbert_symbol(5, 5, Place::finite(5)) == 1);
    CHECK(hilbert_symbol(3, 3, Place::finite(3)) == -1);
    CHECK(hilbert_symbol(Rational(1, 3), Rational(2), Place::finite(3)) == -1);
    CHECK_THROWS_AS(hilbert_symbol(0, 3, Place::finite(3)), std::invalid_argument);
    CHECK_THROWS_AS(Place::finite(4), std::invalid_argument);
}

TEST_CASE("Hilbert symbol: symmetric, bimultiplicative, (a,-a) = 1")
{
    std::mt19937_64 rng(3);
    const auto primes = small_primes(40);
    for (int i = 0; i < 2000; ++i) {
        const std::int64_t a = static_cast<std::int64_t>(rng() % 2001) - 1000;
        const std::int64_t b = static_cast<std::int64_t>(rng() % 2001) - 1000;
        const std::int64_t c = static_cast<std::int64_t>(rng() % 2001) - 1000;
        if (a == 0 || b == 0 || c == 0)
            continue;
        std::vector<Place> places{Place::real()};
        for (auto p : primes)
            places.push_back(Place::finite(p));
        for (const Place& v : places) {
            CHECK(hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v));
            CHECK(hilbert_symbol(a, b * c, v) == hilbert_symbol(a, b, v) * hilbert_symbol(a, c, v));
            CHECK(hilbert_symbol(a, -a, v) == 1);
        }
    }
}

TEST_CASE("Hilbert product formula on 10^4 random rational pairs")
{
    std::mt19937_64 rng(2024);
    int checked = 0;
    while (checked < 10000) {
        auto draw = [&] {
            long num = static_cast<long>(rng() % 200001) - 100000;
            long den = static_cast<long>(rng() % 1000) + 1;
            Rational q(num, den);
            q.canonicalize();
            return q;
        };
        const Rational a = draw(), b = draw();
        if (a == 0 || b == 0)
            continue;
        int prod = 1;
        for (const Place& v : relevant_places(a, b))
            prod *= hilbert_symbol(a, b, v);
        REQUIRE_MESSAGE(prod == 1, a.get_str() << ", " << b.get_str());
        ++checked;
    }
}

TEST_CASE("-1 is a norm from Q(sqrt d) iff d is a sum of two squares")
{
    for (std::int64_t d = 2; d < 5000; ++d) {
        if (!arith::is_squarefree(d))
            continue;
        CHECK_MESSAGE(minus_one_is_norm(d) == sum_of_two_squares(d), d);
    }
}

TEST_CASE("ambiguous class counts")
{
    CHECK(ambiguous_order({1, 2, 1, std::nullopt}).classes == 2);
    CHECK(ambiguous_order({1, 2, 2, std::nullopt}).classes == 1);
    CHECK(ambiguous_order({2, 3, 2, std::nullopt}).classes == 4);
    const auto o = ambiguous_order({1, 3, 1, 2});
    CHECK(o.classes == 4);
    REQUIRE(o.strong);
    CHECK(*o.strong == 2);
    CHECK_THROWS_AS(ambiguous_order({1, 1, 2, std::nullopt}), std::invalid_argument);
    CHECK_THROWS_AS(ambiguous_order({3, 2, 1, std::nullopt}), std::invalid_argument);
    CHECK_THROWS_AS(ambiguous_order({1, 0, 1, std::nullopt}), std::invalid_argument);
    CHECK_THROWS_AS(ambiguous_order({1, 2, 3, std::nullopt}), std::invalid_argument);

    CHECK(rank_bound({1, 3, 2, std::nullopt}) == 1);
    CHECK(rank_bound({1, 2, 1, std::nullopt}) == 1);
    CHECK_THROWS_AS(rank_bound({2, 2, 1, std::nullopt}), std::invalid_argument);
}

TEST_CASE("genus data of Q(sqrt d)")
{
    const auto g5 = quadratic_over_q(5);
    CHECK(g5.t == 1);
    CHECK(g5.unit_norm_index == 1);
    const auto g3 = quadratic_over_q(3);
    CHECK(g3.t == 2);
    CHECK(g3.unit_norm_index == 2);
    const auto g123 = quadratic_over_q(123);  // disc 492 = 4*3*41
    CHECK(g123.t == 3);
    CHECK(g123.unit_norm_index == 2);
    CHECK(rank_bound(g123) == 1);
    CHECK_THROWS_AS(quadratic_over_q(12), std::invalid_argument);
    CHECK_THROWS_AS(quadratic_over_q(1), std::invalid_argument);
}

TEST_CASE("genus 2-rank agrees with the computed wide class group")
{
    for (std::int64_t d = 2; d < 20000; ++d) {
        if (!arith::is_squarefree(d))
            continue;
        const auto g = quadratic_over_q(d);
        const auto cg = quadforms::class_group_of_radicand(d);
        CHECK_MESSAGE(static_cast<std::size_t>(rank_bound(g)) == cg.two_sylow.size(), d);
        std::uint64_t elems_order_le2 = std::uint64_t{1} << cg.two_sylow.size();
        CHECK(ambiguous_order(g).classes == elems_order_le2);
    }
}

TEST_CASE("pr with p = 1, r = 3 mod 4, (p/r) = -1 has cyclic 2-class group of order 2")
{
    const auto primes = small_primes(5000);
    int n = 0;
    for (auto p : primes) {
        if (p % 4 != 1)
            continue;
        for (auto r : primes) {
            if (r % 4 != 3 || p * r >= 20000)
                continue;
            if (arith::jacobi(p, r) != -1)
                continue;
            const auto cg = quadforms::class_group_of_radicand(p * r);
            CHECK_MESSAGE(cg.two_sylow == std::vector<std::uint64_t>{2}, p << "*" << r);
            ++n;
        }
    }
    CHECK(n > 100);
}
