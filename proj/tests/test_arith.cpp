#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "towerlab/arith.hpp"

using namespace towerlab::arith;

namespace {

// Legendre symbol by listing the squares mod p.
int legendre_brute(std::int64_t a, std::int64_t p)
{
    a = ((a % p) + p) % p;
    if (a == 0)
        return 0;
    for (std::int64_t x = 1; x < p; ++x)
        if (x * x % p == a)
            return 1;
    return -1;
}

bool trial_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

bool is_square_ll(long long v)
{
    if (v < 0)
        return false;
    long long s = static_cast<long long>(std::sqrt(static_cast<long double>(v)));
    while (s * s > v)
        --s;
    while ((s + 1) * (s + 1) <= v)
        ++s;
    return s * s == v;
}

// Least y <= ymax with d*y^2 + m a perfect square.
std::optional<long long> brute_norm(long long d, long long m, long long ymax)
{
    for (long long y = 0; y <= ymax; ++y)
        if (is_square_ll(d * y * y + m))
            return y;
    return std::nullopt;
}

}  // namespace

TEST_CASE("jacobi examples")
{
    CHECK(jacobi(41, 3) == -1);
    CHECK(jacobi(7, 41) == -1);
    for (std::int64_t n : {1, 3, 15, 41, 99})
        CHECK(jacobi(1, n) == 1);
    CHECK_THROWS_AS(jacobi(3, 8), std::invalid_argument);
    CHECK_THROWS_AS(jacobi(3, -5), std::invalid_argument);
}

TEST_CASE("jacobi agrees with listing squares modulo small primes")
{
    for (std::int64_t p = 3; p < 300; p += 2) {
        if (!trial_prime(p))
            continue;
        for (std::int64_t a = -p; a < 2 * p; ++a) {
            CHECK(jacobi(a, p) == legendre_brute(a, p));
            CHECK(jacobi(BigInt(static_cast<long>(a)), BigInt(static_cast<long>(p))) == legendre_brute(a, p));
        }
    }
}

TEST_CASE("jacobi of a square over coprime odd n is 1, and is multiplicative in n")
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 5000; ++i) {
        std::int64_t a = static_cast<std::int64_t>(rng() % 100000) - 50000;
        std::int64_t n = static_cast<std::int64_t>(rng() % 5000) * 2 + 1;
        std::int64_t m = static_cast<std::int64_t>(rng() % 5000) * 2 + 1;
        if (std::gcd(a, n) == 1)
            CHECK(jacobi(a * a, n) == 1);
        CHECK(jacobi(a, n * m) == jacobi(a, n) * jacobi(a, m));
    }
}

TEST_CASE("quartic symbol of 2")
{
    CHECK(quartic_symbol_2(41) == -1);
    CHECK(quartic_symbol_2(137) == -1);
    CHECK(quartic_symbol_2(73) == 1);
    CHECK_THROWS_AS(quartic_symbol_2(std::uint64_t{3}), std::invalid_argument);
    CHECK_THROWS_AS(quartic_symbol_2(std::uint64_t{13}), std::invalid_argument);
}

TEST_CASE("quartic symbol is 1 exactly when 2 is a fourth power, p < 10^4")
{
    for (std::uint64_t p = 17; p < 10000; p += 8) {
        if (!trial_prime(p))
            continue;
        bool fourth_power = false;
        for (std::uint64_t x = 1; x < p && !fourth_power; ++x)
            fourth_power = x * x % p * x % p * x % p == 2;
        const int s = quartic_symbol_2(p);
        CHECK(s * s == 1);
        CHECK((s == 1) == fourth_power);
    }
}

TEST_CASE("primality")
{
    const std::vector<bool> sieve = prime_sieve(200000);
    for (std::uint64_t n = 0; n <= 200000; ++n)
        REQUIRE(is_prime_u64(n) == sieve[n]);
    for (std::uint64_t n = 0; n < 3000; ++n)
        CHECK(sieve[n] == trial_prime(n));
    CHECK(is_prime_u64((1ULL << 61) - 1));
    CHECK_FALSE(is_prime_u64((1ULL << 61) + 1));
    CHECK_FALSE(is_prime_u64(561));
    CHECK_FALSE(is_prime_u64(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
    CHECK(is_prime_u64(18446744073709551557ULL));
    BigInt m89 = (BigInt(1) << 89) - 1;
    CHECK(primality(m89) == Primality::probable_prime);
    CHECK(primality(m89 * 3) == Primality::composite);
    CHECK(primality(BigInt(97)) == Primality::prime);
}

TEST_CASE("OddPrime validates")
{
    CHECK_THROWS_AS(OddPrime(std::uint64_t{2}), std::invalid_argument);
    CHECK_THROWS_AS(OddPrime(std::uint64_t{9}), std::invalid_argument);
    OddPrime p(std::uint64_t{41});
    CHECK(p.certified());
    CHECK(p.u64() == 41);
    OddPrime big((BigInt(1) << 89) - 1);
    CHECK_FALSE(big.certified());
    CHECK_THROWS_AS(big.u64(), std::out_of_range);
}

TEST_CASE("square roots modulo primes")
{
    for (std::uint64_t q = 7; q < 5000; ++q) {
        if (!trial_prime(q) || (q % 8 != 1 && q % 8 != 7))
            continue;
        const std::uint64_t t = sqrt_mod_prime(2, q);
        CHECK(t * t % q == 2);
    }
    CHECK_THROWS_AS(sqrt_mod_prime(2, 3), std::invalid_argument);
}

TEST_CASE("integer helpers")
{
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(99) == 9);
    CHECK(isqrt(100) == 10);
    CHECK(is_square(49));
    CHECK_FALSE(is_square(50));
    CHECK(is_squarefree(123));
    CHECK_FALSE(is_squarefree(12));
    CHECK(squarefree_part(72) == 2);
    CHECK(squarefree_part(41 * 3 * 9) == 123);
    CHECK(field_discriminant(2) == 8);
    CHECK(field_discriminant(41) == 41);
    CHECK(field_discriminant(123) == 492);
    CHECK(is_fundamental_discriminant(492));
    CHECK(is_fundamental_discriminant(5));
    CHECK_FALSE(is_fundamental_discriminant(12 * 4));
    CHECK_FALSE(is_fundamental_discriminant(9));
    auto f = factorize(492);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<std::int64_t, int>{2, 2});
    CHECK(f[2] == std::pair<std::int64_t, int>{41, 1});
}

TEST_CASE("continued fractions of square roots")
{
    auto cf2 = sqrt_cont_frac(2);
    CHECK(cf2.a0 == 1);
    CHECK(cf2.period == std::vector<BigInt>{2});
    auto cf3 = sqrt_cont_frac(3);
    CHECK(cf3.a0 == 1);
    CHECK(cf3.period == std::vector<BigInt>{1, 2});
    auto cf41 = sqrt_cont_frac(41);
    CHECK(cf41.a0 == 6);
    CHECK(cf41.period == std::vector<BigInt>{2, 2, 12});
    CHECK_THROWS_AS(sqrt_cont_frac(4), std::invalid_argument);
    CHECK_THROWS_AS(sqrt_cont_frac(1), std::invalid_argument);
}

TEST_CASE("fundamental units")
{
    auto u2 = fundamental_unit(2);
    CHECK(u2.x == 1);
    CHECK(u2.y == 1);
    CHECK(u2.norm_value == -1);
    auto u3 = fundamental_unit(3);
    CHECK(u3.x == 2);
    CHECK(u3.y == 1);
    CHECK(u3.norm_value == 1);
    auto u123 = fundamental_unit(123);
    CHECK(u123.x == 122);
    CHECK(u123.y == 11);
    CHECK(u123.norm_value == 1);
    auto u41 = fundamental_unit(41);
    CHECK(u41.x == 32);
    CHECK(u41.y == 5);
    CHECK(u41.norm_value == -1);
}

TEST_CASE("fundamental unit solves Pell and no smaller y does, d < 1000")
{
    for (std::int64_t d = 2; d < 1000; ++d) {
        if (is_square(d))
            continue;
        auto u = fundamental_unit(d);
        REQUIRE(u.x * u.x - d * u.y * u.y == u.norm_value);
        CHECK(abs(u.norm_value) == 1);
        if (u.y < 100000) {
            const long long y0 = u.y.get_si();
            for (long long y = 1; y < y0; ++y) {
                CHECK_FALSE(is_square_ll(d * y * y + 1));
                CHECK_FALSE(is_square_ll(d * y * y - 1));
            }
        }
    }
}

TEST_CASE("unit of the maximal order for fundamental discriminants")
{
    auto e5 = order_fundamental_unit(5);  // (1 + sqrt5)/2
    CHECK(e5.x == 1);
    CHECK(e5.y == 1);
    CHECK(e5.norm_value == -1);
    auto e492 = order_fundamental_unit(492);  // 122 + 11 sqrt123
    CHECK(e492.x == 244);
    CHECK(e492.y == 11);
    CHECK(e492.norm_value == 1);
    for (std::int64_t D = 5; D < 3000; ++D) {
        if (!is_fundamental_discriminant(D))
            continue;
        auto e = order_fundamental_unit(D);
        REQUIRE(e.x * e.x - D * e.y * e.y == 4 * e.norm_value);
        if (e.y < 20000) {
            for (long long y = 1; y < e.y.get_si(); ++y) {
                CHECK_FALSE(is_square_ll(D * y * y + 4));
                CHECK_FALSE(is_square_ll(D * y * y - 4));
            }
        }
    }
}

TEST_CASE("norm equation examples")
{
    auto s = solve_norm_equation(41, 8);
    REQUIRE(s);
    CHECK(s->x == 7);
    CHECK(s->y == 1);
    CHECK_FALSE(solve_norm_equation(761, 8));
    CHECK_FALSE(solve_norm_equation(761, -8));
    auto t = solve_norm_equation(2, 7);
    REQUIRE(t);
    CHECK(t->x == 3);
    CHECK(t->y == 1);
    auto sq = solve_norm_equation(5, 4);
    REQUIRE(sq);
    CHECK(sq->y == 0);
    CHECK_THROWS_AS(solve_norm_equation(41, 0), std::invalid_argument);
    CHECK_THROWS_AS(solve_norm_equation(41, 2'000'000), std::out_of_range);
}

TEST_CASE("norm equation x^2 - d y^2 = +-8 agrees with search over y <= 10^4, d < 10^4")
{
    long long solved = 0, confirmed = 0;
    for (long d = 2; d < 10000; ++d) {
        if (is_square_ll(d))
            continue;
        for (long m : {8L, -8L}) {
            auto sol = solve_norm_equation(d, m);
            auto brute = brute_norm(d, m, 10000);
            if (sol) {
                ++solved;
                REQUIRE(sol->x * sol->x - d * sol->y * sol->y == m);
                CHECK(sol->x >= 0);
                CHECK(sol->y >= 0);
            }
            if (brute) {
                ++confirmed;
                REQUIRE(sol);
                CHECK(sol->y == static_cast<long>(*brute));
            } else if (sol) {
                CHECK(sol->y > 10000);
            }
        }
    }
    CHECK(confirmed > 0);
    CHECK(solved >= confirmed);
}
