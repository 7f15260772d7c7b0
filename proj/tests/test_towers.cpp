#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>

#include "towerlab/towers.hpp"

using namespace towerlab::towers;

namespace {

std::vector<mpz_class> ints(std::initializer_list<long> xs)
{
    std::vector<mpz_class> v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("layer polynomials for small n")
{
    CHECK(layer_min_poly(0) == ints({0, 1}));
    CHECK(layer_min_poly(1) == ints({-2, 0, 1}));
    CHECK(layer_min_poly(2) == ints({2, 0, -4, 0, 1}));
    CHECK(layer_min_poly(3) == ints({2, 0, -16, 0, 20, 0, -8, 0, 1}));
    CHECK_THROWS_AS(layer_min_poly(-1), std::out_of_range);
    CHECK_THROWS_AS(layer_min_poly(kMaxLayer + 1), std::out_of_range);
}

TEST_CASE("P_n(x) = P_{n-1}(x^2 - 2), degree 2^n, Eisenstein at 2")
{
    for (int n = 1; n <= kMaxLayer; ++n) {
        const auto p = layer_min_poly(n);
        CHECK(p.size() == (std::size_t{1} << n) + 1);
        CHECK(p.back() == 1);
        CHECK(eisenstein_at_2(p));
        CHECK(substitute_x2_minus_2(layer_min_poly(n - 1)) == p);
    }
}

TEST_CASE("2cos(pi/2^(n+1)) is a root")
{
    for (int n = 1; n <= 6; ++n) {
        // P_n(x) = v_n where v_0 = x and v_{k+1} = v_k^2 - 2, so evaluate by the recursion.
        long double v = 2.0L * std::cos(std::numbers::pi_v<long double> / std::ldexp(1.0L, n + 1));
        for (int k = 0; k < n; ++k)
            v = v * v - 2;
        CHECK(std::fabs(static_cast<double>(v)) < 1e-15);
    }
}

TEST_CASE("Eisenstein test rejects")
{
    CHECK_FALSE(eisenstein_at_2(ints({4, 0, 1})));
    CHECK_FALSE(eisenstein_at_2(ints({2, 1, 1})));
    CHECK_FALSE(eisenstein_at_2(ints({2, 0, 3})));
    CHECK(eisenstein_at_2(ints({2, 0, 1})));
}

TEST_CASE("layer generators")
{
    const auto g = layer_generator(2);
    CHECK(g.n == 2);
    CHECK(g.min_poly == layer_min_poly(2));
    CHECK(g.radicand_chain.find("sqrt") != std::string::npos);
    CHECK(radicand_chain(1) != radicand_chain(2));
}

TEST_CASE("field labels round-trip")
{
    CHECK(field_label(FieldKind::Qn, 2) == "Q2");
    CHECK(field_label(FieldKind::Qn_sqrt_p, 2, 41) == "Q2(sqrt41)");
    CHECK(field_label(FieldKind::kn, 1, 41, 3) == "k1(pr=123)");
    CHECK(field_label(FieldKind::Kn, 2, 41, 3) == "K2(p=41,r=3)");
    for (const std::string s : {"Q0", "Q2", "Q2(sqrt41)", "k1(pr=123)", "K2(p=41,r=3)", "K14(p=9833,r=7)"}) {
        const FieldLabel f = parse_field_label(s);
        CHECK(field_label(f) == s);
    }
    const FieldLabel k = parse_field_label("K2(p=41,r=3)");
    CHECK(k.kind == FieldKind::Kn);
    CHECK(k.p == 41);
    CHECK(k.r == 3);
}

TEST_CASE("field label errors")
{
    for (const std::string s : {"", "Q", "Q-1", "Q02", "q2", "Q2(sqrt 41)", "K2(p=41)", "K2(r=3,p=41)", "k1(pr=0123)", "Q2(sqrt41)x"})
        CHECK_THROWS_AS(parse_field_label(s), std::invalid_argument);
    CHECK_THROWS_AS(field_label(FieldKind::Kn, 2, 41), std::invalid_argument);
    CHECK_THROWS_AS(field_label(FieldKind::Qn, 2, 41), std::invalid_argument);
    CHECK_THROWS_AS(field_label(FieldKind::Qn, -1), std::invalid_argument);
}
