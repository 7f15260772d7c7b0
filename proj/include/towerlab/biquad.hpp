#pragma once

// Real biquadratic fields Q(sqrt m, sqrt n): exact arithmetic, square tests,
// the unit index q = [E_K : E_1 E_2 E_3] and Kuroda's class number formula
// h(K) = q * h1 * h2 * h3 / 4.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace towerlab::biquad {

using Rational = mpq_class;

/// x + y*sqrt(d) with rational x, y and squarefree d > 1.
struct QuadFieldElement {
    Rational x;
    Rational y;
    std::int64_t d = 0;

    Rational norm() const { return x * x - Rational(d) * y * y; }
    Rational trace() const { return 2 * x; }
    bool is_zero() const { return x == 0 && y == 0; }

    friend QuadFieldElement operator+(const QuadFieldElement& u, const QuadFieldElement& v);
    friend QuadFieldElement operator-(const QuadFieldElement& u, const QuadFieldElement& v);
    friend QuadFieldElement operator*(const QuadFieldElement& u, const QuadFieldElement& v);
    friend bool operator==(const QuadFieldElement& u, const QuadFieldElement& v)
    {
        return u.d == v.d && u.x == v.x && u.y == v.y;
    }
    /// Throws std::domain_error on division by zero.
    QuadFieldElement inverse() const;
    std::string str() const;
};

/// beta with beta^2 = alpha in Q(sqrt d), or nullopt. Throws
/// std::invalid_argument for alpha = 0.
std::optional<QuadFieldElement> is_square_in_quadfield(const QuadFieldElement& alpha);

/// A + B*sqrt(n) with A, B in F = Q(sqrt m): an element of K = Q(sqrt m, sqrt n).
struct BiquadElement {
    QuadFieldElement A;
    QuadFieldElement B;
    std::int64_t n = 0;

    friend BiquadElement operator*(const BiquadElement& u, const BiquadElement& v);
    friend bool operator==(const BiquadElement& u, const BiquadElement& v)
    {
        return u.n == v.n && u.A == v.A && u.B == v.B;
    }
    std::string str() const;
};

std::optional<BiquadElement> is_square_in_biquad(const BiquadElement& u);

/// Radicands of the three quadratic subfields. K is built as F(sqrt n) over
/// F = Q(sqrt m) in the order given.
struct Radicands {
    std::int64_t m = 0;
    std::int64_t n = 0;
    std::int64_t k = 0;  // squarefree part of m*n
};

/// Throws std::invalid_argument unless m, n are distinct squarefree integers > 1.
Radicands normalise(std::int64_t m, std::int64_t n);

struct UnitSquareRoot {
    int sign = 1;
    std::array<int, 3> exponents{0, 0, 0};  // of eps_m, eps_n, eps_k
    BiquadElement root;                      // root^2 = sign * product
};

struct UnitIndex {
    Radicands fields;
    std::array<QuadFieldElement, 3> units;  // fundamental units > 1
    std::array<int, 3> unit_norms{0, 0, 0};
    int q = 0;
    /// One entry per square class of E_1 E_2 E_3 that becomes a square in K,
    /// the trivial class included; q equals its length.
    std::vector<UnitSquareRoot> certificate;
};

/// [E_K : E_1 E_2 E_3] from the square classes -1^s * eps_m^a * eps_n^b * eps_k^c
/// that have a square root in K.
UnitIndex unit_index(std::int64_t m, std::int64_t n);

struct BiquadField {
    Radicands fields;
    std::array<std::uint64_t, 3> subfield_h{0, 0, 0};
    std::array<std::uint64_t, 3> subfield_two_parts{0, 0, 0};
    int q = 0;
    std::uint64_t h = 0;

    std::uint64_t two_part() const;
};

/// Class number of Q(sqrt m, sqrt n) by Kuroda's formula. Throws
/// std::out_of_range when a subfield discriminant exceeds 10^7 and
/// std::logic_error when q*h1*h2*h3/4 is not an integer.
BiquadField kuroda_h(std::int64_t m, std::int64_t n);

struct RankCertificate {
    std::uint64_t p = 0;
    std::uint64_t r = 0;
    std::uint64_t order_A_k1 = 0;  // 2-part of h(Q(sqrt2, sqrt pr))
    bool p1_square_mod4 = false;   // sqrt2 unramified in Q1(sqrt p1)/Q1
    std::string p1;
    std::string structure;  // "(2,2)" when certified, else "uncertified"
    std::vector<std::string> chain;
    bool certified() const { return structure == "(2,2)"; }
};

/// A(k1) = (2,2) for k1 = Q(sqrt2, sqrt pr): order 4 from Kuroda plus two
/// independent unramified quadratic extensions k1(sqrt p), k1(sqrt p1).
/// Throws std::invalid_argument when (p, r) is not an admissible pair.
RankCertificate rank_certificate_k1(std::uint64_t p, std::uint64_t r);

}  // namespace towerlab::biquad
