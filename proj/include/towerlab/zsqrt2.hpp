#pragma once

// Exact arithmetic in Z[sqrt2], the ring of integers of Q(sqrt2): norms,
// signs under both real embeddings, prime elements, quadratic residue
// symbols and Hecke's quadratic reciprocity for this field.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "towerlab/arith.hpp"

namespace towerlab::zsqrt2 {

using arith::BigInt;

/// a + b*sqrt2.
struct ZSqrt2 {
    BigInt a;
    BigInt b;

    ZSqrt2() = default;
    ZSqrt2(BigInt a_, BigInt b_) : a(std::move(a_)), b(std::move(b_)) {}
    ZSqrt2(long a_, long b_) : a(a_), b(b_) {}

    BigInt norm() const { return a * a - 2 * b * b; }
    BigInt trace() const { return 2 * a; }
    ZSqrt2 conj() const { return {a, -b}; }
    bool is_zero() const { return a == 0 && b == 0; }
    /// Coprime to sqrt2, i.e. a odd.
    bool is_odd() const { return mpz_odd_p(a.get_mpz_t()) != 0; }

    friend ZSqrt2 operator+(const ZSqrt2& x, const ZSqrt2& y) { return {x.a + y.a, x.b + y.b}; }
    friend ZSqrt2 operator-(const ZSqrt2& x, const ZSqrt2& y) { return {x.a - y.a, x.b - y.b}; }
    friend ZSqrt2 operator-(const ZSqrt2& x) { return {-x.a, -x.b}; }
    friend ZSqrt2 operator*(const ZSqrt2& x, const ZSqrt2& y)
    {
        return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    friend bool operator==(const ZSqrt2& x, const ZSqrt2& y) { return x.a == y.a && x.b == y.b; }

    std::string str() const;
};

/// Exact quotient x / y, or nullopt when y does not divide x in Z[sqrt2].
std::optional<ZSqrt2> divide(const ZSqrt2& x, const ZSqrt2& y);

/// The fundamental unit 1 + sqrt2.
inline ZSqrt2 fundamental_unit() { return {1, 1}; }
ZSqrt2 power(ZSqrt2 x, unsigned e);

/// Sign of a + b*sqrt2 (embedding sqrt2 -> +sqrt2), decided on integers.
int sign_plus(const ZSqrt2& x);
/// Sign of a - b*sqrt2 (embedding sqrt2 -> -sqrt2).
int sign_minus(const ZSqrt2& x);
bool totally_positive(const ZSqrt2& x);

/// Canonical generator of the ideal (x): the totally positive associate
/// x * u with u = +-(1+sqrt2)^k of least a, ties broken towards b >= 0.
/// Throws std::invalid_argument for x = 0.
ZSqrt2 canonical_associate(const ZSqrt2& x);

/// A prime of Z[sqrt2] above an odd rational prime.
class ZSqrt2Prime {
public:
    /// Validates: degree 1 needs |N(generator)| = below with below = +-1 mod 8,
    /// degree 2 needs generator = below with below = +-3 mod 8. Throws
    /// std::invalid_argument otherwise.
    ZSqrt2Prime(ZSqrt2 generator, int residue_degree, std::uint64_t below);

    const ZSqrt2& generator() const { return generator_; }
    int residue_degree() const { return degree_; }
    std::uint64_t below() const { return below_; }
    /// For degree 1: the image t of sqrt2 in Z/qZ, so that the generator maps to 0.
    std::uint64_t sqrt2_image() const { return sqrt2_image_; }

    bool divides(const ZSqrt2& x) const;
    friend bool operator==(const ZSqrt2Prime& a, const ZSqrt2Prime& b)
    {
        return a.below_ == b.below_ && a.degree_ == b.degree_ && a.sqrt2_image_ == b.sqrt2_image_;
    }

private:
    ZSqrt2 generator_;
    int degree_ = 0;
    std::uint64_t below_ = 0;
    std::uint64_t sqrt2_image_ = 0;
};

struct Splitting {
    std::uint64_t q = 0;
    bool split = false;
    /// Split: {pi_1, pi_2} with pi_1 the canonical generator with b >= 0 and
    /// pi_2 its conjugate. Inert: {q}.
    std::vector<ZSqrt2Prime> primes;
};

/// Decomposition of an odd rational prime in Z[sqrt2].
Splitting split_rational_prime(const arith::OddPrime& q);
Splitting split_rational_prime(std::uint64_t q);

/// Quadratic residue symbol (x / pi) in the residue field of pi.
int symbol_mod_prime(const ZSqrt2& x, const ZSqrt2Prime& pi);

/// Prime ideal factorisation of (y) for odd y != 0, as (prime, exponent).
std::vector<std::pair<ZSqrt2Prime, int>> factor(const ZSqrt2& y);

/// Jacobi-type symbol (x / y) = product of (x / pi)^e over pi^e || (y).
int symbol(const ZSqrt2& x, const ZSqrt2& y);

struct SquareMod4 {
    bool is_square = false;
    std::optional<ZSqrt2> witness;  // xi with x = xi^2 (mod 4)
};

/// Decides x = xi^2 (mod 4 Z[sqrt2]) by scanning all 16 residues xi.
/// Throws std::invalid_argument when sqrt2 divides x.
SquareMod4 is_square_mod4(const ZSqrt2& x);

/// Product over both real embeddings of (-1)^s, s = 1 iff both x and y are
/// negative in that embedding.
int hecke_sign(const ZSqrt2& x, const ZSqrt2& y);

struct ReciprocityCheck {
    bool hypotheses_met = false;
    std::string reason;  // why hypotheses fail, when they do
    int lhs = 0;         // (x / y)
    int sign = 0;        // hecke_sign(x, y)
    int rhs = 0;         // sign * (y / x)
    bool holds() const { return hypotheses_met && lhs == rhs; }
};

/// Evaluates both sides of (x/y) = hecke_sign(x,y) * (y/x). Hypotheses: x, y
/// odd and coprime, one of them a square mod 4.
ReciprocityCheck check_hecke_reciprocity(const ZSqrt2& x, const ZSqrt2& y);

struct InertiaRecord {
    std::uint64_t p = 0;
    std::uint64_t r = 0;
    ZSqrt2 p1, p2;
    bool r_inert = false;
    /// r inert: {(p1/r), (p2/r)}. r split: row i = p_i, column j = r_j.
    std::array<int, 2> inert_symbols{0, 0};
    std::array<std::array<int, 2>, 2> matrix{};
    ZSqrt2 r1, r2;  // r split only
    bool holds = false;
};

/// Inertness of r in Q(sqrt2, sqrt(p_i))/Q(sqrt2) for a admissible pair:
/// for r = 3 mod 8 both symbols (p_i / r) are -1; for r = 7 mod 8 every row
/// and column of ((p_i / r_j)) holds one -1 and one +1.
/// Throws std::invalid_argument when (p, r) is not an admissible pair.
InertiaRecord inertia_classification(std::uint64_t p, std::uint64_t r);

/// Admissible pair: p = 9 mod 16, r = 3 mod 4, both prime, (p/r) = -1, (2/p)_4 = -1.
bool satisfies_condition1(std::uint64_t p, std::uint64_t r);
/// The condition on p alone: p prime, p = 9 mod 16, (2/p)_4 = -1.
bool qualifying_p(std::uint64_t p);

}  // namespace towerlab::zsqrt2
