#pragma once

// Ambiguous class number formula for quadratic extensions F/K and the
// Hilbert symbols over Q needed to evaluate its unit norm index.

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace towerlab::genus {

using Rational = mpq_class;

/// A place of Q: a rational prime, or 0 for the real place.
struct Place {
    std::int64_t prime = 0;
    static Place real() { return {0}; }
    static Place finite(std::int64_t p);  // throws unless p is prime
    bool is_real() const { return prime == 0; }
};

/// (a, b)_v for nonzero rationals. Throws std::invalid_argument on zero.
int hilbert_symbol(const Rational& a, const Rational& b, Place v);
int hilbert_symbol(std::int64_t a, std::int64_t b, Place v);

/// Places where (a, b)_v can be -1: the real place, 2 and the primes
/// dividing the numerators or denominators of a and b.
std::vector<Place> relevant_places(const Rational& a, const Rational& b);

/// Whether -1 is a norm from Q(sqrt d), via (-1, d)_v = 1 at every place.
bool minus_one_is_norm(std::int64_t d);

struct GenusInput {
    std::uint64_t base_class_number_2part = 1;
    int t = 1;  // ramified places, finite and infinite
    std::uint64_t unit_norm_index = 1;
    std::optional<std::uint64_t> unit_norm_index_units_only;
};

struct AmbiguousOrders {
    std::uint64_t classes = 0;                 // #A(F)^G
    std::optional<std::uint64_t> strong;       // #B(F)^G
};

/// #A(F)^G = base * 2^(t-1) / index. Throws std::invalid_argument on a
/// malformed input or a non-integral result.
AmbiguousOrders ambiguous_order(const GenusInput& in);

/// 2-rank of A(F) when A(K) = 1: (t - 1) - log2(index). Throws
/// std::invalid_argument when the base 2-class group is not trivial.
int rank_bound(const GenusInput& in);

/// Genus data for Q(sqrt d)/Q with d squarefree > 1. The extension is real,
/// so only finite primes dividing the discriminant ramify; the index is
/// 1 or 2 according to whether -1 is a norm.
GenusInput quadratic_over_q(std::int64_t d);

}  // namespace towerlab::genus
