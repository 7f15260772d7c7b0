#pragma once

// Scans over primes p = 9 mod 16 with (2/p)_4 = -1: admissible pairs,
// the sign of (a/p) for p = a^2 - 2b^2, solvability of x^2 - p y^2 = +-8,
// per-pair verification bundles and a stability check on layer sequences.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "towerlab/arith.hpp"
#include "towerlab/report.hpp"
#include "towerlab/zsqrt2.hpp"

namespace towerlab::scanner {

using arith::BigInt;

inline constexpr std::uint64_t kMaxScanP = 100'000'000;
inline constexpr std::uint64_t kMaxPell8P = 10'000'000;

struct CondOnePair {
    std::uint64_t p = 0;
    std::uint64_t r = 0;
    zsqrt2::ZSqrt2 p1, p2;  // p = p1 * p2, p1 the canonical generator with b >= 0
    BigInt a, b;            // p = a^2 - 2b^2, a, b > 0, a least
};

/// p = a^2 - 2b^2 with a, b > 0 and a least. Throws std::invalid_argument
/// unless p is a prime = +-1 mod 8.
std::pair<BigInt, BigInt> minimal_ab(std::uint64_t p);

/// Primes p <= p_max with p = 9 mod 16 and (2/p)_4 = -1, ascending.
/// Throws std::out_of_range when p_max > 10^8.
std::vector<std::uint64_t> qualifying_primes(std::uint64_t p_max, unsigned threads = 0);

/// All admissible pairs with p <= p_max and r in r_set, sorted by (p, r).
/// Throws std::out_of_range when p_max > 10^8 and std::invalid_argument
/// when r_set holds anything but primes = 3 mod 4.
std::vector<CondOnePair> enumerate_condition1(std::uint64_t p_max, const std::vector<std::uint64_t>& r_set,
                                              unsigned threads = 0);

struct QuestionRow {
    std::uint64_t p = 0;
    BigInt a, b;
    int a_symbol = 0;  // (a/p)
    int b_symbol = 0;  // (b/p)
    bool equivalence_holds() const { return (a_symbol == -1) == (b_symbol == 1); }
};

struct QuestionReport {
    std::uint64_t p_max = 0;
    std::vector<QuestionRow> rows;
    std::vector<std::uint64_t> counterexamples;        // (a/p) = +1
    std::vector<std::uint64_t> equivalence_failures;   // (a/p) = -1 and (b/p) = 1 disagree
};

QuestionReport question_scan(std::uint64_t p_max, unsigned threads = 0);

struct Pell8Row {
    std::uint64_t p = 0;
    bool solvable = false;
    int sign = 0;  // +8 or -8 for the solution found
    BigInt x, y;
};

struct Pell8Report {
    std::uint64_t p_max = 0;
    std::vector<Pell8Row> rows;
    std::vector<std::uint64_t> exceptional;  // x^2 - p y^2 = +-8 unsolvable
};

/// Throws std::out_of_range when p_max > 10^7.
Pell8Report pell8_scan(std::uint64_t p_max, unsigned threads = 0);

/// Whether x^2 - p y^2 = 8 or -8 has an integer solution, with one if so.
std::optional<Pell8Row> pell8_solution(std::uint64_t p);

/// Checks C1..C8 for one pair. Checks that cannot be evaluated are
/// reported with verdict error; nothing is dropped.
report::VerificationReport verify_pair(std::uint64_t p, std::uint64_t r);

enum class Stability { stable, violation, undetermined };
std::string to_string(Stability s);

struct StabilityVerdict {
    Stability verdict = Stability::undetermined;
    std::optional<std::size_t> first_repeat;  // n with a_n = a_(n+1), n >= n0
    std::optional<std::size_t> change_at;     // first later n where the value moves
};

/// Once a_n = a_(n+1) for some n >= n0 the sequence must stay constant.
/// `values[n]` is the datum at layer n.
StabilityVerdict fukuda_stability_check(const std::vector<std::uint64_t>& values, std::size_t n0);

/// Default worker count: hardware concurrency, at least 1.
unsigned default_threads();

}  // namespace towerlab::scanner
