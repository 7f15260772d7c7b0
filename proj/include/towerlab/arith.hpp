#pragma once

// Integer arithmetic underneath everything else: primality, residue
// symbols, continued fractions of quadratic irrationals and Pell-type
// norm equations x^2 - d*y^2 = m.

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace towerlab::arith {

using BigInt = mpz_class;

enum class Primality { composite, prime, probable_prime };

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// Deterministic below 2^64, strong probable-prime (64 rounds) above.
Primality primality(const BigInt& n);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// An odd prime. `certified()` is false when the value exceeds 2^64 and
/// was only shown to be a strong probable prime.
class OddPrime {
public:
    /// Throws std::invalid_argument when `value` is not an odd prime.
    explicit OddPrime(const BigInt& value);
    explicit OddPrime(std::uint64_t value);

    const BigInt& value() const { return value_; }
    bool certified() const { return certified_; }
    bool fits_u64() const { return mpz_sizeinbase(value_.get_mpz_t(), 2) <= 64; }
    /// Throws std::out_of_range when the value does not fit.
    std::uint64_t u64() const;

    friend bool operator==(const OddPrime& a, const OddPrime& b) { return a.value_ == b.value_; }

private:
    BigInt value_;
    bool certified_ = true;
};

/// Jacobi symbol (a/n). Throws std::invalid_argument unless n is odd and positive.
int jacobi(std::int64_t a, std::int64_t n);
int jacobi(const BigInt& a, const BigInt& n);

/// Rational quartic residue symbol (2/p)_4 = 2^((p-1)/4) mod p as +1/-1.
/// Throws std::invalid_argument unless p = 1 (mod 8).
int quartic_symbol_2(const OddPrime& p);
int quartic_symbol_2(std::uint64_t p);

/// Square root of 2 modulo an odd prime q = +-1 (mod 8) (Tonelli-Shanks).
std::uint64_t sqrt_mod_prime(std::uint64_t a, std::uint64_t q);

std::int64_t isqrt(std::int64_t n);
bool is_square(std::int64_t n);
bool is_squarefree(std::int64_t n);
/// Squarefree kernel of a positive integer (n / largest square divisor).
std::int64_t squarefree_part(std::int64_t n);
/// Discriminant of Q(sqrt(m)) for squarefree m != 1.
std::int64_t field_discriminant(std::int64_t m);
bool is_fundamental_discriminant(std::int64_t d);

/// Prime factorisation by trial division, ascending, with multiplicities.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

/// Eratosthenes sieve; result[i] is true when i is prime.
std::vector<bool> prime_sieve(std::uint64_t limit);

/// sqrt(d) = [a0; period...], the period repeating forever.
struct ContinuedFraction {
    BigInt a0;
    std::vector<BigInt> period;
};

/// Throws std::invalid_argument for d < 2 or d a perfect square.
ContinuedFraction sqrt_cont_frac(std::int64_t d);

struct PellSolution {
    BigInt x;
    BigInt y;
    BigInt norm_value;  // x^2 - d*y^2
    std::int64_t d = 0;
};

/// Least x + y*sqrt(d) > 1 in Z[sqrt(d)] with x^2 - d*y^2 = +-1.
PellSolution fundamental_unit(std::int64_t d);

/// Least unit (x + y*sqrt(D))/2 > 1 of the quadratic order of discriminant D
/// (x^2 - D*y^2 = +-4). For fundamental D this is the fundamental unit of
/// the ring of integers. `norm_value` holds the unit's norm, +1 or -1.
PellSolution order_fundamental_unit(std::int64_t disc);

struct NormSolution {
    BigInt x;
    BigInt y;
};

inline constexpr std::int64_t kDefaultNormBound = 1'000'000;

/// Decides x^2 - d*y^2 = m over the integers and returns a solution with
/// x, y >= 0 of least y, or nullopt when none exists. The procedure is
/// complete: every class of primitive solutions is visited through the
/// continued-fraction expansion of (z + sqrt(d))/|m| for each z^2 = d mod |m|,
/// and imprimitive ones through m/f^2 for f^2 | m.
/// Throws std::out_of_range when |m| exceeds `bound`.
std::optional<NormSolution> solve_norm_equation(std::int64_t d, std::int64_t m,
                                                std::int64_t bound = kDefaultNormBound);

}  // namespace towerlab::arith
