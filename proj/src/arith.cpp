#include "towerlab/arith.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace towerlab::arith {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

std::int64_t pos_mod(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// One step of the expansion of (P + sqrt(D))/Q with Q | D - P^2.
struct QuadraticState {
    std::int64_t P;
    std::int64_t Q;
    auto operator<=>(const QuadraticState&) const = default;
};

std::int64_t partial_quotient(QuadraticState s, std::int64_t root)
{
    return s.Q > 0 ? floor_div(s.P + root, s.Q) : floor_div(s.P + root + 1, s.Q);
}

QuadraticState advance(QuadraticState s, std::int64_t a, std::int64_t D)
{
    std::int64_t P = a * s.Q - s.P;
    std::int64_t Q = (D - P * P) / s.Q;
    return {P, Q};
}

// Expands (P0 + sqrt(D))/Q0 through its pre-period and two full periods.
// For every i >= 1 with |Q_i| == 1 reports (G_{i-1}, B_{i-1}); these satisfy
// G^2 - D*B^2 = (-1)^i * Q_i * Q0.
template <class Visit>
void expand_two_periods(std::int64_t D, QuadraticState start, Visit&& visit)
{
    const std::int64_t root = isqrt(D);
    BigInt g_prev2 = -start.P, g_prev1 = start.Q;
    BigInt b_prev2 = 1, b_prev1 = 0;
    std::map<QuadraticState, std::size_t> seen;
    QuadraticState s = start;
    std::size_t stop_at = 0;
    for (std::size_t i = 0;; ++i) {
        if (i >= 1 && (s.Q == 1 || s.Q == -1))
            visit(g_prev1, b_prev1);
        if (stop_at == 0) {
            auto [it, fresh] = seen.emplace(s, i);
            if (!fresh)
                stop_at = i + (i - it->second);
        } else if (i >= stop_at) {
            return;
        }
        const std::int64_t a = partial_quotient(s, root);
        BigInt g = a * g_prev1 + g_prev2;
        BigInt b = a * b_prev1 + b_prev2;
        g_prev2 = std::move(g_prev1);
        g_prev1 = std::move(g);
        b_prev2 = std::move(b_prev1);
        b_prev1 = std::move(b);
        s = advance(s, a, D);
    }
}

void require_nonsquare(std::int64_t d, const char* what)
{
    if (d < 2 || is_square(d))
        throw std::invalid_argument(std::string(what) + ": radicand must be a positive non-square, got "
                                    + std::to_string(d));
}

}  // namespace

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1)
            result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime_u64(std::uint64_t n)
{
    if (n < 2)
        return false;
    static constexpr std::uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint64_t p : small) {
        if (n % p == 0)
            return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These twelve bases are deterministic below 3.3e24.
    for (std::uint64_t a : small) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

Primality primality(const BigInt& n)
{
    if (n < 2)
        return Primality::composite;
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64)
        return is_prime_u64(mpz_get_ui(n.get_mpz_t())) ? Primality::prime : Primality::composite;
    int verdict = mpz_probab_prime_p(n.get_mpz_t(), 64);
    if (verdict == 0)
        return Primality::composite;
    return verdict == 2 ? Primality::prime : Primality::probable_prime;
}

OddPrime::OddPrime(const BigInt& value) : value_(value)
{
    Primality verdict = primality(value_);
    if (verdict == Primality::composite || value_ == 2)
        throw std::invalid_argument("not an odd prime: " + value_.get_str());
    certified_ = verdict == Primality::prime;
}

OddPrime::OddPrime(std::uint64_t value) : OddPrime(BigInt(static_cast<unsigned long>(value))) {}

std::uint64_t OddPrime::u64() const
{
    if (!fits_u64())
        throw std::out_of_range("prime exceeds 64 bits");
    return mpz_get_ui(value_.get_mpz_t());
}

int jacobi(std::int64_t a, std::int64_t n)
{
    if (n <= 0 || (n & 1) == 0)
        throw std::invalid_argument("jacobi: modulus must be odd and positive, got " + std::to_string(n));
    std::uint64_t x = static_cast<std::uint64_t>(pos_mod(a, n));
    std::uint64_t m = static_cast<std::uint64_t>(n);
    int result = 1;
    while (x != 0) {
        while ((x & 1) == 0) {
            x >>= 1;
            std::uint64_t r = m & 7;
            if (r == 3 || r == 5)
                result = -result;
        }
        std::swap(x, m);
        if ((x & 3) == 3 && (m & 3) == 3)
            result = -result;
        x %= m;
    }
    return m == 1 ? result : 0;
}

int jacobi(const BigInt& a, const BigInt& n)
{
    if (n <= 0 || mpz_even_p(n.get_mpz_t()))
        throw std::invalid_argument("jacobi: modulus must be odd and positive, got " + n.get_str());
    return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

int quartic_symbol_2(const OddPrime& p)
{
    if (p.fits_u64())
        return quartic_symbol_2(p.u64());
    const BigInt& v = p.value();
    if (mpz_fdiv_ui(v.get_mpz_t(), 8) != 1)
        throw std::invalid_argument("quartic_symbol_2: p must be 1 mod 8");
    BigInt e = (v - 1) / 4, r;
    BigInt two = 2;
    mpz_powm(r.get_mpz_t(), two.get_mpz_t(), e.get_mpz_t(), v.get_mpz_t());
    if (r == 1)
        return 1;
    if (r == v - 1)
        return -1;
    throw std::logic_error("quartic_symbol_2: 2^((p-1)/4) is not +-1; p is not prime");
}

int quartic_symbol_2(std::uint64_t p)
{
    if (p % 8 != 1)
        throw std::invalid_argument("quartic_symbol_2: p must be 1 mod 8, got " + std::to_string(p));
    std::uint64_t r = powmod(2, (p - 1) / 4, p);
    if (r == 1)
        return 1;
    if (r == p - 1)
        return -1;
    throw std::logic_error("quartic_symbol_2: 2^((p-1)/4) is not +-1; p is not prime");
}

std::uint64_t sqrt_mod_prime(std::uint64_t a, std::uint64_t q)
{
    a %= q;
    if (a == 0)
        return 0;
    if (powmod(a, (q - 1) / 2, q) != 1)
        throw std::invalid_argument("sqrt_mod_prime: not a quadratic residue");
    if (q % 4 == 3)
        return powmod(a, (q + 1) / 4, q);
    std::uint64_t s = q - 1;
    int e = 0;
    while ((s & 1) == 0) {
        s >>= 1;
        ++e;
    }
    std::uint64_t z = 2;
    while (powmod(z, (q - 1) / 2, q) != q - 1)
        ++z;
    std::uint64_t x = powmod(a, (s + 1) / 2, q);
    std::uint64_t b = powmod(a, s, q);
    std::uint64_t g = powmod(z, s, q);
    int r = e;
    while (b != 1) {
        int m = 0;
        for (std::uint64_t t = b; t != 1; t = mulmod(t, t, q))
            ++m;
        std::uint64_t gs = g;
        for (int i = 0; i < r - m - 1; ++i)
            gs = mulmod(gs, gs, q);
        x = mulmod(x, gs, q);
        g = mulmod(gs, gs, q);
        b = mulmod(b, g, q);
        r = m;
    }
    return x;
}

std::int64_t isqrt(std::int64_t n)
{
    if (n < 0)
        throw std::invalid_argument("isqrt of negative number");
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && static_cast<__int128>(r) * r > n)
        --r;
    while (static_cast<__int128>(r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

bool is_square(std::int64_t n)
{
    if (n < 0)
        return false;
    std::int64_t r = isqrt(n);
    return r * r == n;
}

bool is_squarefree(std::int64_t n)
{
    if (n == 0)
        return false;
    for (auto [p, e] : factorize(n < 0 ? -n : n)) {
        if (e > 1)
            return false;
    }
    return true;
}

std::int64_t squarefree_part(std::int64_t n)
{
    if (n <= 0)
        throw std::invalid_argument("squarefree_part expects a positive integer");
    std::int64_t r = 1;
    for (auto [p, e] : factorize(n)) {
        if (e % 2 == 1)
            r *= p;
    }
    return r;
}

std::int64_t field_discriminant(std::int64_t m)
{
    if (m == 1 || m == 0 || !is_squarefree(m))
        throw std::invalid_argument("field_discriminant expects a squarefree radicand != 1");
    return pos_mod(m, 4) == 1 ? m : 4 * m;
}

bool is_fundamental_discriminant(std::int64_t d)
{
    if (d == 0 || d == 1)
        return false;
    std::int64_t r = pos_mod(d, 4);
    if (r == 1)
        return is_squarefree(d);
    if (r != 0)
        return false;
    std::int64_t m = d / 4;
    std::int64_t mr = pos_mod(m, 4);
    return (mr == 2 || mr == 3) && is_squarefree(m);
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n)
{
    if (n <= 0)
        throw std::invalid_argument("factorize expects a positive integer");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0)
            continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

std::vector<bool> prime_sieve(std::uint64_t limit)
{
    std::vector<bool> is_p(limit + 1, true);
    is_p[0] = false;
    if (limit >= 1)
        is_p[1] = false;
    for (std::uint64_t i = 2; i * i <= limit; ++i) {
        if (!is_p[i])
            continue;
        for (std::uint64_t j = i * i; j <= limit; j += i)
            is_p[j] = false;
    }
    return is_p;
}

ContinuedFraction sqrt_cont_frac(std::int64_t d)
{
    require_nonsquare(d, "sqrt_cont_frac");
    const std::int64_t root = isqrt(d);
    ContinuedFraction cf;
    cf.a0 = root;
    // After the first step the expansion of sqrt(d) is purely periodic and
    // the period closes when Q returns to 1.
    QuadraticState s = advance({0, 1}, root, d);
    while (s.Q != 1) {
        std::int64_t a = partial_quotient(s, root);
        cf.period.emplace_back(a);
        s = advance(s, a, d);
    }
    cf.period.emplace_back(2 * root);
    return cf;
}

PellSolution fundamental_unit(std::int64_t d)
{
    require_nonsquare(d, "fundamental_unit");
    const ContinuedFraction cf = sqrt_cont_frac(d);
    const std::size_t len = cf.period.size();
    // Convergent p_{len-1}/q_{len-1}.
    BigInt p_prev = 1, p_cur = cf.a0;
    BigInt q_prev = 0, q_cur = 1;
    for (std::size_t i = 0; i + 1 < len; ++i) {
        BigInt p_next = cf.period[i] * p_cur + p_prev;
        BigInt q_next = cf.period[i] * q_cur + q_prev;
        p_prev = std::move(p_cur);
        p_cur = std::move(p_next);
        q_prev = std::move(q_cur);
        q_cur = std::move(q_next);
    }
    PellSolution sol{p_cur, q_cur, 0, d};
    sol.norm_value = sol.x * sol.x - BigInt(static_cast<long>(d)) * sol.y * sol.y;
    if (sol.norm_value != (len % 2 == 0 ? 1 : -1))
        throw std::logic_error("fundamental_unit: convergent failed the Pell identity");
    return sol;
}

PellSolution order_fundamental_unit(std::int64_t disc)
{
    if (disc < 5 || pos_mod(disc, 4) > 1 || is_square(disc))
        throw std::invalid_argument("order_fundamental_unit: invalid discriminant " + std::to_string(disc));
    const std::int64_t root = isqrt(disc);
    std::int64_t b = root;
    if ((b - disc) % 2 != 0)
        --b;
    // (b + sqrt(D))/2 is reduced; its expansion is purely periodic and the
    // period closes when Q returns to 2.
    const QuadraticState start{b, 2};
    BigInt g_prev2 = -start.P, g_prev1 = start.Q;
    BigInt b_prev2 = 1, b_prev1 = 0;
    QuadraticState s = start;
    do {
        std::int64_t a = partial_quotient(s, root);
        BigInt g = a * g_prev1 + g_prev2;
        BigInt h = a * b_prev1 + b_prev2;
        g_prev2 = std::move(g_prev1);
        g_prev1 = std::move(g);
        b_prev2 = std::move(b_prev1);
        b_prev1 = std::move(h);
        s = advance(s, a, disc);
    } while (s != start);
    PellSolution sol{g_prev1, b_prev1, 0, disc};
    BigInt four_norm = sol.x * sol.x - BigInt(static_cast<long>(disc)) * sol.y * sol.y;
    if (four_norm != 4 && four_norm != -4)
        throw std::logic_error("order_fundamental_unit: convergent failed the norm identity");
    sol.norm_value = four_norm / 4;
    return sol;
}

std::optional<NormSolution> solve_norm_equation(std::int64_t d, std::int64_t m, std::int64_t bound)
{
    require_nonsquare(d, "solve_norm_equation");
    if (m == 0)
        throw std::invalid_argument("solve_norm_equation: m must be nonzero");
    const std::int64_t abs_m = m < 0 ? -m : m;
    if (abs_m > bound)
        throw std::out_of_range("solve_norm_equation: |m| = " + std::to_string(abs_m) + " exceeds bound "
                                + std::to_string(bound));

    std::optional<NormSolution> best;
    auto offer = [&](BigInt x, BigInt y) {
        x = abs(x);
        y = abs(y);
        if (!best || y < best->y || (y == best->y && x < best->x))
            best = NormSolution{std::move(x), std::move(y)};
    };

    if (m > 0 && is_square(m))
        offer(isqrt(m), 0);

    const BigInt big_d = static_cast<long>(d);
    const BigInt big_m = static_cast<long>(m);
    for (std::int64_t f = 1; f * f <= abs_m; ++f) {
        if (abs_m % (f * f) != 0)
            continue;
        const std::int64_t n = m / (f * f);
        const std::int64_t abs_n = n < 0 ? -n : n;
        const BigInt target = static_cast<long>(n);
        for (std::int64_t z = -((abs_n - 1) / 2); z <= abs_n / 2; ++z) {
            if (pos_mod(static_cast<std::int64_t>((static_cast<__int128>(z) * z - d) % abs_n), abs_n) != 0)
                continue;
            expand_two_periods(d, {z, abs_n}, [&](const BigInt& g, const BigInt& b) {
                if (g * g - big_d * b * b == target)
                    offer(g * f, b * f);
            });
        }
    }
    if (best && best->x * best->x - big_d * best->y * best->y != big_m)
        throw std::logic_error("solve_norm_equation: produced a non-solution");
    return best;
}

}  // namespace towerlab::arith
