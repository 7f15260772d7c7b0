#include "towerlab/genus.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "towerlab/arith.hpp"

namespace towerlab::genus {

namespace {

using arith::BigInt;

// Nonzero rational -> integer in the same square class.
BigInt square_class_rep(const Rational& q)
{
    if (q == 0)
        throw std::invalid_argument("hilbert_symbol: arguments must be nonzero");
    return q.get_num() * q.get_den();
}

int valuation(BigInt& u, const BigInt& p)
{
    int v = 0;
    while (mpz_divisible_p(u.get_mpz_t(), p.get_mpz_t())) {
        u /= p;
        ++v;
    }
    return v;
}

int mod_int(const BigInt& u, unsigned long m)
{
    return static_cast<int>(mpz_fdiv_ui(u.get_mpz_t(), m));
}

bool is_power_of_two(std::uint64_t x)
{
    return x != 0 && std::has_single_bit(x);
}

void add_prime_factors(const BigInt& n, std::vector<std::int64_t>& out)
{
    BigInt a = abs(n);
    if (!a.fits_slong_p())
        throw std::out_of_range("relevant_places: argument too large to factor");
    for (const auto& [p, e] : arith::factorize(a.get_si()))
        out.push_back(p);
}

}  // namespace

Place Place::finite(std::int64_t p)
{
    if (p < 2 || !arith::is_prime_u64(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("Place::finite: " + std::to_string(p) + " is not prime");
    return {p};
}

int hilbert_symbol(const Rational& a, const Rational& b, Place v)
{
    BigInt u = square_class_rep(a);
    BigInt w = square_class_rep(b);
    if (v.is_real())
        return (u < 0 && w < 0) ? -1 : 1;

    const BigInt p(static_cast<long>(v.prime));
    const int alpha = valuation(u, p);
    const int beta = valuation(w, p);
    if (v.prime == 2) {
        const int um = mod_int(u, 8), wm = mod_int(w, 8);
        const int eps_u = ((um - 1) / 2) & 1, eps_w = ((wm - 1) / 2) & 1;
        const int om_u = ((um * um - 1) / 8) & 1, om_w = ((wm * wm - 1) / 8) & 1;
        const int e = eps_u * eps_w + alpha * om_w + beta * om_u;
        return (e & 1) ? -1 : 1;
    }
    int s = 1;
    if ((alpha & 1) && (beta & 1) && mod_int(p, 4) == 3)
        s = -s;
    if (beta & 1)
        s *= arith::jacobi(u, p);
    if (alpha & 1)
        s *= arith::jacobi(w, p);
    return s;
}

int hilbert_symbol(std::int64_t a, std::int64_t b, Place v)
{
    return hilbert_symbol(Rational(static_cast<long>(a)), Rational(static_cast<long>(b)), v);
}

std::vector<Place> relevant_places(const Rational& a, const Rational& b)
{
    std::vector<std::int64_t> primes{2};
    add_prime_factors(a.get_num(), primes);
    add_prime_factors(a.get_den(), primes);
    add_prime_factors(b.get_num(), primes);
    add_prime_factors(b.get_den(), primes);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

    std::vector<Place> out{Place::real()};
    for (std::int64_t p : primes)
        out.push_back(Place{p});
    return out;
}

bool minus_one_is_norm(std::int64_t d)
{
    if (d <= 1 || !arith::is_squarefree(d))
        throw std::invalid_argument("minus_one_is_norm: d must be squarefree > 1");
    for (Place v : relevant_places(-1, d)) {
        if (hilbert_symbol(-1, d, v) != 1)
            return false;
    }
    return true;
}

AmbiguousOrders ambiguous_order(const GenusInput& in)
{
    if (in.t < 1 || in.t > 62)
        throw std::invalid_argument("ambiguous_order: t must lie in [1, 62]");
    if (!is_power_of_two(in.base_class_number_2part) || !is_power_of_two(in.unit_norm_index))
        throw std::invalid_argument("ambiguous_order: base 2-part and index must be powers of 2");

    auto eval = [&](std::uint64_t index) {
        const std::uint64_t num = in.base_class_number_2part << (in.t - 1);
        if (num % index != 0)
            throw std::invalid_argument("ambiguous_order: base * 2^(t-1) = " + std::to_string(num)
                                        + " is not divisible by the index " + std::to_string(index));
        return num / index;
    };
    AmbiguousOrders out;
    out.classes = eval(in.unit_norm_index);
    if (in.unit_norm_index_units_only) {
        if (!is_power_of_two(*in.unit_norm_index_units_only))
            throw std::invalid_argument("ambiguous_order: units-only index must be a power of 2");
        out.strong = eval(*in.unit_norm_index_units_only);
    }
    return out;
}

int rank_bound(const GenusInput& in)
{
    if (in.base_class_number_2part != 1)
        throw std::invalid_argument("rank_bound: needs a trivial base 2-class group");
    const std::uint64_t amb = ambiguous_order(in).classes;
    return std::countr_zero(amb);
}

GenusInput quadratic_over_q(std::int64_t d)
{
    if (d <= 1 || !arith::is_squarefree(d))
        throw std::invalid_argument("quadratic_over_q: d must be squarefree > 1 (real quadratic)");
    GenusInput in;
    const std::int64_t disc = arith::field_discriminant(d);
    in.t = static_cast<int>(arith::factorize(disc).size());
    in.unit_norm_index = minus_one_is_norm(d) ? 1 : 2;
    const arith::PellSolution eps = arith::order_fundamental_unit(disc);
    in.unit_norm_index_units_only = eps.norm_value == -1 ? 1 : 2;
    return in;
}

}  // namespace towerlab::genus
