#include "towerlab/zsqrt2.hpp"

#include <stdexcept>

namespace towerlab::zsqrt2 {

namespace {

int sign_of(const BigInt& v)
{
    return sgn(v);
}

// Sign of a + b*sqrt2 using only integer comparisons.
int embedded_sign(const BigInt& a, const BigInt& b)
{
    const int sa = sign_of(a), sb = sign_of(b);
    if (sb == 0)
        return sa;
    if (sa == 0)
        return sb;
    if (sa == sb)
        return sa;
    // Opposite signs: the larger of a^2 and 2b^2 wins.
    const int cmp_val = cmp(a * a, 2 * b * b);
    return cmp_val > 0 ? sa : sb;
}

std::uint64_t mod_u64(const BigInt& v, std::uint64_t q)
{
    return mpz_fdiv_ui(v.get_mpz_t(), q);
}

std::int64_t to_i64(const BigInt& v, const char* what)
{
    if (!v.fits_slong_p())
        throw std::out_of_range(std::string(what) + ": value exceeds 64 bits");
    return v.get_si();
}

// Nearest integer to u / n.
BigInt round_div(BigInt u, BigInt n)
{
    if (n < 0) {
        u = -u;
        n = -n;
    }
    BigInt r;
    BigInt num = 2 * u + n;
    BigInt den = 2 * n;
    mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return r;
}

// Z[sqrt2] is norm-Euclidean: rounding the exact quotient leaves a
// remainder of smaller absolute norm.
ZSqrt2 gcd_euclid(ZSqrt2 x, ZSqrt2 y)
{
    while (!y.is_zero()) {
        const BigInt n = y.norm();
        const ZSqrt2 num = x * y.conj();
        const ZSqrt2 q{round_div(num.a, n), round_div(num.b, n)};
        ZSqrt2 r = x - q * y;
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

}  // namespace

std::string ZSqrt2::str() const
{
    std::string s = a.get_str();
    if (b == 0)
        return s;
    BigInt ab = abs(b);
    s += (b < 0 ? " - " : " + ");
    if (ab != 1)
        s += ab.get_str();
    return s + "sqrt2";
}

std::optional<ZSqrt2> divide(const ZSqrt2& x, const ZSqrt2& y)
{
    const BigInt n = y.norm();
    if (n == 0)
        throw std::invalid_argument("division by zero in Z[sqrt2]");
    ZSqrt2 num = x * y.conj();
    if (!mpz_divisible_p(num.a.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(num.b.get_mpz_t(), n.get_mpz_t()))
        return std::nullopt;
    return ZSqrt2{num.a / n, num.b / n};
}

ZSqrt2 power(ZSqrt2 x, unsigned e)
{
    ZSqrt2 r{1, 0};
    while (e > 0) {
        if (e & 1)
            r = r * x;
        x = x * x;
        e >>= 1;
    }
    return r;
}

int sign_plus(const ZSqrt2& x)
{
    return embedded_sign(x.a, x.b);
}

int sign_minus(const ZSqrt2& x)
{
    return embedded_sign(x.a, -x.b);
}

bool totally_positive(const ZSqrt2& x)
{
    return sign_plus(x) > 0 && sign_minus(x) > 0;
}

ZSqrt2 canonical_associate(const ZSqrt2& x)
{
    if (x.is_zero())
        throw std::invalid_argument("canonical_associate of zero");
    ZSqrt2 y = x;
    if (y.norm() < 0)
        y = y * fundamental_unit();
    if (sign_plus(y) < 0)
        y = -y;
    // y is totally positive; walk along y * (3 + 2sqrt2)^k towards least a.
    const ZSqrt2 up{3, 2}, down{3, -2};
    for (;;) {
        ZSqrt2 d = y * down;
        if (d.a < y.a) {
            y = std::move(d);
            continue;
        }
        ZSqrt2 u = y * up;
        if (u.a < y.a) {
            y = std::move(u);
            continue;
        }
        if (d.a == y.a && d.b > y.b)
            y = std::move(d);
        else if (u.a == y.a && u.b > y.b)
            y = std::move(u);
        break;
    }
    return y;
}

ZSqrt2Prime::ZSqrt2Prime(ZSqrt2 generator, int residue_degree, std::uint64_t below)
    : generator_(std::move(generator)), degree_(residue_degree), below_(below)
{
    if (below_ < 3 || !arith::is_prime_u64(below_))
        throw std::invalid_argument("ZSqrt2Prime: " + std::to_string(below_) + " is not an odd prime");
    const std::uint64_t r8 = below_ % 8;
    if (degree_ == 1) {
        if (r8 != 1 && r8 != 7)
            throw std::invalid_argument("ZSqrt2Prime: degree 1 needs q = +-1 mod 8");
        if (abs(generator_.norm()) != BigInt(static_cast<unsigned long>(below_)))
            throw std::invalid_argument("ZSqrt2Prime: |N(generator)| != q for " + generator_.str());
        const std::uint64_t a = mod_u64(generator_.a, below_);
        const std::uint64_t b = mod_u64(generator_.b, below_);
        const std::uint64_t b_inv = arith::powmod(b, below_ - 2, below_);
        sqrt2_image_ = arith::mulmod(below_ - a == below_ ? 0 : below_ - a, b_inv, below_);
    } else if (degree_ == 2) {
        if (r8 != 3 && r8 != 5)
            throw std::invalid_argument("ZSqrt2Prime: degree 2 needs q = +-3 mod 8");
        if (!(generator_ == ZSqrt2{BigInt(static_cast<unsigned long>(below_)), BigInt(0)}))
            throw std::invalid_argument("ZSqrt2Prime: inert generator must be q itself");
    } else {
        throw std::invalid_argument("ZSqrt2Prime: residue degree must be 1 or 2");
    }
}

bool ZSqrt2Prime::divides(const ZSqrt2& x) const
{
    const std::uint64_t a = mod_u64(x.a, below_);
    const std::uint64_t b = mod_u64(x.b, below_);
    if (degree_ == 2)
        return a == 0 && b == 0;
    return (a + arith::mulmod(b, sqrt2_image_, below_)) % below_ == 0;
}

Splitting split_rational_prime(const arith::OddPrime& q)
{
    return split_rational_prime(q.u64());
}

Splitting split_rational_prime(std::uint64_t q)
{
    if (q < 3 || !arith::is_prime_u64(q))
        throw std::invalid_argument("split_rational_prime: not an odd prime: " + std::to_string(q));
    Splitting s;
    s.q = q;
    const std::uint64_t r8 = q % 8;
    if (r8 == 3 || r8 == 5) {
        s.primes.emplace_back(ZSqrt2{BigInt(static_cast<unsigned long>(q)), BigInt(0)}, 2, q);
        return s;
    }
    // (q, t + sqrt2) with t^2 = 2 mod q is a prime above q.
    const std::uint64_t t = arith::sqrt_mod_prime(2, q);
    const ZSqrt2 g = gcd_euclid({BigInt(static_cast<unsigned long>(q)), BigInt(0)},
                                {BigInt(static_cast<unsigned long>(t)), BigInt(1)});
    if (abs(g.norm()) != static_cast<unsigned long>(q))
        throw std::logic_error("split_rational_prime: gcd does not have norm q = " + std::to_string(q));
    ZSqrt2 pi = canonical_associate(g);
    if (pi.b < 0)
        pi = pi.conj();
    s.split = true;
    s.primes.emplace_back(pi, 1, q);
    s.primes.emplace_back(pi.conj(), 1, q);
    return s;
}

int symbol_mod_prime(const ZSqrt2& x, const ZSqrt2Prime& pi)
{
    const std::uint64_t q = pi.below();
    const std::uint64_t a = mod_u64(x.a, q);
    const std::uint64_t b = mod_u64(x.b, q);
    if (pi.residue_degree() == 1) {
        const std::uint64_t v = (a + arith::mulmod(b, pi.sqrt2_image(), q)) % q;
        return arith::jacobi(static_cast<std::int64_t>(v), static_cast<std::int64_t>(q));
    }
    // Euler's criterion in Z[sqrt2]/(q), a field of q^2 elements.
    auto mul = [q](std::pair<std::uint64_t, std::uint64_t> u, std::pair<std::uint64_t, std::uint64_t> w) {
        std::uint64_t r0 = (arith::mulmod(u.first, w.first, q)
                            + arith::mulmod(2, arith::mulmod(u.second, w.second, q), q)) % q;
        std::uint64_t r1 = (arith::mulmod(u.first, w.second, q) + arith::mulmod(u.second, w.first, q)) % q;
        return std::pair{r0, r1};
    };
    std::pair<std::uint64_t, std::uint64_t> base{a, b}, acc{1, 0};
    unsigned __int128 e = (static_cast<unsigned __int128>(q) * q - 1) / 2;
    while (e > 0) {
        if (e & 1)
            acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    if (acc.second != 0)
        throw std::logic_error("symbol_mod_prime: Euler criterion left the prime field");
    if (acc.first == 0)
        return 0;
    if (acc.first == 1)
        return 1;
    if (acc.first == q - 1)
        return -1;
    throw std::logic_error("symbol_mod_prime: Euler criterion is not +-1");
}

std::vector<std::pair<ZSqrt2Prime, int>> factor(const ZSqrt2& y)
{
    if (y.is_zero() || !y.is_odd())
        throw std::invalid_argument("factor expects a nonzero element coprime to sqrt2");
    std::vector<std::pair<ZSqrt2Prime, int>> out;
    const std::int64_t n = to_i64(abs(y.norm()), "factor");
    if (n == 1)
        return out;
    for (auto [q, e] : arith::factorize(n)) {
        Splitting s = split_rational_prime(static_cast<std::uint64_t>(q));
        if (!s.split) {
            out.emplace_back(s.primes[0], e / 2);
            continue;
        }
        int total = 0;
        for (const auto& pi : s.primes) {
            int k = 0;
            ZSqrt2 rest = y;
            while (auto quotient = divide(rest, pi.generator())) {
                rest = *quotient;
                ++k;
            }
            if (k > 0)
                out.emplace_back(pi, k);
            total += k;
        }
        if (total != e)
            throw std::logic_error("factor: prime valuations do not account for the norm");
    }
    return out;
}

int symbol(const ZSqrt2& x, const ZSqrt2& y)
{
    int s = 1;
    for (const auto& [pi, e] : factor(y)) {
        int v = symbol_mod_prime(x, pi);
        if (v == 0)
            return 0;
        if (e % 2 == 1)
            s *= v;
    }
    return s;
}

SquareMod4 is_square_mod4(const ZSqrt2& x)
{
    if (!x.is_odd())
        throw std::invalid_argument("is_square_mod4: sqrt2 divides " + x.str());
    const long xa = static_cast<long>(mpz_fdiv_ui(x.a.get_mpz_t(), 4));
    const long xb = static_cast<long>(mpz_fdiv_ui(x.b.get_mpz_t(), 4));
    for (long c = 0; c < 4; ++c) {
        for (long d = 0; d < 4; ++d) {
            if ((c * c + 2 * d * d) % 4 == xa && (2 * c * d) % 4 == xb)
                return {true, ZSqrt2{c, d}};
        }
    }
    return {false, std::nullopt};
}

int hecke_sign(const ZSqrt2& x, const ZSqrt2& y)
{
    int s = 1;
    if (sign_plus(x) < 0 && sign_plus(y) < 0)
        s = -s;
    if (sign_minus(x) < 0 && sign_minus(y) < 0)
        s = -s;
    return s;
}

ReciprocityCheck check_hecke_reciprocity(const ZSqrt2& x, const ZSqrt2& y)
{
    ReciprocityCheck rc;
    if (x.is_zero() || y.is_zero() || !x.is_odd() || !y.is_odd()) {
        rc.reason = "both elements must be nonzero and coprime to sqrt2";
        return rc;
    }
    for (const auto& [pi, e] : factor(y)) {
        if (pi.divides(x)) {
            rc.reason = "elements are not coprime";
            return rc;
        }
    }
    if (!is_square_mod4(x).is_square && !is_square_mod4(y).is_square) {
        rc.reason = "neither element is a square mod 4";
        return rc;
    }
    rc.hypotheses_met = true;
    rc.lhs = symbol(x, y);
    rc.sign = hecke_sign(x, y);
    rc.rhs = rc.sign * symbol(y, x);
    return rc;
}

bool qualifying_p(std::uint64_t p)
{
    return p % 16 == 9 && arith::is_prime_u64(p) && arith::quartic_symbol_2(p) == -1;
}

bool satisfies_condition1(std::uint64_t p, std::uint64_t r)
{
    return qualifying_p(p) && r % 4 == 3 && arith::is_prime_u64(r)
           && arith::jacobi(static_cast<std::int64_t>(p), static_cast<std::int64_t>(r)) == -1;
}

InertiaRecord inertia_classification(std::uint64_t p, std::uint64_t r)
{
    if (!satisfies_condition1(p, r))
        throw std::invalid_argument("inertia_classification: (" + std::to_string(p) + ", " + std::to_string(r)
                                    + ") is not an admissible pair");
    InertiaRecord rec;
    rec.p = p;
    rec.r = r;
    Splitting sp = split_rational_prime(p);
    rec.p1 = sp.primes[0].generator();
    rec.p2 = sp.primes[1].generator();
    const ZSqrt2* ps[2] = {&rec.p1, &rec.p2};
    Splitting sr = split_rational_prime(r);
    if (!sr.split) {
        rec.r_inert = true;
        for (int i = 0; i < 2; ++i)
            rec.inert_symbols[i] = symbol_mod_prime(*ps[i], sr.primes[0]);
        rec.holds = rec.inert_symbols[0] == -1 && rec.inert_symbols[1] == -1;
        return rec;
    }
    rec.r1 = sr.primes[0].generator();
    rec.r2 = sr.primes[1].generator();
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j)
            rec.matrix[i][j] = symbol_mod_prime(*ps[i], sr.primes[j]);
    }
    auto one_each = [](int u, int v) { return (u == -1 && v == 1) || (u == 1 && v == -1); };
    const auto& m = rec.matrix;
    rec.holds = one_each(m[0][0], m[0][1]) && one_each(m[1][0], m[1][1]) && one_each(m[0][0], m[1][0])
                && one_each(m[0][1], m[1][1]);
    return rec;
}

}  // namespace towerlab::zsqrt2
