#include "towerlab/biquad.hpp"

#include <numeric>
#include <stdexcept>

#include "towerlab/arith.hpp"
#include "towerlab/quadforms.hpp"
#include "towerlab/zsqrt2.hpp"

namespace towerlab::biquad {

namespace {

using arith::BigInt;

void require_same_field(const QuadFieldElement& u, const QuadFieldElement& v)
{
    if (u.d != v.d)
        throw std::invalid_argument("quadratic field elements live in different fields");
}

std::optional<Rational> rational_sqrt(const Rational& r)
{
    if (r < 0)
        return std::nullopt;
    const mpz_class& num = r.get_num();
    const mpz_class& den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    Rational out(sn, sd);
    out.canonicalize();
    return out;
}

QuadFieldElement rational(const Rational& x, std::int64_t d)
{
    return {x, 0, d};
}

QuadFieldElement divide(const QuadFieldElement& u, const QuadFieldElement& v)
{
    return u * v.inverse();
}

// Fundamental unit > 1 of Q(sqrt s) as x + y*sqrt(s).
QuadFieldElement field_unit(std::int64_t s, int& norm)
{
    const std::int64_t disc = arith::field_discriminant(s);
    arith::PellSolution eps = arith::order_fundamental_unit(disc);
    norm = static_cast<int>(eps.norm_value.get_si());
    Rational x(eps.x, 2);
    x.canonicalize();
    Rational y = disc == s ? Rational(eps.y, 2) : Rational(eps.y);
    y.canonicalize();
    return {x, y, s};
}

std::uint64_t two_part_of(std::uint64_t h)
{
    return h & (~h + 1);
}

}  // namespace

QuadFieldElement operator+(const QuadFieldElement& u, const QuadFieldElement& v)
{
    require_same_field(u, v);
    return {u.x + v.x, u.y + v.y, u.d};
}

QuadFieldElement operator-(const QuadFieldElement& u, const QuadFieldElement& v)
{
    require_same_field(u, v);
    return {u.x - v.x, u.y - v.y, u.d};
}

QuadFieldElement operator*(const QuadFieldElement& u, const QuadFieldElement& v)
{
    require_same_field(u, v);
    return {u.x * v.x + Rational(u.d) * u.y * v.y, u.x * v.y + u.y * v.x, u.d};
}

QuadFieldElement QuadFieldElement::inverse() const
{
    const Rational nrm = norm();
    if (nrm == 0)
        throw std::domain_error("inverse of zero in a quadratic field");
    return {x / nrm, -y / nrm, d};
}

std::string QuadFieldElement::str() const
{
    if (y == 0)
        return x.get_str();
    return x.get_str() + (y < 0 ? " - " : " + ") + Rational(abs(y)).get_str() + "*sqrt" + std::to_string(d);
}

std::optional<QuadFieldElement> is_square_in_quadfield(const QuadFieldElement& alpha)
{
    if (alpha.is_zero())
        throw std::invalid_argument("is_square_in_quadfield: alpha must be nonzero");
    if (alpha.y == 0) {
        if (auto r = rational_sqrt(alpha.x))
            return QuadFieldElement{*r, 0, alpha.d};
        Rational over_d = alpha.x / Rational(alpha.d);
        if (auto r = rational_sqrt(over_d))
            return QuadFieldElement{0, *r, alpha.d};
        return std::nullopt;
    }
    // (c + e*sqrt d)^2 = alpha forces c^2 - d e^2 = +-sqrt(N(alpha)) and
    // c^2 + d e^2 = x, so c^2 = (x +- sqrt N)/2 and e = y/(2c).
    auto t = rational_sqrt(alpha.norm());
    if (!t)
        return std::nullopt;
    for (int sign : {1, -1}) {
        Rational c2 = (alpha.x + sign * *t) / 2;
        auto c = rational_sqrt(c2);
        if (!c || *c == 0)
            continue;
        QuadFieldElement beta{*c, alpha.y / (2 * *c), alpha.d};
        if (beta * beta == alpha)
            return beta;
    }
    return std::nullopt;
}

BiquadElement operator*(const BiquadElement& u, const BiquadElement& v)
{
    if (u.n != v.n)
        throw std::invalid_argument("biquadratic elements live in different fields");
    const QuadFieldElement n = rational(Rational(u.n), u.A.d);
    return {u.A * v.A + n * u.B * v.B, u.A * v.B + u.B * v.A, u.n};
}

std::string BiquadElement::str() const
{
    return "(" + A.str() + ") + (" + B.str() + ")*sqrt" + std::to_string(n);
}

std::optional<BiquadElement> is_square_in_biquad(const BiquadElement& u)
{
    const std::int64_t m = u.A.d;
    if (u.B.is_zero()) {
        if (auto r = is_square_in_quadfield(u.A))
            return BiquadElement{*r, rational(0, m), u.n};
        if (auto r = is_square_in_quadfield(divide(u.A, rational(Rational(u.n), m))))
            return BiquadElement{rational(0, m), *r, u.n};
        return std::nullopt;
    }
    const QuadFieldElement n = rational(Rational(u.n), m);
    const QuadFieldElement relative_norm = u.A * u.A - n * u.B * u.B;
    if (relative_norm.is_zero())
        return std::nullopt;
    auto s = is_square_in_quadfield(relative_norm);
    if (!s)
        return std::nullopt;
    const QuadFieldElement half = rational(Rational(1, 2), m);
    for (int sign : {1, -1}) {
        QuadFieldElement c2 = (sign == 1 ? u.A + *s : u.A - *s) * half;
        if (c2.is_zero())
            continue;
        auto c = is_square_in_quadfield(c2);
        if (!c)
            continue;
        BiquadElement beta{*c, divide(u.B, rational(2, m) * *c), u.n};
        if (beta * beta == u)
            return beta;
    }
    return std::nullopt;
}

Radicands normalise(std::int64_t m, std::int64_t n)
{
    if (m <= 1 || n <= 1 || m == n || !arith::is_squarefree(m) || !arith::is_squarefree(n))
        throw std::invalid_argument("biquadratic field needs distinct squarefree radicands > 1, got ("
                                    + std::to_string(m) + ", " + std::to_string(n) + ")");
    const std::int64_t g = std::gcd(m, n);
    return {m, n, (m / g) * (n / g)};
}

UnitIndex unit_index(std::int64_t m, std::int64_t n)
{
    UnitIndex ui;
    ui.fields = normalise(m, n);
    const std::int64_t k = ui.fields.k;
    const std::int64_t g = std::gcd(m, n);  // sqrt(k) = sqrt(m)*sqrt(n)/g

    ui.units[0] = field_unit(m, ui.unit_norms[0]);
    ui.units[1] = field_unit(n, ui.unit_norms[1]);
    ui.units[2] = field_unit(k, ui.unit_norms[2]);

    // All three units as elements A + B*sqrt(n) over F = Q(sqrt m).
    const std::array<BiquadElement, 3> embedded{
        BiquadElement{ui.units[0], rational(0, m), n},
        BiquadElement{rational(ui.units[1].x, m), rational(ui.units[1].y, m), n},
        BiquadElement{rational(ui.units[2].x, m), QuadFieldElement{0, ui.units[2].y / Rational(g), m}, n},
    };
    const BiquadElement one{rational(1, m), rational(0, m), n};
    const BiquadElement minus_one{rational(-1, m), rational(0, m), n};

    for (int mask = 0; mask < 8; ++mask) {
        BiquadElement prod = one;
        for (int i = 0; i < 3; ++i) {
            if (mask & (1 << i))
                prod = prod * embedded[i];
        }
        for (int sign : {1, -1}) {
            BiquadElement u = sign == 1 ? prod : prod * minus_one;
            if (auto root = is_square_in_biquad(u)) {
                UnitSquareRoot w;
                w.sign = sign;
                w.exponents = {mask & 1, (mask >> 1) & 1, (mask >> 2) & 1};
                w.root = *root;
                ui.certificate.push_back(std::move(w));
            }
        }
    }
    ui.q = static_cast<int>(ui.certificate.size());
    if (ui.q != 1 && ui.q != 2 && ui.q != 4 && ui.q != 8)
        throw std::logic_error("unit_index: square classes do not form a group of order 1, 2, 4 or 8");
    return ui;
}

std::uint64_t BiquadField::two_part() const
{
    return two_part_of(h);
}

BiquadField kuroda_h(std::int64_t m, std::int64_t n)
{
    BiquadField f;
    f.fields = normalise(m, n);
    const std::array<std::int64_t, 3> radicands{f.fields.m, f.fields.n, f.fields.k};
    for (std::size_t i = 0; i < 3; ++i) {
        quadforms::QuadClassGroup cg = quadforms::class_group_of_radicand(radicands[i]);
        f.subfield_h[i] = cg.h_wide;
        f.subfield_two_parts[i] = cg.two_part_wide();
    }
    f.q = unit_index(m, n).q;
    const std::uint64_t numerator = static_cast<std::uint64_t>(f.q) * f.subfield_h[0] * f.subfield_h[1] * f.subfield_h[2];
    if (numerator % 4 != 0)
        throw std::logic_error("kuroda_h: q*h1*h2*h3 = " + std::to_string(numerator) + " is not divisible by 4");
    f.h = numerator / 4;
    return f;
}

RankCertificate rank_certificate_k1(std::uint64_t p, std::uint64_t r)
{
    if (!zsqrt2::satisfies_condition1(p, r))
        throw std::invalid_argument("rank_certificate_k1: (" + std::to_string(p) + ", " + std::to_string(r)
                                    + ") is not an admissible pair");
    RankCertificate rc;
    rc.p = p;
    rc.r = r;
    const auto pr = static_cast<std::int64_t>(p * r);
    BiquadField k1 = kuroda_h(2, pr);
    rc.order_A_k1 = k1.two_part();
    rc.chain.push_back("#A(k1) = " + std::to_string(rc.order_A_k1) + " from h(Q(sqrt2, sqrt" + std::to_string(pr)
                       + ")) = " + std::to_string(k1.q) + "*" + std::to_string(k1.subfield_h[0]) + "*"
                       + std::to_string(k1.subfield_h[1]) + "*" + std::to_string(k1.subfield_h[2]) + "/4 = "
                       + std::to_string(k1.h));

    zsqrt2::ZSqrt2 p1 = zsqrt2::split_rational_prime(p).primes[0].generator();
    rc.p1 = p1.str();
    zsqrt2::SquareMod4 sq = zsqrt2::is_square_mod4(p1);
    rc.p1_square_mod4 = sq.is_square;
    rc.chain.push_back("k1(sqrt" + std::to_string(p) + ")/k1 is unramified: it is K1, the genus field of k lifted to k1");
    rc.chain.push_back("p1 = " + rc.p1 + (sq.is_square ? " is " : " is not ") + "a square mod 4"
                       + (sq.witness ? " (witness " + sq.witness->str() + ")" : std::string())
                       + ", so k1(sqrt p1)/k1 is " + (sq.is_square ? "" : "not certified ") + "unramified above 2");
    rc.chain.push_back("sqrt p and sqrt p1 are independent over k1: p1, p*p1 are not squares in Q(sqrt2)");

    const bool rank_two = sq.is_square;
    if (rc.order_A_k1 == 4 && rank_two) {
        rc.chain.push_back("order 4 with 2-rank 2 forces A(k1) = (2,2)");
        rc.structure = "(2,2)";
    } else {
        rc.chain.push_back("structure not certified");
        rc.structure = "uncertified";
    }
    return rc;
}

}  // namespace towerlab::biquad
