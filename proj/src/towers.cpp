#include "towerlab/towers.hpp"

#include <regex>
#include <stdexcept>

namespace towerlab::towers {

std::vector<mpz_class> layer_min_poly(int n)
{
    if (n < 0 || n > kMaxLayer)
        throw std::out_of_range("layer_min_poly: n must lie in [0, " + std::to_string(kMaxLayer) + "]");
    if (n == 0)
        return {0, 1};
    // P_n(x) = 2 T_N(x/2) with N = 2^n:
    // sum_k (-1)^k N/(N-k) binom(N-k, k) x^(N-2k).
    const unsigned long N = 1UL << n;
    std::vector<mpz_class> poly(N + 1, 0);
    for (unsigned long k = 0; 2 * k <= N; ++k) {
        mpz_class c;
        mpz_bin_uiui(c.get_mpz_t(), N - k, k);
        c *= N;
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), N - k);
        poly[N - 2 * k] = (k % 2) ? mpz_class(-c) : c;
    }
    return poly;
}

bool eisenstein_at_2(const std::vector<mpz_class>& poly)
{
    if (poly.size() < 2 || poly.back() != 1)
        return false;
    for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
        if (mpz_even_p(poly[i].get_mpz_t()) == 0)
            return false;
    }
    return mpz_divisible_ui_p(poly[0].get_mpz_t(), 4) == 0;
}

std::vector<mpz_class> substitute_x2_minus_2(const std::vector<mpz_class>& poly)
{
    // Horner in the variable y = x^2 - 2.
    std::vector<mpz_class> acc{0};
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
        std::vector<mpz_class> next(acc.size() + 2, 0);
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i + 2] += acc[i];
            next[i] -= 2 * acc[i];
        }
        next[0] += *it;
        while (next.size() > 1 && next.back() == 0)
            next.pop_back();
        acc = std::move(next);
    }
    return acc;
}

std::string radicand_chain(int n)
{
    if (n < 0)
        throw std::out_of_range("radicand_chain: n must be >= 0");
    if (n == 0)
        return "0";
    std::string s = "sqrt(2)";
    for (int i = 1; i < n; ++i)
        s = "sqrt(2 + " + s + ")";
    return s;
}

LayerGenerator layer_generator(int n)
{
    return {n, layer_min_poly(n), radicand_chain(n)};
}

std::string field_label(FieldKind kind, int n, std::optional<std::uint64_t> p, std::optional<std::uint64_t> r)
{
    if (n < 0)
        throw std::invalid_argument("field_label: negative layer index");
    const std::string N = std::to_string(n);
    auto need = [](const std::optional<std::uint64_t>& v, const char* what) {
        if (!v || *v < 2)
            throw std::invalid_argument(std::string("field_label: missing or invalid ") + what);
        return std::to_string(*v);
    };
    auto forbid = [](const std::optional<std::uint64_t>& v, const char* what) {
        if (v)
            throw std::invalid_argument(std::string("field_label: unexpected ") + what);
    };
    switch (kind) {
    case FieldKind::Qn:
        forbid(p, "p");
        forbid(r, "r");
        return "Q" + N;
    case FieldKind::Qn_sqrt_p:
        forbid(r, "r");
        return "Q" + N + "(sqrt" + need(p, "p") + ")";
    case FieldKind::kn:
        need(p, "p");
        need(r, "r");
        return "k" + N + "(pr=" + std::to_string(*p * *r) + ")";
    case FieldKind::Kn:
        return "K" + N + "(p=" + need(p, "p") + ",r=" + need(r, "r") + ")";
    }
    throw std::invalid_argument("field_label: unknown kind");
}

std::string field_label(const FieldLabel& f)
{
    switch (f.kind) {
    case FieldKind::Qn:
        return field_label(f.kind, f.n);
    case FieldKind::Qn_sqrt_p:
        return field_label(f.kind, f.n, f.p);
    case FieldKind::kn:
        if (f.pr < 2)
            throw std::invalid_argument("field_label: missing pr");
        return "k" + std::to_string(f.n) + "(pr=" + std::to_string(f.pr) + ")";
    case FieldKind::Kn:
        return field_label(f.kind, f.n, f.p, f.r);
    }
    throw std::invalid_argument("field_label: unknown kind");
}

FieldLabel parse_field_label(const std::string& label)
{
    static const std::regex re(R"(^(?:Q(\d+)|Q(\d+)\(sqrt(\d+)\)|k(\d+)\(pr=(\d+)\)|K(\d+)\(p=(\d+),r=(\d+)\))$)");
    std::smatch m;
    if (!std::regex_match(label, m, re))
        throw std::invalid_argument("unparseable field label '" + label + "'");
    auto num = [&](int i) { return std::stoull(m[i].str()); };
    FieldLabel f;
    if (m[1].matched) {
        f.kind = FieldKind::Qn;
        f.n = static_cast<int>(num(1));
    } else if (m[2].matched) {
        f.kind = FieldKind::Qn_sqrt_p;
        f.n = static_cast<int>(num(2));
        f.p = num(3);
    } else if (m[4].matched) {
        f.kind = FieldKind::kn;
        f.n = static_cast<int>(num(4));
        f.pr = num(5);
    } else {
        f.kind = FieldKind::Kn;
        f.n = static_cast<int>(num(6));
        f.p = num(7);
        f.r = num(8);
    }
    if (field_label(f) != label)
        throw std::invalid_argument("non-canonical field label '" + label + "'");
    return f;
}

}  // namespace towerlab::towers
