#include "towerlab/abelian.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <utility>

namespace towerlab::abelian {

namespace {

bool is_zero(const Row& r)
{
    return std::all_of(r.begin(), r.end(), [](const BigInt& x) { return x == 0; });
}

// Smith normal form of a square matrix in place; returns |diagonal|.
std::vector<BigInt> smith_diagonal(std::vector<Row> m)
{
    const std::size_t n = m.size();
    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // Pivot: least nonzero |entry| in the trailing block.
            std::size_t pi = n, pj = n;
            for (std::size_t i = t; i < n; ++i) {
                for (std::size_t j = t; j < n; ++j) {
                    if (m[i][j] != 0 && (pi == n || abs(m[i][j]) < abs(m[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
                }
            }
            if (pi == n)
                return {};  // singular
            std::swap(m[t], m[pi]);
            for (auto& row : m)
                std::swap(row[t], row[pj]);

            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (m[i][t] == 0)
                    continue;
                BigInt q;
                mpz_fdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
                for (std::size_t j = t; j < n; ++j)
                    m[i][j] -= q * m[t][j];
                if (m[i][t] != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (m[t][j] == 0)
                    continue;
                BigInt q;
                mpz_fdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
                for (std::size_t i = t; i < n; ++i)
                    m[i][j] -= q * m[i][t];
                if (m[t][j] != 0)
                    clean = false;
            }
            if (!clean)
                continue;
            // Divisibility of the remaining block by the pivot.
            std::size_t bad = n;
            for (std::size_t i = t + 1; i < n && bad == n; ++i) {
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (!mpz_divisible_p(m[i][j].get_mpz_t(), m[t][t].get_mpz_t())) {
                        bad = i;
                        break;
                    }
                }
            }
            if (bad == n)
                break;
            for (std::size_t j = t; j < n; ++j)
                m[t][j] += m[bad][j];
        }
    }
    std::vector<BigInt> diag(n);
    for (std::size_t i = 0; i < n; ++i)
        diag[i] = abs(m[i][i]);
    return diag;
}

}  // namespace

RelationLattice::RelationLattice(std::size_t rank) : rows_(rank) {}

void RelationLattice::add(Row v)
{
    const std::size_t k = rows_.size();
    if (v.size() != k)
        throw std::invalid_argument("relation has wrong length");
    for (std::size_t j = 0; j < k; ++j) {
        if (v[j] == 0)
            continue;
        Row& row = rows_[j];
        if (row.empty()) {
            if (v[j] < 0) {
                for (auto& x : v)
                    x = -x;
            }
            row = std::move(v);
            break;
        }
        BigInt g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), row[j].get_mpz_t(), v[j].get_mpz_t());
        const BigInt a = row[j] / g, b = v[j] / g;
        Row combined(k), rest(k);
        for (std::size_t c = 0; c < k; ++c) {
            combined[c] = s * row[c] + t * v[c];
            rest[c] = b * row[c] - a * v[c];
        }
        row = std::move(combined);
        v = std::move(rest);
    }
    // Keep entries above each pivot reduced modulo the pivot.
    for (std::size_t j = 0; j < k; ++j) {
        if (rows_[j].empty())
            continue;
        for (std::size_t i = 0; i < j; ++i) {
            if (rows_[i].empty())
                continue;
            BigInt q;
            mpz_fdiv_q(q.get_mpz_t(), rows_[i][j].get_mpz_t(), rows_[j][j].get_mpz_t());
            if (q == 0)
                continue;
            for (std::size_t c = j; c < k; ++c)
                rows_[i][c] -= q * rows_[j][c];
        }
    }
}

std::vector<std::uint64_t> RelationLattice::invariants() const
{
    for (const auto& r : rows_) {
        if (r.empty())
            throw std::domain_error("relation lattice is not of full rank: group is infinite");
    }
    std::vector<BigInt> diag = smith_diagonal(rows_);
    if (diag.size() != rows_.size())
        throw std::domain_error("relation lattice is singular");
    std::vector<std::uint64_t> out;
    for (const auto& d : diag) {
        if (d != 1)
            out.push_back(d.get_ui());
    }
    std::sort(out.begin(), out.end());
    for (std::size_t i = 1; i < out.size(); ++i) {
        if (out[i] % out[i - 1] != 0)
            throw std::logic_error("Smith normal form violated the divisibility chain");
    }
    return out;
}

std::vector<std::uint64_t> invariant_factors(const std::vector<Row>& relations, std::size_t rank)
{
    RelationLattice lattice(rank);
    for (const auto& r : relations) {
        if (!is_zero(r))
            lattice.add(r);
    }
    return lattice.invariants();
}

CayleyStructure structure_from_action(std::size_t size, std::size_t identity, std::size_t generators,
                                      const std::function<std::size_t(std::size_t, std::size_t)>& act)
{
    CayleyStructure cs;
    cs.size = size;
    cs.identity = identity;
    cs.generators = generators;
    cs.lattice = RelationLattice(generators);
    cs.coords.assign(size, {});
    std::vector<bool> seen(size, false);
    std::deque<std::size_t> queue{identity};
    seen[identity] = true;
    cs.coords[identity].assign(generators, 0);
    std::size_t reached = 1;
    while (!queue.empty()) {
        std::size_t e = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < generators; ++i) {
            std::size_t f = act(e, i);
            if (f >= size)
                throw std::out_of_range("group action returned an invalid element");
            if (!seen[f]) {
                seen[f] = true;
                ++reached;
                cs.coords[f] = cs.coords[e];
                cs.coords[f][i] += 1;
                queue.push_back(f);
                continue;
            }
            Row rel(generators);
            bool nonzero = false;
            for (std::size_t c = 0; c < generators; ++c) {
                std::int64_t v = cs.coords[e][c] + (c == i ? 1 : 0) - cs.coords[f][c];
                rel[c] = static_cast<long>(v);
                nonzero = nonzero || v != 0;
            }
            if (nonzero)
                cs.lattice.add(std::move(rel));
        }
    }
    if (reached != size)
        throw std::invalid_argument("generators do not generate the whole group");
    return cs;
}

std::vector<std::uint64_t> two_parts(const std::vector<std::uint64_t>& invariants)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d : invariants) {
        std::uint64_t t = d & (~d + 1);  // largest power of 2 dividing d
        if (t > 1)
            out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace towerlab::abelian
