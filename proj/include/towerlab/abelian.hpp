#pragma once

// Finite abelian groups from generators and relations. Used for quadratic
// class groups (composition of forms) and for abelianizations of small
// 2-groups (Cayley tables).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include <gmpxx.h>

namespace towerlab::abelian {

using BigInt = mpz_class;
using Row = std::vector<BigInt>;

/// Invariant factors d1 | d2 | ... (each > 1) of Z^rank / <relations>,
/// computed through a Smith normal form. Throws std::domain_error when the
/// quotient is infinite.
std::vector<std::uint64_t> invariant_factors(const std::vector<Row>& relations, std::size_t rank);

/// Incremental Hermite basis of a relation lattice in Z^rank.
class RelationLattice {
public:
    explicit RelationLattice(std::size_t rank);

    void add(Row relation);
    std::size_t rank() const { return rows_.size(); }
    /// Invariant factors of Z^rank / lattice. Throws std::domain_error when
    /// the lattice does not have full rank.
    std::vector<std::uint64_t> invariants() const;

private:
    std::vector<Row> rows_;  // rows_[j] empty or has its pivot in column j
};

/// A finite abelian group given by its Cayley graph: `act(e, i)` is the
/// index of e * g_i. Elements are 0..size-1.
struct CayleyStructure {
    std::size_t size = 0;
    std::size_t identity = 0;
    std::size_t generators = 0;
    std::vector<std::vector<std::int64_t>> coords;  // exponent vector of each element
    RelationLattice lattice{0};

    std::vector<std::uint64_t> invariants() const { return lattice.invariants(); }
};

/// Builds the relation lattice by breadth-first search from the identity.
/// Every non-tree edge of the search contributes one relation, which
/// generates the full kernel of Z^k -> G. Throws std::invalid_argument when
/// the generators do not reach every element.
CayleyStructure structure_from_action(std::size_t size, std::size_t identity, std::size_t generators,
                                      const std::function<std::size_t(std::size_t, std::size_t)>& act);

/// 2-parts of a list of invariant factors, dropping trivial ones.
std::vector<std::uint64_t> two_parts(const std::vector<std::uint64_t>& invariants);

}  // namespace towerlab::abelian
