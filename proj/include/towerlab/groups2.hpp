#pragma once

// Finite 2-groups of order <= 32 as explicit Cayley tables: the named
// families, subgroup lattices, commutator subgroups, abelian invariants and
// exhaustive checks of small-order classification claims.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace towerlab::groups2 {

inline constexpr std::size_t kMaxOrder = 32;

/// Subset of elements as a bitmask over element indices.
using Mask = std::uint32_t;
/// Invariant factors of an abelian 2-group, ascending, each dividing the next.
using AbelianType = std::vector<std::uint64_t>;

std::string type_str(const AbelianType& t);

class FiniteGroup2 {
public:
    /// Validates the table: order a power of 2 up to 32, identity at 0,
    /// Latin square, full associativity. Throws std::invalid_argument.
    FiniteGroup2(std::string name, std::size_t order, std::vector<std::uint8_t> table);

    /// Builds the table from a product on indices 0..order-1.
    static FiniteGroup2 from_rule(std::string name, std::size_t order,
                                  const std::function<std::size_t(std::size_t, std::size_t)>& mul);

    const std::string& name() const { return name_; }
    std::size_t order() const { return order_; }
    std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * order_ + b]; }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    std::size_t element_order(std::size_t a) const;
    std::size_t exponent() const;
    bool is_abelian() const;
    Mask all() const { return order_ == 32 ? ~Mask{0} : (Mask{1} << order_) - 1; }
    Mask center() const;

private:
    std::string name_;
    std::size_t order_;
    std::vector<std::uint8_t> table_;
    std::vector<std::uint8_t> inverse_;
};

FiniteGroup2 cyclic(std::size_t n);
/// Direct sum of cyclic 2-groups of the given orders.
FiniteGroup2 abelian(const AbelianType& type);
/// <x, y | x^n, y^k = x^s, y x y^-1 = x^a>, order n*k.
FiniteGroup2 metacyclic(std::string name, std::size_t n, std::size_t k, std::size_t a, std::size_t s);
FiniteGroup2 dihedral(std::size_t order);
FiniteGroup2 quaternion(std::size_t order);
FiniteGroup2 semidihedral(std::size_t order);
FiniteGroup2 modular16();
/// (4) x| (4) with the generator acting by inversion.
FiniteGroup2 C4_semi_C4();
/// (2,2) x| (4) with the generator swapping the two factors.
FiniteGroup2 V4_semi_C4();
/// Central product of D8 and (4), i.e. D8 x C4 modulo the diagonal centre.
FiniteGroup2 D8_central_C4();
FiniteGroup2 Q8_x_C2();
FiniteGroup2 D8_x_C2();
FiniteGroup2 direct_product(const FiniteGroup2& g, const FiniteGroup2& h);
/// G/N. Throws std::invalid_argument unless N is a normal subgroup.
FiniteGroup2 quotient(const FiniteGroup2& g, Mask normal);

/// Constructor by name: "dihedral(16)", "quaternion(8)", "semidihedral(32)",
/// "modular16", "C4_semi_C4", "V4_semi_C4", "D8_central_C4", "Q8_x_C2",
/// "D8_x_C2", "abelian(2,4)". Throws std::invalid_argument on an unknown name.
FiniteGroup2 construct(const std::string& name);

inline int popcount(Mask m) { return __builtin_popcount(m); }

/// Subgroup generated by a set of elements.
Mask closure(const FiniteGroup2& g, Mask generators);
bool is_subgroup(const FiniteGroup2& g, Mask h);
bool is_normal(const FiniteGroup2& g, Mask h);

struct Subgroup {
    Mask elements = 0;
    std::size_t order = 0;
    bool normal = false;
};

/// Every subgroup: cyclic subgroups, closed under pairwise joins until
/// nothing new appears. Sorted by (order, mask).
std::vector<Subgroup> all_subgroups(const FiniteGroup2& g);

Mask commutator_subgroup(const FiniteGroup2& g);

/// The subgroup as a group in its own right, identity first.
FiniteGroup2 subgroup_as_group(const FiniteGroup2& g, Mask h, std::string name = "subgroup");

/// Invariants of an abelian group, through a Smith normal form of its
/// Cayley relations. Throws std::invalid_argument for a nonabelian group.
AbelianType abelian_invariants(const FiniteGroup2& g);
/// Invariants of G/G'.
AbelianType abelianization(const FiniteGroup2& g);

struct Fingerprint {
    std::size_t order = 0;
    std::vector<std::size_t> order_counts;  // index j: elements of order 2^j
    std::size_t center = 0;
    AbelianType abelianization;
    std::size_t subgroups = 0;
    std::size_t normal_subgroups = 0;
    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const FiniteGroup2& g);

/// The 5 groups of order 8 and the 14 of order 16.
std::vector<FiniteGroup2> order8_catalog();
std::vector<FiniteGroup2> order16_catalog();

/// Catalog name of a group of order <= 16 by fingerprint, "unknown" otherwise.
std::string identify(const FiniteGroup2& g);

struct Claim {
    std::string id;
    std::string group;
    std::string statement;
    std::string observed;
    bool passed = false;
};

struct GroupReport {
    std::vector<Claim> claims;
    bool all_passed() const;
};

/// The four subgroup claims on groups of order 16: no (2,4) subgroup in
/// D16, Q16, SD16; one (2,2) in (4)x|(4); subgroups of order 8 of M16 are
/// (8), (8), (2,4); no normal cyclic subgroup of order 4 in (2,2)x|(4).
GroupReport verify_subgroup_claims();

/// The groups with G/G' = (2,2) at orders 8 and 16 are exactly the
/// dihedral, quaternion and semidihedral ones.
GroupReport verify_abelianization_22_filter();

/// Subgroup facts about Q8 x C2, D8 * C4 and D8 x C2 used in ruling these
/// out as Galois groups.
GroupReport verify_order16_case_facts();

struct IndexTwoSubgroup {
    Mask elements = 0;
    std::string type;  // catalog name
    AbelianType abelianization;
    bool allowed = false;  // among (2,2), cyclic 2^r (r in {1,2,m-1}), D_{2^(m-1)}, Q_{2^(m-1)}
};

/// The three index-2 subgroups of a dihedral, quaternion or semidihedral
/// group of order 2^m, 3 <= m <= 5. Throws std::invalid_argument for any
/// other group.
std::vector<IndexTwoSubgroup> index2_subgroup_abelianizations(const FiniteGroup2& g);

}  // namespace towerlab::groups2
