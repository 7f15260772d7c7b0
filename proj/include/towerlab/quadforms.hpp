#pragma once

// Indefinite binary quadratic forms and class groups of real quadratic
// fields. Narrow classes are the rho-cycles of reduced forms; the group law
// is Gauss composition followed by reduction and a cycle lookup.

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace towerlab::quadforms {

inline constexpr std::int64_t kMaxDiscriminant = 10'000'000;

/// a*x^2 + b*x*y + c*y^2 of discriminant D = b^2 - 4ac > 0, D not a square.
class QuadForm {
public:
    /// Throws std::invalid_argument when b^2 - 4ac != D or D is not a
    /// positive non-square.
    QuadForm(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t D);

    std::int64_t a() const { return a_; }
    std::int64_t b() const { return b_; }
    std::int64_t c() const { return c_; }
    std::int64_t discriminant() const { return D_; }

    /// 0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b, on integers.
    bool is_reduced() const;
    /// The rho operator (a,b,c) -> (c, b', a'); maps reduced forms to reduced forms.
    QuadForm rho() const;

    std::string str() const;
    friend bool operator==(const QuadForm& f, const QuadForm& g)
    {
        return f.a_ == g.a_ && f.b_ == g.b_ && f.c_ == g.c_ && f.D_ == g.D_;
    }

private:
    std::int64_t a_, b_, c_, D_;
};

/// An equivalent reduced form, reached by iterating rho.
QuadForm reduce(const QuadForm& f);

/// Gauss composition of two forms of the same discriminant, not reduced.
/// Both leading coefficients must be positive.
QuadForm compose(const QuadForm& f, const QuadForm& g);

/// All reduced forms of discriminant D (any sign of a).
std::vector<QuadForm> reduced_forms(std::int64_t D);

/// The narrow class group as explicit data: every reduced form with its cycle.
class FormClassSet {
public:
    explicit FormClassSet(std::int64_t D);

    std::int64_t discriminant() const { return D_; }
    std::size_t class_count() const { return cycles_.size(); }
    const std::vector<std::vector<QuadForm>>& cycles() const { return cycles_; }
    /// Cycle index of a reduced form.
    std::size_t cycle_of(const QuadForm& reduced) const;
    /// Cycle index of any form of discriminant D.
    std::size_t class_of(const QuadForm& f) const;
    /// A form with positive leading coefficient in the given cycle.
    const QuadForm& positive_representative(std::size_t cycle) const;
    std::size_t multiply(std::size_t x, std::size_t y) const;
    std::size_t identity() const { return identity_; }
    /// Class of -(principal form), trivial exactly when a unit of norm -1 exists.
    std::size_t negative_identity() const { return negative_identity_; }

private:
    std::int64_t D_;
    std::vector<std::vector<QuadForm>> cycles_;
    std::vector<std::size_t> positive_rep_;
    std::unordered_map<std::uint64_t, std::size_t> index_;  // keyed on (a, b)
    std::size_t identity_ = 0;
    std::size_t negative_identity_ = 0;
};

struct QuadClassGroup {
    std::int64_t D = 0;
    std::uint64_t h_narrow = 0;
    std::uint64_t h_wide = 0;
    std::vector<std::uint64_t> invariant_factors;       // narrow group
    std::vector<std::uint64_t> wide_invariant_factors;  // ordinary (wide) group
    /// 2-parts of the wide invariant factors: the 2-class group A(F).
    std::vector<std::uint64_t> two_sylow;
    int unit_norm = 0;  // norm of the fundamental unit
    std::vector<QuadForm> generators;

    std::uint64_t two_part_wide() const;
};

/// Narrow and wide class groups of the real quadratic field of fundamental
/// discriminant 0 < D <= 10^7. Throws std::invalid_argument for
/// non-fundamental D and std::out_of_range for D > 10^7.
QuadClassGroup class_group(std::int64_t D);

/// Class group of Q(sqrt(m)) for squarefree m > 1.
QuadClassGroup class_group_of_radicand(std::int64_t m);

std::vector<std::uint64_t> two_sylow_structure(const QuadClassGroup& g);

}  // namespace towerlab::quadforms
