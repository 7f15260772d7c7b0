#pragma once

// Layers of the cyclotomic Z2-extension of Q: minimal polynomials of
// 2cos(pi/2^(n+1)) and the field labels used in oracle records.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace towerlab::towers {

inline constexpr int kMaxLayer = 14;

/// Coefficients of the minimal polynomial of the n-th layer generator,
/// lowest degree first. n = 0 gives x; P_n(x) = P_{n-1}(x^2 - 2).
/// Throws std::out_of_range unless 0 <= n <= kMaxLayer.
std::vector<mpz_class> layer_min_poly(int n);

/// Eisenstein at 2: every lower coefficient even, the constant not divisible by 4.
bool eisenstein_at_2(const std::vector<mpz_class>& poly);

/// P(x^2 - 2) for an integer polynomial, lowest degree first.
std::vector<mpz_class> substitute_x2_minus_2(const std::vector<mpz_class>& poly);

/// omega_1 = sqrt2, omega_{n+1} = sqrt(2 + omega_n), written out.
std::string radicand_chain(int n);

struct LayerGenerator {
    int n = 0;
    std::vector<mpz_class> min_poly;
    std::string radicand_chain;
};

LayerGenerator layer_generator(int n);

enum class FieldKind { Qn, Qn_sqrt_p, kn, Kn };

struct FieldLabel {
    FieldKind kind = FieldKind::Qn;
    int n = 0;
    std::uint64_t p = 0;   // Qn_sqrt_p, Kn
    std::uint64_t r = 0;   // Kn
    std::uint64_t pr = 0;  // kn
    friend bool operator==(const FieldLabel&, const FieldLabel&) = default;
};

/// Canonical label: Q<n>, Q<n>(sqrt<p>), k<n>(pr=<pr>), K<n>(p=<p>,r=<r>).
/// Throws std::invalid_argument when the parameters do not fit the kind.
std::string field_label(FieldKind kind, int n, std::optional<std::uint64_t> p = std::nullopt,
                        std::optional<std::uint64_t> r = std::nullopt);
std::string field_label(const FieldLabel& f);

/// Inverse of field_label. Throws std::invalid_argument on anything that is
/// not a canonical label.
FieldLabel parse_field_label(const std::string& label);

}  // namespace towerlab::towers
