#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace c4star {

/// q = p^e with p prime.
struct PrimePower
{
    int p = 0;
    int e = 0;
    int q = 0;
};

/// Returns the decomposition of q, or nullopt when q is not a prime power.
auto factor_prime_power(long long q) -> std::optional<PrimePower>;

auto is_prime_power(long long q) -> bool;

/// All prime powers in [2, cap], ascending.
auto prime_powers_up_to(int cap) -> std::vector<int>;

/**
 * An element of GF(q) named by its position in the canonical ordering
 * 0, alpha, alpha^2, ..., alpha^(q-1) = 1. The id is the ordering key.
 */
struct FieldElement
{
    std::uint16_t id = 0;

    auto operator<=>(const FieldElement &) const = default;
};

/**
 * Immutable table-driven GF(q), q a prime power.
 *
 * Elements of GF(p^e) are polynomials over GF(p) of degree < e, reduced
 * modulo the smallest monic irreducible polynomial of degree e. A polynomial
 * c_0 + c_1 x + ... is encoded as the integer c_0 + c_1 p + ... ("poly
 * code"); "smallest" compares the monic modulus by that encoding. The
 * primitive element alpha is the primitive element with the smallest code.
 */
class FiniteField
{
public:
    /// Largest supported order.
    static constexpr int max_order = 256;

    /// Throws NotPrimePower unless 2 <= q <= max_order is a prime power.
    explicit FiniteField(int q);

    auto order() const -> int { return q_; }
    auto characteristic() const -> int { return p_; }
    auto degree() const -> int { return e_; }

    /// Coefficients c_0..c_e of the monic modulus (c_e = 1).
    auto modulus() const -> const std::vector<int> & { return modulus_; }

    auto zero() const -> FieldElement { return FieldElement{0}; }
    auto one() const -> FieldElement { return FieldElement{static_cast<std::uint16_t>(q_ - 1)}; }
    auto alpha() const -> FieldElement { return FieldElement{1}; }

    /// The element alpha^j; j is taken modulo q-1.
    auto alpha_pow(long long j) const -> FieldElement;

    /// The element whose ordering key is id (0 <= id < q).
    auto element(int id) const -> FieldElement;

    /// Elements in canonical order.
    auto elements() const -> std::vector<FieldElement>;

    auto from_poly(int code) const -> FieldElement;
    auto to_poly(FieldElement a) const -> int;

    /// Total order key: 0 < alpha < ... < alpha^(q-1); infinity_key() sits above all of them.
    auto ordering_key(FieldElement a) const -> int;
    auto infinity_key() const -> int { return q_; }

    auto add(FieldElement a, FieldElement b) const -> FieldElement;
    auto sub(FieldElement a, FieldElement b) const -> FieldElement;
    auto neg(FieldElement a) const -> FieldElement;
    auto mul(FieldElement a, FieldElement b) const -> FieldElement;
    /// Throws DivisionByZero for a == 0.
    auto inv(FieldElement a) const -> FieldElement;
    auto div(FieldElement a, FieldElement b) const -> FieldElement;
    auto pow(FieldElement a, long long k) const -> FieldElement;

    /// Multiplicative order of a nonzero element.
    auto multiplicative_order(FieldElement a) const -> int;

private:
    auto check(FieldElement a) const -> void;

    int q_, p_, e_;
    std::vector<int> modulus_;
    std::vector<int> id_to_poly_, poly_to_id_;
    std::vector<std::uint16_t> add_table_, neg_table_;
};

} // namespace c4star
