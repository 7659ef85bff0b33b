#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace baer {

/// Element of GF(q), stored as its canonical integer: the base-p digits of
/// the residue polynomial, lowest degree first.
struct FieldElem {
    std::uint32_t v = 0;
    friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

/// Element z1 + eps*z2 of GF(q^2), where eps^2 = omega.
struct ExtElem {
    FieldElem z1;
    FieldElem z2;
    friend constexpr auto operator<=>(const ExtElem&, const ExtElem&) = default;
};

enum class QuadClass { Zero, Square, NonSquare };

QuadClass operator*(QuadClass a, QuadClass b);
const char* to_string(QuadClass c);

/// Arithmetic context for GF(q), q = p^k odd, and for GF(q^2) = GF(q)(eps).
///
/// Immutable after construction. GF(q) multiplication goes through log/exp
/// tables of a primitive element; addition is a table lookup for small q
/// and digit-wise otherwise.
class FieldCtx {
public:
    static constexpr std::uint32_t kMaxOrder = 1u << 16;

    /// Throws std::invalid_argument for even or non-prime p, k == 0, or
    /// p^k > kMaxOrder.
    static FieldCtx make(std::uint32_t p, std::uint32_t k);

    std::uint32_t p() const { return p_; }
    std::uint32_t k() const { return k_; }
    std::uint32_t q() const { return q_; }
    FieldElem omega() const { return omega_; }
    /// Monic reduction polynomial, coefficients lowest degree first (size k+1).
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    FieldElem zero() const { return FieldElem{0}; }
    FieldElem one() const { return FieldElem{1}; }
    /// Element with canonical integer i; requires i < q.
    FieldElem elem(std::uint32_t i) const;
    /// Image of the integer n under Z -> GF(p) -> GF(q).
    FieldElem from_int(long long n) const;

    FieldElem add(FieldElem a, FieldElem b) const;
    FieldElem sub(FieldElem a, FieldElem b) const;
    FieldElem neg(FieldElem a) const { return FieldElem{neg_[a.v]}; }
    FieldElem mul(FieldElem a, FieldElem b) const {
        if (a.v == 0 || b.v == 0) return FieldElem{0};
        std::uint32_t s = log_[a.v] + log_[b.v];
        if (s >= q_ - 1) s -= q_ - 1;
        return FieldElem{exp_[s]};
    }
    FieldElem sqr(FieldElem a) const { return mul(a, a); }
    /// Throws std::domain_error on zero.
    FieldElem inv(FieldElem a) const;
    FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
    FieldElem pow(FieldElem a, std::uint64_t e) const;

    QuadClass character(FieldElem a) const {
        return static_cast<QuadClass>(chi_[a.v]);
    }
    /// a^((q-1)/2), computed without tables; used to cross-check character().
    QuadClass character_by_power(FieldElem a) const;
    bool is_square(FieldElem a) const { return character(a) != QuadClass::NonSquare; }

    // GF(q^2)
    ExtElem ext(FieldElem z1, FieldElem z2 = FieldElem{0}) const { return ExtElem{z1, z2}; }
    ExtElem embed(FieldElem a) const { return ExtElem{a, FieldElem{0}}; }
    ExtElem epsilon() const { return ExtElem{FieldElem{0}, FieldElem{1}}; }
    std::uint32_t ext_order() const { return q_ * q_; }
    /// Canonical ordering of GF(q^2): index z1 + q*z2, so GF(q) comes first.
    ExtElem ext_elem(std::uint32_t index) const;
    std::uint32_t ext_index(const ExtElem& z) const { return z.z1.v + q_ * z.z2.v; }

    ExtElem add(const ExtElem& a, const ExtElem& b) const {
        return ExtElem{add(a.z1, b.z1), add(a.z2, b.z2)};
    }
    ExtElem sub(const ExtElem& a, const ExtElem& b) const {
        return ExtElem{sub(a.z1, b.z1), sub(a.z2, b.z2)};
    }
    ExtElem neg(const ExtElem& a) const { return ExtElem{neg(a.z1), neg(a.z2)}; }
    ExtElem mul(const ExtElem& a, const ExtElem& b) const {
        // (a1 + eps a2)(b1 + eps b2) = (a1 b1 + omega a2 b2) + eps (a1 b2 + a2 b1)
        return ExtElem{add(mul(a.z1, b.z1), mul(omega_, mul(a.z2, b.z2))),
                       add(mul(a.z1, b.z2), mul(a.z2, b.z1))};
    }
    ExtElem mul(const ExtElem& a, FieldElem s) const {
        return ExtElem{mul(a.z1, s), mul(a.z2, s)};
    }
    ExtElem sqr(const ExtElem& a) const { return mul(a, a); }
    ExtElem inv(const ExtElem& a) const;
    ExtElem div(const ExtElem& a, const ExtElem& b) const { return mul(a, inv(b)); }
    ExtElem pow(const ExtElem& a, std::uint64_t e) const;

    /// z^q = z1 - eps*z2.
    ExtElem frobenius(const ExtElem& z) const { return ExtElem{z.z1, neg(z.z2)}; }
    /// z^(q+1) = z1^2 - omega*z2^2.
    FieldElem norm(const ExtElem& z) const {
        return sub(sqr(z.z1), mul(omega_, sqr(z.z2)));
    }
    /// Quadratic character in GF(q^2); z is a square there iff its norm is a
    /// square in GF(q).
    QuadClass character(const ExtElem& z) const { return character(norm(z)); }
    QuadClass character_by_power(const ExtElem& z) const;

    static bool in_base(const ExtElem& z) { return z.z2.v == 0; }
    static bool is_zero(const ExtElem& z) { return z.z1.v == 0 && z.z2.v == 0; }

    /// Canonical integer of a GF(q) element, e.g. "7".
    std::string format(FieldElem a) const;
    /// "z1" when z2 == 0, "z1+e*z2" otherwise.
    std::string format(const ExtElem& z) const;
    /// Inverse of format(ExtElem), also accepting "e*z2"; throws
    /// std::invalid_argument.
    ExtElem parse_ext(const std::string& text) const;

private:
    FieldCtx() = default;

    std::uint32_t poly_mul_mod(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t digit_add(std::uint32_t a, std::uint32_t b) const;

    std::uint32_t p_ = 0;
    std::uint32_t k_ = 0;
    std::uint32_t q_ = 0;
    FieldElem omega_{};
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> neg_;
    std::vector<std::uint8_t> chi_;
    std::vector<std::uint32_t> add_;  // q*q table when q is small, else empty
};

}  // namespace baer
